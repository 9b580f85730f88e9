// Copyright 2026 The srcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srcert/types.hpp"

namespace srcert {

// n x n operation table over element indices, row-major, with unique labels.
class FiniteMagma {
 public:
  FiniteMagma() = default;
  FiniteMagma(std::vector<std::string> labels, std::vector<Index> table);

  static FiniteMagma tabulate(std::vector<std::string> labels,
                              const std::function<Index(Index, Index)>& op);

  std::size_t size() const noexcept { return labels_.size(); }
  Index operator()(Index a, Index b) const noexcept { return table_[a * labels_.size() + b]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }
  std::optional<Index> find(std::string_view label) const;
  std::span<const Index> table() const noexcept { return table_; }

  friend bool operator==(const FiniteMagma&, const FiniteMagma&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Index> table_;
};

using OpTable = FiniteMagma;

// Throws DuplicateLabel when two labels coincide.
void require_unique_labels(const std::vector<std::string>& labels);

// Witness (a,b,c) with (ab)c != a(bc), lexicographically first.
Verdict associativity(const FiniteMagma& m, Exec exec = default_exec());
// Witness (a,b) with ab != ba.
Verdict commutativity(const FiniteMagma& m);
std::optional<Index> identity_element(const FiniteMagma& m);
bool is_group(const FiniteMagma& m);

// Smallest subset containing the generators and closed under the operation.
ElementSet generated(const FiniteMagma& m, const ElementSet& generators);

// Group axioms for the subset under the induced operation (closure, identity
// inside the subset, inverses inside the subset).
bool is_subgroup(const FiniteMagma& m, const ElementSet& subset);

}  // namespace srcert

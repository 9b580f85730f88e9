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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace srcert {

using Index = std::uint32_t;

// Result of a decision procedure. When the property fails, witness holds the
// offending tuple of element indices (lexicographically smallest where the
// procedure promises that).
struct Verdict {
  bool holds = true;
  std::vector<Index> witness;

  static Verdict yes() { return {}; }
  static Verdict no(std::vector<Index> w) { return {false, std::move(w)}; }
  explicit operator bool() const noexcept { return holds; }
};

enum class Exec { serial, parallel };

// parallel when the library was built with OpenMP, serial otherwise.
Exec default_exec() noexcept;

// Fixed-universe bitset used for subsets of a finite carrier.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  static ElementSet from(std::size_t universe, std::span<const Index> members);
  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Index i) const noexcept {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1u);
  }
  void insert(Index i);
  void erase(Index i);
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  bool is_full() const noexcept { return count() == universe_; }
  std::vector<Index> elements() const;
  bool subset_of(const ElementSet& other) const noexcept;
  ElementSet& operator|=(const ElementSet& other);
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Canonical order on subsets: by size, then lexicographically on members.
bool canonical_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace srcert

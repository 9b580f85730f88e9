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

#include "srcert/magma.hpp"

#include <unordered_set>

#include "srcert/error.hpp"
#include "srcert/kernels.hpp"

namespace srcert {

void require_unique_labels(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (Index i = 0; i < labels.size(); ++i) {
    if (!seen.insert(labels[i]).second) {
      throw Error(ErrorCode::duplicate_label, "duplicate label '" + labels[i] + "'", {i},
                  labels[i]);
    }
  }
}

FiniteMagma::FiniteMagma(std::vector<std::string> labels, std::vector<Index> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  require_unique_labels(labels_);
  const std::size_t n = labels_.size();
  if (table_.size() != n * n) {
    throw Error(ErrorCode::invalid_argument,
                "operation table has " + std::to_string(table_.size()) + " entries, expected " +
                    std::to_string(n * n));
  }
  for (Index v : table_) {
    if (v >= n) {
      throw Error(ErrorCode::invalid_argument,
                  "table entry " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
    }
  }
}

FiniteMagma FiniteMagma::tabulate(std::vector<std::string> labels,
                                  const std::function<Index(Index, Index)>& op) {
  const auto n = static_cast<Index>(labels.size());
  std::vector<Index> t(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = op(a, b);
  }
  return FiniteMagma(std::move(labels), std::move(t));
}

std::optional<Index> FiniteMagma::find(std::string_view label) const {
  for (Index i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Verdict associativity(const FiniteMagma& m, Exec exec) {
  const auto n = static_cast<Index>(m.size());
  auto hit = kernels::first_triple(
      n, [&](Index a, Index b, Index c) { return m(m(a, b), c) != m(a, m(b, c)); }, exec);
  if (!hit) return Verdict::yes();
  return Verdict::no({(*hit)[0], (*hit)[1], (*hit)[2]});
}

Verdict commutativity(const FiniteMagma& m) {
  const auto n = static_cast<Index>(m.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (m(a, b) != m(b, a)) return Verdict::no({a, b});
    }
  }
  return Verdict::yes();
}

std::optional<Index> identity_element(const FiniteMagma& m) {
  const auto n = static_cast<Index>(m.size());
  for (Index e = 0; e < n; ++e) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) ok = m(e, x) == x && m(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_group(const FiniteMagma& m) {
  if (m.size() == 0 || !associativity(m, Exec::serial)) return false;
  return is_subgroup(m, ElementSet::full(m.size()));
}

ElementSet generated(const FiniteMagma& m, const ElementSet& generators) {
  ElementSet out = generators;
  std::vector<Index> members = out.elements();
  // Products of every new element with every member, both sides, until stable.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Index x = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Index y = members[j];
      for (Index z : {m(x, y), m(y, x)}) {
        if (!out.contains(z)) {
          out.insert(z);
          members.push_back(z);
        }
      }
    }
  }
  return out;
}

bool is_subgroup(const FiniteMagma& m, const ElementSet& subset) {
  const auto elems = subset.elements();
  if (elems.empty()) return false;
  for (Index a : elems) {
    for (Index b : elems) {
      if (!subset.contains(m(a, b))) return false;
    }
  }
  std::optional<Index> e;
  for (Index c : elems) {
    bool ok = true;
    for (Index x : elems) {
      if (m(c, x) != x || m(x, c) != x) {
        ok = false;
        break;
      }
    }
    if (ok) {
      e = c;
      break;
    }
  }
  if (!e) return false;
  for (Index a : elems) {
    bool inv = false;
    for (Index b : elems) {
      if (m(a, b) == *e && m(b, a) == *e) {
        inv = true;
        break;
      }
    }
    if (!inv) return false;
  }
  // Associativity is inherited from the ambient semigroup; checked here for
  // arbitrary magmas.
  for (Index a : elems) {
    for (Index b : elems) {
      for (Index c : elems) {
        if (m(m(a, b), c) != m(a, m(b, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace srcert

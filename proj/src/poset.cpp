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

#include "srcert/poset.hpp"

#include <algorithm>
#include <sstream>

#include "srcert/error.hpp"
#include "srcert/kernels.hpp"

namespace srcert {

std::optional<Index> FinitePoset::find(std::string_view label) const {
  for (Index i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::pair<Index, Index>> FinitePoset::relation() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < size(); ++a) {
    for (Index b : up_[a].elements()) out.emplace_back(a, b);
  }
  return out;
}

FinitePoset poset_from_leq(std::vector<std::string> labels,
                           std::span<const std::pair<Index, Index>> pairs) {
  require_unique_labels(labels);
  const auto n = static_cast<Index>(labels.size());
  std::vector<ElementSet> up(n, ElementSet(n));
  for (Index a = 0; a < n; ++a) up[a].insert(a);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::invalid_argument, "relation pair refers to a missing element");
    }
    up[a].insert(b);
  }
  // Warshall: if a <= k then everything above k is above a.
  for (Index k = 0; k < n; ++k) {
    for (Index a = 0; a < n; ++a) {
      if (up[a].contains(k)) up[a] |= up[k];
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (up[a].contains(b) && up[b].contains(a)) {
        throw Error(ErrorCode::cycle_detected,
                    "'" + labels[a] + "' and '" + labels[b] + "' are mutually related", {a, b});
      }
    }
  }
  FinitePoset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  return p;
}

FinitePoset poset_from_leq(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto index_of = [&](const std::string& s) -> Index {
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) throw Error(ErrorCode::invalid_argument, "unknown label '" + s + "'", {}, s);
    return static_cast<Index>(it - labels.begin());
  };
  std::vector<std::pair<Index, Index>> ip;
  ip.reserve(pairs.size());
  for (const auto& [a, b] : pairs) ip.emplace_back(index_of(a), index_of(b));
  return poset_from_leq(std::move(labels), ip);
}

namespace {

// Least element of `bounds` w.r.t. p, if the set has one.
std::optional<Index> least_of(const FinitePoset& p, const std::vector<Index>& bounds) {
  for (Index u : bounds) {
    bool least = true;
    for (Index v : bounds) {
      if (!p.leq(u, v)) {
        least = false;
        break;
      }
    }
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<Index> greatest_of(const FinitePoset& p, const std::vector<Index>& bounds) {
  for (Index u : bounds) {
    bool greatest = true;
    for (Index v : bounds) {
      if (!p.leq(v, u)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return u;
  }
  return std::nullopt;
}

}  // namespace

FiniteLattice as_lattice(const FinitePoset& p) {
  const auto n = static_cast<Index>(p.size());
  if (n == 0) throw Error(ErrorCode::not_a_lattice, "empty poset");
  std::vector<Index> join(static_cast<std::size_t>(n) * n), meet(static_cast<std::size_t>(n) * n);
  std::vector<Index> ub, lb;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      ub.clear();
      lb.clear();
      for (Index c = 0; c < n; ++c) {
        if (p.leq(a, c) && p.leq(b, c)) ub.push_back(c);
        if (p.leq(c, a) && p.leq(c, b)) lb.push_back(c);
      }
      auto sup = least_of(p, ub);
      if (!sup) {
        throw Error(ErrorCode::not_a_lattice,
                    "no supremum for ('" + p.label(a) + "','" + p.label(b) + "')", {a, b}, "sup");
      }
      auto inf = greatest_of(p, lb);
      if (!inf) {
        throw Error(ErrorCode::not_a_lattice,
                    "no infimum for ('" + p.label(a) + "','" + p.label(b) + "')", {a, b}, "inf");
      }
      join[static_cast<std::size_t>(a) * n + b] = *sup;
      meet[static_cast<std::size_t>(a) * n + b] = *inf;
    }
  }
  FiniteLattice l;
  l.poset_ = p;
  l.join_ = OpTable(p.labels(), std::move(join));
  l.meet_ = OpTable(p.labels(), std::move(meet));
  std::vector<Index> all(n);
  for (Index i = 0; i < n; ++i) all[i] = i;
  l.bottom_ = *least_of(p, all);
  l.top_ = *greatest_of(p, all);
  return l;
}

FiniteLattice lattice_from_tables(const OpTable& join, const OpTable& meet) {
  if (join.labels() != meet.labels()) {
    throw Error(ErrorCode::invalid_argument, "join and meet tables disagree on labels");
  }
  const auto n = static_cast<Index>(join.size());
  auto fail = [](const char* axiom, std::vector<Index> w) {
    throw Error(ErrorCode::axiom_violation, std::string("lattice law fails: ") + axiom, std::move(w), axiom);
  };
  for (Index a = 0; a < n; ++a) {
    if (join(a, a) != a || meet(a, a) != a) fail("idempotence", {a});
    for (Index b = 0; b < n; ++b) {
      if (join(a, b) != join(b, a) || meet(a, b) != meet(b, a)) fail("commutativity", {a, b});
      if (join(a, meet(a, b)) != a || meet(a, join(a, b)) != a) fail("absorption", {a, b});
    }
  }
  if (auto v = associativity(join, Exec::serial); !v) fail("join associativity", v.witness);
  if (auto v = associativity(meet, Exec::serial); !v) fail("meet associativity", v.witness);
  std::vector<std::pair<Index, Index>> pairs;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (meet(a, b) == a) pairs.emplace_back(a, b);
    }
  }
  FiniteLattice l = as_lattice(poset_from_leq(join.labels(), pairs));
  // The order-theoretic tables must reproduce the given ones.
  if (!(l.join_table() == join) || !(l.meet_table() == meet)) {
    throw Error(ErrorCode::axiom_violation, "tables are not the sup/inf of their own order", {},
                "order consistency");
  }
  return l;
}

HasseDiagram hasse(const FinitePoset& p) {
  HasseDiagram h;
  h.nodes = p.labels();
  const auto n = static_cast<Index>(p.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool cover = true;
      for (Index c = 0; c < n && cover; ++c) cover = !(p.less(a, c) && p.less(c, b));
      if (cover) h.covers.emplace_back(a, b);
    }
  }
  return h;
}

FinitePoset closure_of(const HasseDiagram& h) { return poset_from_leq(h.nodes, h.covers); }

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
}  // namespace

std::string to_dot(const HasseDiagram& h, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(std::string(graph_name)) << "\" {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << dot_escape(h.nodes[i]) << "\"];\n";
  }
  for (auto [a, b] : h.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

Verdict is_distributive(const FiniteLattice& l, Exec exec) {
  auto hit = kernels::first_triple(
      static_cast<Index>(l.size()),
      [&](Index x, Index y, Index z) {
        return l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z));
      },
      exec);
  if (!hit) return Verdict::yes();
  return Verdict::no({(*hit)[0], (*hit)[1], (*hit)[2]});
}

Verdict is_modular(const FiniteLattice& l, Exec exec) {
  auto hit = kernels::first_triple(
      static_cast<Index>(l.size()),
      [&](Index x, Index y, Index z) {
        return l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z);
      },
      exec);
  if (!hit) return Verdict::yes();
  return Verdict::no({(*hit)[0], (*hit)[1], (*hit)[2]});
}

std::vector<Index> complements(const FiniteLattice& l, Index x) {
  std::vector<Index> out;
  for (Index y = 0; y < l.size(); ++y) {
    if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) out.push_back(y);
  }
  return out;
}

bool is_complemented(const FiniteLattice& l) {
  for (Index x = 0; x < l.size(); ++x) {
    if (complements(l, x).empty()) return false;
  }
  return true;
}

bool is_boolean(const FiniteLattice& l) { return is_distributive(l) && is_complemented(l); }

std::vector<Index> atoms(const FiniteLattice& l) {
  std::vector<Index> out;
  for (auto [a, b] : hasse(l).covers) {
    if (a == l.bottom()) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AtomIsomorphism boolean_atom_iso(const FiniteLattice& l) {
  if (!is_boolean(l)) throw Error(ErrorCode::not_boolean, "lattice is not a Boolean algebra");
  AtomIsomorphism iso;
  iso.atoms = atoms(l);
  if (iso.atoms.size() >= 64) throw Error(ErrorCode::invalid_argument, "too many atoms for a bitmask image");
  const auto n = static_cast<Index>(l.size());
  iso.image.assign(n, 0);
  for (Index x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < iso.atoms.size(); ++k) {
      if (l.leq(iso.atoms[k], x)) iso.image[x] |= std::uint64_t{1} << k;
    }
  }
  // Bijective onto the power set and a homomorphism for both operations.
  const std::uint64_t subsets = std::uint64_t{1} << iso.atoms.size();
  std::vector<bool> hit(subsets, false);
  bool ok = n == subsets;
  for (Index x = 0; x < n && ok; ++x) {
    ok = iso.image[x] < subsets && !hit[iso.image[x]];
    if (ok) hit[iso.image[x]] = true;
  }
  for (Index a = 0; a < n && ok; ++a) {
    for (Index b = 0; b < n && ok; ++b) {
      ok = iso.image[l.join(a, b)] == (iso.image[a] | iso.image[b]) &&
           iso.image[l.meet(a, b)] == (iso.image[a] & iso.image[b]);
    }
  }
  if (!ok) throw Error(ErrorCode::not_boolean, "atom map is not a lattice isomorphism");
  return iso;
}

namespace lattices {

FiniteLattice chain(std::vector<std::string> bottom_to_top) {
  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 0; i + 1 < bottom_to_top.size(); ++i) pairs.emplace_back(i, i + 1);
  return as_lattice(poset_from_leq(std::move(bottom_to_top), pairs));
}

FiniteLattice chain(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "chain needs at least one element");
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) labels.push_back("a" + std::to_string(i));
  if (n > 1) labels.emplace_back("1");
  return chain(std::move(labels));
}

std::vector<std::string> power_set_labels(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t b = 0; b < k; ++b) {
      if (mask >> b & 1) {
        if (!first) s += ",";
        s += "x" + std::to_string(b + 1);
        first = false;
      }
    }
    labels.push_back(s + "}");
  }
  return labels;
}

FiniteLattice power_set(std::size_t k) {
  if (k > 16) throw Error(ErrorCode::invalid_argument, "power set too large");
  auto labels = power_set_labels(k);
  const auto n = static_cast<Index>(labels.size());
  std::vector<std::pair<Index, Index>> pairs;
  for (Index a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!(a >> b & 1)) pairs.emplace_back(a, a | (Index{1} << b));
    }
  }
  return as_lattice(poset_from_leq(std::move(labels), pairs));
}

FiniteLattice pentagon() {
  return as_lattice(poset_from_leq({"0", "a", "b", "c", "1"},
                                   {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}}));
}

FiniteLattice diamond() {
  return as_lattice(poset_from_leq(
      {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
}

FiniteLattice square() {
  return as_lattice(poset_from_leq({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
}

}  // namespace lattices

}  // namespace srcert

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

#include "srcert/substructures.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "srcert/error.hpp"
#include "srcert/kernels.hpp"

namespace srcert {

ElementSet closure(const Structure& s, const ElementSet& gens) {
  ElementSet out = gens;
  std::vector<Index> members = out.elements();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Index x = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Index y = members[j];
      for (Index z : {s.add(x, y), s.mul(x, y), s.mul(y, x)}) {
        if (!out.contains(z)) {
          out.insert(z);
          members.push_back(z);
        }
      }
    }
  }
  return out;
}

bool closed_under_ops(const Structure& s, const ElementSet& subset) {
  const auto e = subset.elements();
  for (Index a : e) {
    for (Index b : e) {
      if (!subset.contains(s.add(a, b)) || !subset.contains(s.mul(a, b))) return false;
    }
  }
  return true;
}

std::optional<Index> relative_zero(const Structure& s, const ElementSet& subset) {
  const auto e = subset.elements();
  for (Index z : e) {
    if (std::all_of(e.begin(), e.end(), [&](Index x) { return s.add(z, x) == x; })) return z;
  }
  return std::nullopt;
}

std::optional<Index> relative_one(const Structure& s, const ElementSet& subset) {
  const auto e = subset.elements();
  for (Index u : e) {
    if (std::all_of(e.begin(), e.end(), [&](Index x) { return s.mul(u, x) == x && s.mul(x, u) == x; })) {
      return u;
    }
  }
  return std::nullopt;
}

bool is_subsemiring(const Structure& s, const ElementSet& subset) {
  return !subset.empty() && closed_under_ops(s, subset) && relative_zero(s, subset).has_value();
}

SubsetCensus closed_subsets(const Structure& s, std::size_t cap, Exec exec) {
  return closed_subsets_between(s, ElementSet(s.size()), ElementSet::full(s.size()), cap, exec);
}

SubsetCensus closed_subsets_between(const Structure& s, const ElementSet& base, const ElementSet& within,
                                    std::size_t cap, Exec exec) {
  const auto n = static_cast<Index>(s.size());
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> level;
  SubsetCensus census;
  auto admit = [&](ElementSet&& c, std::vector<ElementSet>& into) {
    if (!c.subset_of(within) || seen.contains(c)) return true;
    if (seen.size() >= cap) return false;
    seen.insert(c);
    into.push_back(std::move(c));
    return true;
  };
  if (!base.empty()) {
    census.complete = admit(closure(s, base), level);
  } else {
    for (Index x = 0; x < n && census.complete; ++x) {
      if (!within.contains(x)) continue;
      ElementSet g(n);
      g.insert(x);
      census.complete = admit(closure(s, g), level);
    }
  }
  while (!level.empty() && census.complete) {
    // Each frontier set is extended by every outside element independently.
    auto grown = kernels::map_indices<std::vector<ElementSet>>(
        level.size(),
        [&](std::size_t i) {
          std::vector<ElementSet> out;
          const ElementSet& cur = level[i];
          for (Index x = 0; x < n; ++x) {
            if (cur.contains(x) || !within.contains(x)) continue;
            ElementSet g = cur;
            g.insert(x);
            out.push_back(closure(s, g));
          }
          return out;
        },
        exec);
    std::vector<ElementSet> next;
    for (auto& batch : grown) {
      for (auto& c : batch) {
        if (!admit(std::move(c), next)) {
          census.complete = false;
          break;
        }
      }
      if (!census.complete) break;
    }
    level = std::move(next);
  }
  census.sets.assign(seen.begin(), seen.end());
  std::sort(census.sets.begin(), census.sets.end(), canonical_less);
  return census;
}

SubsetCensus subsemirings(const Structure& s, std::size_t cap, Exec exec) {
  SubsetCensus all = closed_subsets(s, cap, exec);
  SubsetCensus out;
  out.complete = all.complete;
  for (auto& c : all.sets) {
    if (relative_zero(s, c)) out.sets.push_back(std::move(c));
  }
  return out;
}

bool is_ideal(const Structure& s, const ElementSet& subset, Side side) {
  if (!is_subsemiring(s, subset)) return false;
  for (Index i : subset.elements()) {
    for (Index x = 0; x < s.size(); ++x) {
      if (side != Side::left && !subset.contains(s.mul(i, x))) return false;
      if (side != Side::right && !subset.contains(s.mul(x, i))) return false;
    }
  }
  return true;
}

std::size_t Congruence::classes() const {
  if (class_of.empty()) return 0;
  return static_cast<std::size_t>(*std::max_element(class_of.begin(), class_of.end())) + 1;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Index{0}); }
  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Index> parent_;
};

Congruence normalize(UnionFind& uf, std::size_t n) {
  Congruence c;
  c.class_of.resize(n);
  std::vector<Index> id(n, static_cast<Index>(-1));
  Index next = 0;
  for (Index x = 0; x < n; ++x) {
    const Index r = uf.find(x);
    if (id[r] == static_cast<Index>(-1)) id[r] = next++;
    c.class_of[x] = id[r];
  }
  return c;
}

}  // namespace

Congruence congruence_closure(const Structure& s, Index a, Index b) {
  const auto n = static_cast<Index>(s.size());
  UnionFind uf(n);
  std::vector<std::pair<Index, Index>> work{{a, b}};
  // Merged pairs only; pairs implied by transitivity inherit compatibility.
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    for (Index c = 0; c < n; ++c) {
      work.emplace_back(s.add(c, x), s.add(c, y));
      work.emplace_back(s.add(x, c), s.add(y, c));
      work.emplace_back(s.mul(c, x), s.mul(c, y));
      work.emplace_back(s.mul(x, c), s.mul(y, c));
    }
  }
  return normalize(uf, n);
}

bool is_congruence(const Structure& s, const Congruence& c) {
  const auto n = static_cast<Index>(s.size());
  if (c.class_of.size() != n) return false;
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      if (!c.related(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (!c.related(s.add(z, x), s.add(z, y)) || !c.related(s.add(x, z), s.add(y, z)) ||
            !c.related(s.mul(z, x), s.mul(z, y)) || !c.related(s.mul(x, z), s.mul(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

Verdict is_congruence_simple(const Structure& s, Exec exec) {
  const auto n = static_cast<Index>(s.size());
  auto hit = kernels::first_pair(
      n, [&](Index a, Index b) { return a < b && !congruence_closure(s, a, b).is_full(); }, exec);
  if (!hit) return Verdict::yes();
  return Verdict::no({(*hit)[0], (*hit)[1]});
}

std::vector<ElementSet> maximal_subgroups(const FiniteMagma& m) {
  const auto n = static_cast<Index>(m.size());
  std::vector<ElementSet> out;
  for (Index e = 0; e < n; ++e) {
    if (m(e, e) != e) continue;
    auto in_corner = [&](Index x) { return m(e, x) == x && m(x, e) == x; };
    ElementSet h(n);
    for (Index x = 0; x < n; ++x) {
      if (!in_corner(x)) continue;
      for (Index y = 0; y < n; ++y) {
        if (in_corner(y) && m(x, y) == e && m(y, x) == e) {
          h.insert(x);
          break;
        }
      }
    }
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

std::vector<ElementSet> subgroups_by_closure(const FiniteMagma& m) {
  const auto n = static_cast<Index>(m.size());
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (const ElementSet& h : maximal_subgroups(m)) {
    const auto members = h.elements();
    std::vector<ElementSet> level;
    for (Index x : members) {
      ElementSet g(n);
      g.insert(x);
      ElementSet c = generated(m, g);
      if (seen.insert(c).second) level.push_back(std::move(c));
    }
    // In a finite group every closed subset is a subgroup.
    while (!level.empty()) {
      std::vector<ElementSet> next;
      for (const ElementSet& base : level) {
        for (Index x : members) {
          if (base.contains(x)) continue;
          ElementSet g = base;
          g.insert(x);
          ElementSet c = generated(m, g);
          if (seen.insert(c).second) next.push_back(std::move(c));
        }
      }
      level = std::move(next);
    }
  }
  std::vector<ElementSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<ElementSet> subgroups_exhaustive(const FiniteMagma& m) {
  const auto n = static_cast<Index>(m.size());
  if (n > 20) throw Error(ErrorCode::cap_exceeded, "exhaustive subgroup search limited to 20 elements");
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet s(n);
    for (Index i = 0; i < n; ++i) {
      if (mask >> i & 1) s.insert(i);
    }
    if (is_subgroup(m, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::vector<ElementSet> subgroups_of_semigroup(const FiniteMagma& m, SubgroupMethod method) {
  if (method == SubgroupMethod::exhaustive) return subgroups_exhaustive(m);
  return subgroups_by_closure(m);
}

std::optional<ElementSet> s_semigroup_witness(const FiniteMagma& m) {
  for (ElementSet& g : subgroups_of_semigroup(m)) {
    if (g.count() >= 2 && g.count() < m.size()) return std::move(g);
  }
  return std::nullopt;
}

HomReport check_hom(std::span<const Index> f, const Structure& src, const Structure& dst, HomKind kind) {
  if (f.size() != src.size()) throw Error(ErrorCode::invalid_argument, "map size differs from source size");
  for (Index v : f) {
    if (v >= dst.size()) throw Error(ErrorCode::invalid_argument, "map value outside target");
  }
  if (kind == HomKind::lattice && !(src.has(Flag::lattice_derived) && dst.has(Flag::lattice_derived))) {
    throw Error(ErrorCode::invalid_argument, "lattice homomorphism needs lattice-derived structures");
  }
  const bool check_add = kind != HomKind::multiplicative;
  const bool check_mul = kind != HomKind::additive;
  HomReport r;
  const auto n = static_cast<Index>(src.size());
  for (Index a = 0; a < n && r.verdict.holds; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (check_add && f[src.add(a, b)] != dst.add(f[a], f[b])) {
        r.verdict = Verdict::no({a, b});
        r.failed_law = kind == HomKind::lattice ? "join" : "addition";
        break;
      }
      if (check_mul && f[src.mul(a, b)] != dst.mul(f[a], f[b])) {
        r.verdict = Verdict::no({a, b});
        r.failed_law = kind == HomKind::lattice ? "meet" : "multiplication";
        break;
      }
    }
  }
  if (kind == HomKind::ring && dst.zero()) {
    ElementSet ker(n);
    for (Index x = 0; x < n; ++x) {
      if (f[x] == *dst.zero()) ker.insert(x);
    }
    r.kernel = std::move(ker);
  }
  return r;
}

StarReport check_inductive_star(const Structure& s, const FinitePoset& order, std::span<const Index> star) {
  if (!s.one()) throw Error(ErrorCode::missing_one, "inductive star needs a multiplicative identity");
  const auto n = static_cast<Index>(s.size());
  if (order.size() != n || star.size() != n) {
    throw Error(ErrorCode::invalid_argument, "order and star must cover the carrier");
  }
  for (Index v : star) {
    if (v >= n) throw Error(ErrorCode::invalid_argument, "star value outside carrier");
  }
  const Index one = *s.one();
  StarReport r;
  for (Index a = 0; a < n && r.monotone.holds; ++a) {
    for (Index b = 0; b < n && r.monotone.holds; ++b) {
      if (!order.leq(a, b)) continue;
      for (Index c = 0; c < n; ++c) {
        if (!order.leq(s.add(a, c), s.add(b, c)) || !order.leq(s.add(c, a), s.add(c, b)) ||
            !order.leq(s.mul(a, c), s.mul(b, c)) || !order.leq(s.mul(c, a), s.mul(c, b))) {
          r.monotone = Verdict::no({a, b, c});
          break;
        }
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (!order.leq(s.add(s.mul(a, star[a]), one), star[a])) {
      r.fixed_point = Verdict::no({a});
      break;
    }
  }
  for (Index a = 0; a < n && r.induction.holds; ++a) {
    for (Index b = 0; b < n && r.induction.holds; ++b) {
      for (Index x = 0; x < n; ++x) {
        if (order.leq(s.add(s.mul(a, x), b), x) && !order.leq(s.mul(star[a], b), x)) {
          r.induction = Verdict::no({a, b, x});
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace srcert

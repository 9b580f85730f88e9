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

#include "srcert/certifier.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <string>

#include "srcert/error.hpp"
#include "srcert/kernels.hpp"
#include "srcert/substructures.hpp"

namespace srcert {

std::size_t default_cap() {
  if (const char* env = std::getenv("SRCERT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultSubsetCap;
}

int exit_code(const Certificate& c) {
  if (c.holds) return 0;
  return c.complete_search ? 1 : 2;
}

Verdict is_semifield(const Structure& s) {
  const auto n = static_cast<Index>(s.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (s.mul(a, b) != s.mul(b, a)) return Verdict::no({a, b});
    }
  }
  if (!s.one() || !s.zero() || *s.one() == *s.zero()) return Verdict::no({});
  if (auto v = is_strict(s); !v) return v;
  return zero_divisor_free(s);
}

namespace {

struct Found {
  ElementSet set;
  Index z = 0;
  Index u = 0;
};

bool commutes_on(const Structure& s, const std::vector<Index>& m) {
  for (Index a : m) {
    for (Index b : m) {
      if (s.mul(a, b) != s.mul(b, a)) return false;
    }
  }
  return true;
}

// Relative zero and one of a closed set when it is a semifield (or a field).
std::optional<std::pair<Index, Index>> semifield_ids(const Structure& s, const ElementSet& c, bool field) {
  const auto z = relative_zero(s, c);
  const auto u = relative_one(s, c);
  if (!z || !u || *z == *u) return std::nullopt;
  const auto m = c.elements();
  if (!commutes_on(s, m)) return std::nullopt;
  for (Index a : m) {
    bool neg = false, inv = a == *z;
    for (Index b : m) {
      const Index sum = s.add(a, b), prod = s.mul(a, b);
      if (!field && sum == *z && (a != *z || b != *z)) return std::nullopt;
      if (!field && prod == *z && a != *z && b != *z) return std::nullopt;
      neg = neg || sum == *z;
      inv = inv || prod == *u;
    }
    if (field && !(neg && inv)) return std::nullopt;
  }
  return std::make_pair(*z, *u);
}

bool preferred(const Structure& s, const Found& a, const Found& b) {
  const bool ga = s.zero() == a.z && s.one() == a.u;
  const bool gb = s.zero() == b.z && s.one() == b.u;
  if (ga != gb) return ga;
  if (a.set != b.set) return canonical_less(a.set, b.set);
  return std::pair(a.z, a.u) < std::pair(b.z, b.u);
}

// Any semifield inside `within` contains closure({z, u}) for its own zero
// and one, and that closure is again a semifield (a field in the finite
// case), so scanning pair closures decides existence.
std::optional<Found> best_semifield(const Structure& s, const ElementSet& within, const ElementSet* exclude,
                                    bool field, Exec exec) {
  const auto members = within.elements();
  auto per_z = kernels::map_indices<std::optional<Found>>(
      members.size(),
      [&](std::size_t i) {
        std::optional<Found> best;
        const Index z = members[i];
        for (Index u : members) {
          if (u == z) continue;
          const ElementSet c = closure(s, ElementSet::from(s.size(), std::array<Index, 2>{z, u}));
          if (!c.subset_of(within) || (exclude && c == *exclude)) continue;
          const auto ids = semifield_ids(s, c, field);
          if (!ids || ids->first != z || ids->second != u) continue;
          Found f{c, z, u};
          if (!best || preferred(s, f, *best)) best = std::move(f);
        }
        return best;
      },
      exec);
  std::optional<Found> best;
  for (auto& f : per_z) {
    if (f && (!best || preferred(s, *f, *best))) best = std::move(*f);
  }
  return best;
}

bool absorbs(const Structure& s, const ElementSet& into, const ElementSet& by, bool left, bool right) {
  const auto m = into.elements();
  for (Index x : m) {
    for (Index c : by.elements()) {
      if (left && !into.contains(s.mul(c, x))) return false;
      if (right && !into.contains(s.mul(x, c))) return false;
    }
  }
  return true;
}

// Smallest set holding g, closed under + and *, and under multiplication on
// both sides by members of `by`.
ElementSet absorbing_closure(const Structure& s, Index g, const ElementSet& by) {
  ElementSet c(s.size());
  c.insert(g);
  const auto scal = by.elements();
  bool grew = true;
  while (grew) {
    grew = false;
    const auto m = c.elements();
    auto put = [&](Index x) {
      if (!c.contains(x)) {
        c.insert(x);
        grew = true;
      }
    };
    for (Index a : m) {
      for (Index b : m) {
        put(s.add(a, b));
        put(s.mul(a, b));
      }
      for (Index k : scal) {
        put(s.mul(k, a));
        put(s.mul(a, k));
      }
    }
  }
  return c;
}

struct Side2 {
  bool left = true;
  bool right = true;
};

Side2 side_flags(const Parts& parts) {
  if (const Part* p = find_part(parts, "side")) {
    const auto* t = std::get_if<std::string>(p);
    if (!t || (*t != "left" && *t != "right" && *t != "two_sided")) {
      throw Error(ErrorCode::invalid_argument, "side must be left, right or two_sided", {}, "side");
    }
    return {*t != "right", *t != "left"};
  }
  return {};
}

const ElementSet& input_set(const Subject& subj, const Parts& parts, const std::string& role) {
  const Part* p = find_part(parts, role);
  const auto* e = p ? std::get_if<ElementSet>(p) : nullptr;
  if (!e || e->universe() != subj.structure().size()) {
    throw Error(ErrorCode::type_mismatch, "role " + role + " must be a subset of " + subj.name(), {}, role);
  }
  return *e;
}

class TableSearch {
 public:
  TableSearch(const Subject& subj, const SearchOptions& opts) : subj_(subj), s_(subj.structure()), opts_(opts) {}

  bool complete = true;
  Parts parts;

  void put(const std::string& role, const ElementSet& e) { set_part(parts, role, e); }
  void put(const std::string& role, Index i) { set_part(parts, role, subj_.element(i)); }
  void put_semifield(const Found& f, const char* set, const char* z, const char* u) {
    put(set, f.set);
    put(z, f.z);
    put(u, f.u);
  }

  std::vector<ElementSet> closed(const ElementSet& base, const ElementSet& within) {
    auto c = closed_subsets_between(s_, base, within, opts_.cap, opts_.exec);
    complete = complete && c.complete;
    return std::move(c.sets);
  }

  std::optional<Found> semifield_in(const ElementSet& within, const ElementSet* exclude, bool field = false) {
    return best_semifield(s_, within, exclude, field, opts_.exec);
  }

  bool run(Property p, const Parts& given) {
    const std::size_t n = s_.size();
    const ElementSet full = ElementSet::full(n);
    const ElementSet none(n);
    switch (p) {
      case Property::semifield:
        return static_cast<bool>(is_semifield(s_));
      case Property::prime_semifield: {
        if (!is_semifield(s_)) return false;
        if (auto f = semifield_in(full, &full)) {
          put_semifield(*f, "B", "z", "u");
          return false;
        }
        return true;
      }
      case Property::s_semiring_1:
      case Property::s_semiring_2:
      case Property::s_semifield_2:
      case Property::s_anti_semifield: {
        if (p == Property::s_anti_semifield && !s_.has(Flag::ring)) return false;
        const bool field = p == Property::s_semiring_2 || p == Property::s_semifield_2;
        if (auto f = semifield_in(full, &full, field)) {
          put_semifield(*f, "A", "z", "u");
          return true;
        }
        return false;
      }
      case Property::s_subsemiring:
      case Property::s_ideal:
      case Property::s_dual_ideal: {
        const ElementSet& P = input_set(subj_, given, "P");
        const auto sd = side_flags(given);
        const auto zP = relative_zero(s_, P);
        if (P.empty() || P.is_full() || !closed_under_ops(s_, P) || !zP) return false;
        if (p == Property::s_subsemiring) {
          auto f = semifield_in(P, &P);
          if (!f) return false;
          put("P", P);
          put("zP", *zP);
          put_semifield(*f, "A", "z", "u");
          return true;
        }
        for (const auto& A : closed(none, P)) {
          if (A == P) continue;
          const auto ids = semifield_ids(s_, A, false);
          if (!ids) continue;
          if (p == Property::s_ideal && !absorbs(s_, A, P, sd.left, sd.right)) continue;
          if (p == Property::s_dual_ideal && !dual_absorbs(A, ids->first, P)) continue;
          put("P", P);
          put("zP", *zP);
          put_semifield({A, ids->first, ids->second}, "A", "z", "u");
          return true;
        }
        return false;
      }
      case Property::s_pseudo_subsemiring: {
        const ElementSet& A = input_set(subj_, given, "A");
        if (A.empty()) return false;
        const auto supers = closed(A, full);
        // a containing semifield first, any S-subsemiring after
        for (int pass = 0; pass < 2; ++pass) {
          for (const auto& P : supers) {
            if (P == A || P.is_full()) continue;
            const auto zP = relative_zero(s_, P);
            if (!zP) continue;
            std::optional<Found> b;
            if (pass == 0) {
              if (auto ids = semifield_ids(s_, P, false)) b = Found{P, ids->first, ids->second};
            } else {
              b = semifield_in(P, nullptr);
            }
            if (!b) continue;
            put("A", A);
            put("P", P);
            put("zP", *zP);
            put_semifield(*b, "B", "z", "u");
            return true;
          }
        }
        return false;
      }
      case Property::s_pseudo_ideal: {
        const ElementSet& P = input_set(subj_, given, "P");
        const auto sd = side_flags(given);
        if (P.empty()) return false;
        for (const auto& A : closed(P, full)) {
          if (A == P || A.is_full()) continue;
          const auto ids = semifield_ids(s_, A, false);
          if (!ids || !absorbs_into(P, A, sd)) continue;
          put("P", P);
          put_semifield({A, ids->first, ids->second}, "A", "z", "u");
          return true;
        }
        return false;
      }
      case Property::s_pseudo_dual_ideal: {
        const ElementSet& P = input_set(subj_, given, "P");
        if (P.empty()) return false;
        for (const auto& A : closed(P, full)) {
          if (A == P) continue;
          const auto zA = relative_zero(s_, A);
          if (!zA || !dual_absorbs_all(P, A)) continue;
          auto b = semifield_in(A, nullptr);
          if (!b) continue;
          put("P", P);
          put("A", A);
          put("zA", *zA);
          put_semifield(*b, "B", "z", "u");
          return true;
        }
        return false;
      }
      case Property::s_semidivision_ring: {
        const auto all = closed(none, full);
        std::vector<std::pair<ElementSet, Index>> divs;
        for (const auto& c : all) {
          const auto z = relative_zero(s_, c);
          if (z && !commutes_on(s_, c.elements()) && zero_divisor_free_on(c, *z)) divs.emplace_back(c, *z);
        }
        if (divs.empty()) return false;
        for (const auto& A : all) {
          if (A.is_full()) continue;
          const auto zA = relative_zero(s_, A);
          if (!zA || commutes_on(s_, A.elements())) continue;
          const auto div = std::find_if(divs.begin(), divs.end(), [&](const auto& d) { return d.first.subset_of(A); });
          if (div == divs.end()) continue;
          auto b = semifield_in(A, &A);
          if (!b) continue;
          put("A", A);
          put("zA", *zA);
          put_semifield(*b, "B", "z", "u");
          put("P", div->first);
          put("zP", div->second);
          return true;
        }
        return false;
      }
      case Property::s_semifield_1: {
        if (!is_semifield(s_)) return false;
        std::optional<ElementSet> best;
        for (Index g = 0; g < n; ++g) {
          if (g == *s_.zero()) continue;
          ElementSet c = absorbing_closure(s_, g, full);
          if (c.is_full()) continue;
          if (!best || c.count() > best->count()) best = std::move(c);
        }
        if (!best) return false;
        put("A", *best);
        return true;
      }
      case Property::s_weak_semifield: {
        auto all = closed(none, full);
        std::stable_sort(all.begin(), all.end(), [](const ElementSet& a, const ElementSet& b) {
          return a.count() > b.count();
        });
        for (const auto& P : all) {
          if (P.is_full()) continue;
          const auto ids = semifield_ids(s_, P, false);
          if (!ids) continue;
          std::optional<ElementSet> best;
          for (Index g : P.elements()) {
            if (g == ids->first) continue;
            ElementSet t = absorbing_closure(s_, g, P);
            if (t == P || !t.subset_of(P)) continue;
            if (!best || t.count() > best->count()) best = std::move(t);
          }
          if (!best) continue;
          put("P", P);
          put("zP", ids->first);
          put("uP", ids->second);
          put("T", *best);
          return true;
        }
        return false;
      }
      case Property::s_anti_semiring: {
        if (!s_.has(Flag::ring)) return false;
        for (const auto& A : closed(none, full)) {
          const auto z = relative_zero(s_, A);
          if (!z) continue;
          const auto m = A.elements();
          const bool lacks = std::any_of(m.begin(), m.end(), [&](Index a) {
            return std::none_of(m.begin(), m.end(), [&](Index b) { return s_.add(a, b) == *z; });
          });
          if (!lacks) continue;
          put("A", A);
          put("z", *z);
          return true;
        }
        return false;
      }
      case Property::s_anti_ideal: {
        const ElementSet& P = input_set(subj_, given, "P");
        const ElementSet& T = input_set(subj_, given, "T");
        if (!s_.has(Flag::ring) || P.empty() || T.is_full() || !P.subset_of(T)) return false;
        const auto ids = semifield_ids(s_, T, false);
        const auto zP = relative_zero(s_, P);
        if (!ids || !zP || !closed_under_ops(s_, P) || !closed_under_ops(s_, T) ||
            !absorbs(s_, P, T, false, true)) {
          return false;
        }
        put("P", P);
        put("zP", *zP);
        put("T", T);
        put("z", ids->first);
        put("u", ids->second);
        return true;
      }
      case Property::s_zero_divisor:
      case Property::s_anti_zero_divisor:
      case Property::s_idempotent:
      case Property::s_unit:
        break;
    }
    throw Error(ErrorCode::invalid_argument, "element properties go through the tuple scan");
  }

 private:
  bool dual_absorbs(const ElementSet& A, Index z, const ElementSet& P) const {
    for (Index a : A.elements()) {
      if (a == z) continue;
      for (Index q : P.elements()) {
        if (!A.contains(s_.add(a, q))) return false;
      }
    }
    return true;
  }
  bool dual_absorbs_all(const ElementSet& P, const ElementSet& A) const {
    for (Index q : P.elements()) {
      for (Index a : A.elements()) {
        if (!P.contains(s_.add(q, a))) return false;
      }
    }
    return true;
  }
  bool absorbs_into(const ElementSet& P, const ElementSet& A, Side2 sd) const {
    for (Index q : P.elements()) {
      for (Index a : A.elements()) {
        if (sd.right && !P.contains(s_.mul(q, a))) return false;
        if (sd.left && !P.contains(s_.mul(a, q))) return false;
      }
    }
    return true;
  }
  bool zero_divisor_free_on(const ElementSet& c, Index z) const {
    const auto m = c.elements();
    for (Index a : m) {
      for (Index b : m) {
        if (a != z && b != z && s_.mul(a, b) == z) return false;
      }
    }
    return true;
  }

  const Subject& subj_;
  const Structure& s_;
  const SearchOptions& opts_;
};

// ---- element-level tuple scans ----

using Tuple4 = std::array<Index, 4>;

std::vector<Tuple4> element_tuples(const Structure& s, Property p, std::size_t limit, Exec exec) {
  const auto n = static_cast<Index>(s.size());
  const auto z = s.zero();
  const auto one = s.one();
  if (p == Property::s_unit ? !one : !z) return {};
  auto m = [&](Index a, Index b) { return s.mul(a, b); };

  // pairs multiplying to zero (either order) and pairs with ab = 1
  std::vector<std::pair<Index, Index>> zero_pairs, unit_pairs;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (z && (m(a, b) == *z || m(b, a) == *z)) zero_pairs.emplace_back(a, b);
      if (one && m(a, b) == *one) unit_pairs.emplace_back(a, b);
    }
  }

  auto per_first = kernels::map_indices<std::vector<Tuple4>>(
      n,
      [&](std::size_t i) {
        std::vector<Tuple4> out;
        const auto a = static_cast<Index>(i);
        switch (p) {
          case Property::s_zero_divisor: {
            // (a, b, x, y)
            if (a == *z) break;
            for (Index b = 0; b < n && out.size() < limit; ++b) {
              if (b == *z || m(a, b) != *z) continue;
              for (Index x = 0; x < n && out.size() < limit; ++x) {
                if (x == a || x == b || x == *z || (m(a, x) != *z && m(x, a) != *z)) continue;
                for (Index y = 0; y < n && out.size() < limit; ++y) {
                  if (y == a || y == b || y == *z || y == x) continue;
                  if (m(b, y) != *z && m(y, b) != *z) continue;
                  if (m(x, y) == *z && m(y, x) == *z) continue;
                  out.push_back({a, b, x, y});
                }
              }
            }
            break;
          }
          case Property::s_anti_zero_divisor: {
            // (x, y, a, b) with x = first index
            const Index x = a;
            for (Index y = 0; y < n && out.size() < limit; ++y) {
              if (m(x, y) == *z) continue;
              for (const auto& [c, d] : zero_pairs) {
                if (out.size() >= limit) break;
                if (c == *z || c == x || c == y || d == *z || d == x || d == y) continue;
                if (m(c, x) == *z && m(x, c) == *z) continue;
                if (m(d, y) == *z && m(y, d) == *z) continue;
                out.push_back({x, y, c, d});
              }
            }
            break;
          }
          case Property::s_idempotent: {
            if (a == *z || m(a, a) != a) break;
            for (Index b = 0; b < n && out.size() < limit; ++b) {
              if (b == a || m(b, b) != a) continue;
              const bool first = m(a, b) == b || m(b, a) == b;
              const bool second = m(b, a) == a || m(a, b) == a;
              if (first != second) out.push_back({a, b, 0, 0});
            }
            break;
          }
          case Property::s_unit: {
            const Index x = a;
            if (x == *one) break;
            for (Index y = 0; y < n && out.size() < limit; ++y) {
              if (m(x, y) != *one) continue;
              for (const auto& [c, d] : unit_pairs) {
                if (out.size() >= limit) break;
                if (c == x || c == y || c == *one || d == x || d == y || d == *one) continue;
                const bool i1 = m(x, c) == y || m(c, x) == y;
                const bool i2 = m(y, d) == x || m(d, y) == x;
                if (i1 || i2) out.push_back({x, y, c, d});
              }
            }
            break;
          }
          default:
            break;
        }
        return out;
      },
      exec);
  std::vector<Tuple4> all;
  for (auto& v : per_first) {
    for (auto& t : v) {
      if (all.size() >= limit) return all;
      all.push_back(t);
    }
  }
  return all;
}

Parts tuple_parts(const Subject& subj, Property p, const Tuple4& t) {
  Parts parts;
  const auto& roles = witness_roles(p);
  for (std::size_t i = 0; i < roles.size(); ++i) set_part(parts, roles[i], subj.element(t[i]));
  return parts;
}

// ---- symbolic subjects ----

bool is_tuple(const SymbolicSemiring& r) { return dynamic_cast<const TupleSemiring*>(&r) != nullptr; }

// Coordinates that carry a copy of one component as a subsemiring: every
// coordinate of a tuple, the top-left corner of a matrix, the identity
// coordinate of a group algebra.
std::vector<std::size_t> slab_coordinates(const SymbolicSemiring& r) {
  std::vector<std::size_t> out;
  if (is_tuple(r)) {
    for (std::size_t i = 0; i < r.dim(); ++i) out.push_back(i);
    return out;
  }
  if (dynamic_cast<const MatrixSemiring*>(&r)) return {0};
  if (auto u = r.one()) {
    for (std::size_t i = 0; i < u->size(); ++i) {
      if (sgn((*u)[i]) != 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

enum class SlabKind { semifield, field, anti };

// Per-coordinate semifield (field) choice, with its zero and one values.
std::optional<std::tuple<CoordSet, mpq_class, mpq_class>> coordinate_piece(const Component& c, SlabKind kind,
                                                                          const SearchOptions& opts) {
  if (c.is_tag()) {
    const NumberTag t = c.number_tag();
    switch (kind) {
      case SlabKind::semifield:
        if (t == NumberTag::Z0 || t == NumberTag::Q0 || t == NumberTag::R0) {
          return std::tuple{CoordSet::everything(), mpq_class(0), mpq_class(1)};
        }
        return std::tuple{CoordSet::inside(NumberTag::Z0), mpq_class(0), mpq_class(1)};
      case SlabKind::field:
        if (t == NumberTag::Q) return std::tuple{CoordSet::everything(), mpq_class(0), mpq_class(1)};
        if (t == NumberTag::R) return std::tuple{CoordSet::inside(NumberTag::Q), mpq_class(0), mpq_class(1)};
        return std::nullopt;
      case SlabKind::anti:
        if (t == NumberTag::Z) return std::tuple{CoordSet::inside(NumberTag::Z0), mpq_class(0), mpq_class(1)};
        if (t == NumberTag::Q || t == NumberTag::R) {
          return std::tuple{CoordSet::inside(NumberTag::Q0), mpq_class(0), mpq_class(1)};
        }
        return std::nullopt;
    }
    return std::nullopt;
  }
  if (kind == SlabKind::anti) return std::nullopt;
  const Structure& s = c.structure();
  auto f = best_semifield(s, ElementSet::full(s.size()), nullptr, kind == SlabKind::field, opts.exec);
  if (!f) return std::nullopt;
  std::vector<mpq_class> vals;
  for (Index i : f->set.elements()) vals.emplace_back(i);
  return std::tuple{CoordSet::listed(std::move(vals)), mpq_class(f->z), mpq_class(f->u)};
}

std::optional<Parts> symbolic_slab(const Subject& subj, Property p, SlabKind kind, const SearchOptions& opts) {
  const SymbolicSemiring& r = subj.ring();
  for (std::size_t c : slab_coordinates(r)) {
    auto piece = coordinate_piece(r.coords()[c], kind, opts);
    if (!piece) continue;
    auto& [set, zv, uv] = *piece;
    SymbolicSubset A{std::vector<CoordSet>(r.dim(), CoordSet::zero_only()), false};
    A.coords[c] = set;
    Element z = r.zero(), u = r.zero();
    z[c] = zv;
    u[c] = uv;
    Parts parts;
    set_part(parts, "A", A);
    set_part(parts, "z", z);
    set_part(parts, "u", u);
    if (replay(subj, p, parts).ok) return parts;
  }
  return std::nullopt;
}

bool single_tag(const SymbolicSemiring& r, NumberTag t) {
  return is_tuple(r) && r.dim() == 1 && r.coords()[0].is_tag() && r.coords()[0].number_tag() == t;
}

std::optional<Parts> symbolic_search(const Subject& subj, Property p, const SearchOptions& opts) {
  const SymbolicSemiring& r = subj.ring();
  switch (p) {
    case Property::s_semiring_1:
      return symbolic_slab(subj, p, SlabKind::semifield, opts);
    case Property::s_semiring_2:
    case Property::s_semifield_2:
      return symbolic_slab(subj, p, SlabKind::field, opts);
    case Property::s_anti_semifield:
      return symbolic_slab(subj, p, SlabKind::anti, opts);
    case Property::s_semifield_1:
      if (single_tag(r, NumberTag::Z0)) {
        Parts parts;
        set_part(parts, "A", SymbolicSubset{{CoordSet::multiples_of(2)}, false});
        if (replay(subj, p, parts).ok) return parts;
      }
      return std::nullopt;
    case Property::s_anti_semiring: {
      for (const auto& c : r.coords()) {
        if (!c.is_tag() || !tag_is_group(c.number_tag())) return std::nullopt;
      }
      Parts parts;
      set_part(parts, "A", SymbolicSubset{std::vector<CoordSet>(r.dim(), CoordSet::inside(NumberTag::Z0)), false});
      set_part(parts, "z", r.zero());
      if (replay(subj, p, parts).ok) return parts;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

void require_inputs(Property p, const Parts& given) {
  for (const auto& role : input_roles(p)) {
    if (!find_part(given, role)) {
      throw Error(ErrorCode::needs_witness, std::string(to_string(p)) + " needs the subset " + role, {}, role);
    }
  }
}

void add_notes(Certificate& c) {
  switch (c.property) {
    case Property::s_semifield_1:
    case Property::s_weak_semifield:
      c.notes.push_back(
          "k-semi algebra read as a proper subset, not {0}, closed under + and * and absorbing multiplication by the "
          "surrounding semifield");
      break;
    case Property::s_ideal:
      c.notes.push_back("ideal clause read literally: products of A with P land in the semifield A");
      break;
    case Property::s_idempotent:
      c.notes.push_back("b ranges over elements other than a; the two product conditions are exclusive");
      break;
    default:
      break;
  }
}

Certificate finish(const Subject& subj, Certificate c, const SearchOptions& opts) {
  c.subject = subj.describe();
  add_notes(c);
  Verification v = verify(subj, c, opts.cap);
  if (c.holds && !v.ok) throw std::logic_error("search produced a certificate that does not replay");
  c.transcript = std::move(v.transcript);
  return c;
}

}  // namespace

Verdict is_prime_semifield(const Structure& s, const SearchOptions& opts) {
  if (auto v = is_semifield(s); !v) return v;
  const ElementSet full = ElementSet::full(s.size());
  if (auto f = best_semifield(s, full, &full, false, opts.exec)) return Verdict::no(f->set.elements());
  return Verdict::yes();
}

Certificate certify(const Subject& subj, Property p, const Parts& given, const SearchOptions& opts) {
  require_inputs(p, given);
  Certificate c;
  c.property = p;
  const auto& roles = witness_roles(p);
  const bool supplied =
      !roles.empty() && std::all_of(roles.begin(), roles.end(), [&](const auto& r) { return find_part(given, r); });
  if (supplied) {
    Verification v = replay(subj, p, given);
    c.parts = given;
    c.holds = v.ok;
    c.complete_search = v.ok;
    if (!v.ok) c.notes.push_back("supplied witness rejected; no search was run");
    c.subject = subj.describe();
    add_notes(c);
    c.transcript = std::move(v.transcript);
    return c;
  }

  if (subj.is_table()) {
    if (is_element_property(p)) {
      auto tuples = element_tuples(subj.structure(), p, 1, opts.exec);
      c.holds = !tuples.empty();
      if (c.holds) c.parts = tuple_parts(subj, p, tuples.front());
      return finish(subj, std::move(c), opts);
    }
    TableSearch search(subj, opts);
    c.holds = search.run(p, given);
    c.complete_search = c.holds || search.complete;
    c.parts = std::move(search.parts);
    if (const Part* side = find_part(given, "side")) set_part(c.parts, "side", *side);
    for (const auto& role : input_roles(p)) {
      if (!find_part(c.parts, role)) set_part(c.parts, role, *find_part(given, role));
    }
    return finish(subj, std::move(c), opts);
  }

  if (p == Property::semifield) {
    Verification v = replay(subj, p, {});
    c.holds = v.ok;
    c.subject = subj.describe();
    c.transcript = std::move(v.transcript);
    return c;
  }
  if (auto parts = symbolic_search(subj, p, opts)) {
    c.holds = true;
    c.parts = std::move(*parts);
    return finish(subj, std::move(c), opts);
  }
  // negative answers on archetypes rest on recorded rules
  c.holds = false;
  c.complete_search = true;
  Verification v = verify(subj, c, opts.cap);
  if (!v.ok) {
    throw Error(ErrorCode::needs_witness,
                std::string(to_string(p)) + " on " + subj.describe() + " needs a supplied witness");
  }
  c.subject = subj.describe();
  add_notes(c);
  c.transcript = std::move(v.transcript);
  return c;
}

std::vector<Certificate> find_all(const Subject& subj, Property p, const SearchOptions& opts) {
  if (!is_element_property(p)) throw Error(ErrorCode::invalid_argument, "find_all takes an element property");
  if (!subj.is_table()) throw Error(ErrorCode::needs_witness, "tuple scans need a finite table subject");
  std::vector<Certificate> out;
  for (const auto& t : element_tuples(subj.structure(), p, opts.limit, opts.exec)) {
    Certificate c;
    c.property = p;
    c.holds = true;
    c.parts = tuple_parts(subj, p, t);
    out.push_back(finish(subj, std::move(c), opts));
  }
  return out;
}

}  // namespace srcert

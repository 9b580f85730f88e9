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

#include "srcert/semivector.hpp"

#include <algorithm>
#include <numeric>

#include "srcert/constructions.hpp"
#include "srcert/error.hpp"
#include "srcert/kernels.hpp"
#include "srcert/substructures.hpp"

namespace srcert {

// ---- finite spaces ----

FiniteSpace::FiniteSpace(std::shared_ptr<const Structure> scalars, FiniteMagma add,
                         std::vector<std::vector<Index>> action)
    : scalars_(std::move(scalars)), add_(std::move(add)), action_(std::move(action)) {
  if (action_.size() != scalars_->size()) {
    throw Error(ErrorCode::invalid_argument, "action needs one row per scalar");
  }
  for (const auto& row : action_) {
    if (row.size() != add_.size()) throw Error(ErrorCode::invalid_argument, "action row needs one entry per vector");
    for (Index v : row) {
      if (v >= add_.size()) throw Error(ErrorCode::invalid_argument, "action value outside the vectors");
    }
  }
  const auto n = static_cast<Index>(add_.size());
  for (Index e = 0; e < n && !zero_; ++e) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = add_(e, a) == a && add_(a, e) == a;
    if (ok) zero_ = e;
  }
}

SpaceAxioms check_space_axioms(const FiniteSpace& sp) {
  const auto n = static_cast<Index>(sp.size());
  const Structure& sc = sp.scalars();
  const auto k = static_cast<Index>(sc.size());
  auto fail = [](int no, std::string law, std::vector<Index> w) { return SpaceAxioms{Verdict::no(std::move(w)), no, std::move(law)}; };
  // 1 and 6 hold by construction: tables are total and in range.
  if (auto v = associativity(sp.add_table(), Exec::serial); !v) return fail(2, "addition is associative", v.witness);
  if (!sp.zero()) return fail(3, "a zero vector exists", {});
  if (auto v = commutativity(sp.add_table()); !v) return fail(4, "addition is commutative", v.witness);
  if (!sc.zero() || !sc.one()) return fail(5, "scalars have 0 and 1", {});
  const Index z = *sp.zero();
  for (Index a = 0; a < n; ++a) {
    if (sp.act(*sc.zero(), a) != z) return fail(5, "0 . v = 0", {a});
  }
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) {
      for (Index v = 0; v < n; ++v) {
        if (sp.act(sc.mul(a, b), v) != sp.act(a, sp.act(b, v))) return fail(7, "(ab)v = a(bv)", {a, b, v});
        if (sp.act(sc.add(a, b), v) != sp.add(sp.act(a, v), sp.act(b, v))) {
          return fail(9, "(a+b)v = av + bv", {a, b, v});
        }
      }
    }
    for (Index u = 0; u < n; ++u) {
      for (Index v = 0; v < n; ++v) {
        if (sp.act(a, sp.add(u, v)) != sp.add(sp.act(a, u), sp.act(a, v))) {
          return fail(8, "a(u+v) = au + av", {a, u, v});
        }
      }
    }
  }
  for (Index v = 0; v < n; ++v) {
    if (sp.act(*sc.one(), v) != v) return fail(10, "1 . v = v", {v});
  }
  return {};
}

FiniteSpace lattice_space(const FiniteLattice& l) {
  auto c2 = std::make_shared<const Structure>(chain_lattice(2));
  std::vector<std::vector<Index>> action(2);
  for (Index c = 0; c < 2; ++c) {
    for (Index x = 0; x < l.size(); ++x) action[c].push_back(c == *c2->zero() ? l.bottom() : x);
  }
  return FiniteSpace(std::move(c2), l.join_table(), std::move(action));
}

ElementSet span(const FiniteSpace& sp, const ElementSet& gens) {
  ElementSet out(sp.size());
  if (sp.zero()) out.insert(*sp.zero());
  out |= gens;
  bool grew = true;
  while (grew) {
    grew = false;
    const auto m = out.elements();
    auto put = [&](Index x) {
      if (!out.contains(x)) {
        out.insert(x);
        grew = true;
      }
    };
    for (Index a : m) {
      for (Index b : m) put(sp.add(a, b));
      for (Index c = 0; c < sp.scalars().size(); ++c) put(sp.act(c, a));
    }
  }
  return out;
}

namespace {

// Calls fn(coefficients) for every assignment whose first coefficient is
// `first`; stops early when fn returns true.
template <class Fn>
bool each_assignment(std::size_t k, Index scalars, Index first, Fn&& fn) {
  std::vector<Index> c(k, 0);
  if (k == 0) return fn(c);
  c[0] = first;
  while (true) {
    if (fn(c)) return true;
    std::size_t i = k;
    while (i > 1 && ++c[i - 1] == scalars) c[--i] = 0;
    if (i <= 1) return false;
  }
}

Index evaluate(const FiniteSpace& sp, const std::vector<Index>& gens, const std::vector<Index>& c) {
  Index acc = *sp.zero();
  for (std::size_t i = 0; i < gens.size(); ++i) acc = sp.add(acc, sp.act(c[i], gens[i]));
  return acc;
}

}  // namespace

std::vector<std::vector<Index>> representations(const FiniteSpace& sp, const std::vector<Index>& basis, Index v,
                                                Exec exec) {
  if (!sp.zero()) throw Error(ErrorCode::invalid_argument, "space has no zero vector");
  const auto k = static_cast<Index>(sp.scalars().size());
  if (basis.empty()) {
    if (v == *sp.zero()) return {{}};
    return {};
  }
  auto per = kernels::map_indices<std::vector<std::vector<Index>>>(
      k,
      [&](std::size_t first) {
        std::vector<std::vector<Index>> out;
        each_assignment(basis.size(), k, static_cast<Index>(first), [&](const std::vector<Index>& c) {
          if (evaluate(sp, basis, c) == v) out.push_back(c);
          return false;
        });
        return out;
      },
      exec);
  std::vector<std::vector<Index>> all;
  for (auto& p : per) all.insert(all.end(), p.begin(), p.end());
  return all;
}

std::size_t representation_count(const FiniteSpace& sp, const std::vector<Index>& basis, Index v, Exec exec) {
  return representations(sp, basis, v, exec).size();
}

std::optional<std::vector<Index>> combination(const FiniteSpace& sp, const std::vector<Index>& gens, Index v,
                                              Exec exec) {
  if (!sp.zero()) throw Error(ErrorCode::invalid_argument, "space has no zero vector");
  const auto k = static_cast<Index>(sp.scalars().size());
  if (gens.empty()) {
    if (v == *sp.zero()) return std::vector<Index>{};
    return std::nullopt;
  }
  std::vector<std::vector<Index>> found(k);
  auto hit = kernels::first_index(
      k,
      [&](std::size_t first) {
        return each_assignment(gens.size(), k, static_cast<Index>(first), [&](const std::vector<Index>& c) {
          if (evaluate(sp, gens, c) != v) return false;
          found[first] = c;
          return true;
        });
      },
      exec);
  if (!hit) return std::nullopt;
  return found[*hit];
}

Dependence is_independent(const FiniteSpace& sp, const std::vector<Index>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ElementSet others(sp.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.insert(gens[j]);
    }
    // duplicates count as dependent
    bool dup = false;
    for (std::size_t j = 0; j < i; ++j) dup = dup || gens[j] == gens[i];
    if (dup || span(sp, others).contains(gens[i])) return {false, i, true};
  }
  return {};
}

BasisCensus bases(const FiniteSpace& sp, std::size_t size_cap) {
  BasisCensus out;
  const auto n = static_cast<Index>(sp.size());
  const ElementSet full = ElementSet::full(n);
  std::vector<Index> pick;
  // subsets in order of size, then lexicographic
  for (std::size_t k = 0; k <= std::min<std::size_t>(size_cap, n); ++k) {
    pick.assign(k, 0);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      ElementSet g = ElementSet::from(n, pick);
      if (span(sp, g) == full && is_independent(sp, pick).independent) out.bases.push_back(pick);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // a larger independent spanning set would have been reachable only past the cap
  out.complete = size_cap >= n;
  out.unique = out.bases.size() == 1 && out.complete;
  if (out.unique) out.dimension = out.bases.front().size();
  return out;
}

std::optional<ElementSet> s_semivector_witness(const FiniteSpace& sp) { return s_semigroup_witness(sp.add_table()); }

// ---- tuple spaces ----

namespace {

int level(NumberTag t) {
  switch (t) {
    case NumberTag::Z0:
    case NumberTag::Z: return 0;
    case NumberTag::Q0:
    case NumberTag::Q: return 1;
    case NumberTag::R0:
    case NumberTag::R: return 2;
  }
  return 0;
}

bool nonneg(NumberTag t) { return !tag_is_group(t); }

std::vector<Component> components(const std::vector<NumberTag>& tags) {
  std::vector<Component> out;
  for (NumberTag t : tags) out.push_back(Component::tag(t));
  return out;
}

}  // namespace

TupleSpace::TupleSpace(std::vector<NumberTag> factors, NumberTag scalars)
    : factors_(std::move(factors)), scalars_(scalars) {
  if (factors_.empty()) throw Error(ErrorCode::invalid_argument, "a tuple space needs a factor");
  ring_ = std::make_shared<TupleSemiring>(components(factors_));
  // scaling by the scalars must stay inside every factor
  for (NumberTag f : factors_) {
    if (level(scalars_) > level(f) || (tag_is_group(scalars_) && nonneg(f))) {
      throw Error(ErrorCode::invalid_argument,
                  std::string(to_string(f)) + " is not closed under scaling by " + std::string(to_string(scalars_)));
    }
  }
}

bool TupleSpace::contains(const Element& v) const { return ring_->contains(v); }
Element TupleSpace::add(const Element& a, const Element& b) const { return ring_->add(a, b); }
Element TupleSpace::zero() const { return ring_->zero(); }
std::string TupleSpace::format(const Element& v) const { return ring_->format(v); }

Element TupleSpace::scale(const mpq_class& c, const Element& v) const {
  Element out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

std::string TupleSpace::describe() const { return ring_->describe() + " over " + std::string(to_string(scalars_)); }

std::vector<NumberTag> valid_scalar_choices(const std::vector<NumberTag>& factors) {
  int lowest = 2;
  for (NumberTag f : factors) lowest = std::min(lowest, level(f));
  std::vector<NumberTag> out{NumberTag::Z0};
  if (lowest >= 1) out.push_back(NumberTag::Q0);
  if (lowest >= 2) out.push_back(NumberTag::R0);
  return out;
}

bool has_group_factor(const std::vector<NumberTag>& factors) {
  return std::any_of(factors.begin(), factors.end(), [](NumberTag t) { return tag_is_group(t); });
}

namespace {

using Matrix = std::vector<std::vector<mpq_class>>;

// Solves cols * c = v for c; a particular solution with free variables at
// zero, nullopt when inconsistent.
std::optional<std::vector<mpq_class>> solve(const std::vector<Element>& cols, const Element& v) {
  const std::size_t rows = v.size(), k = cols.size();
  Matrix m(rows, std::vector<mpq_class>(k + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < k; ++j) m[r][j] = cols[j][r];
    m[r][k] = v[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < k && r < rows; ++j) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][j]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpq_class inv = 1 / m[r][j];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || sgn(m[q][j]) == 0) continue;
      const mpq_class f = m[q][j];
      for (std::size_t c = j; c <= k; ++c) m[q][c] -= f * m[r][c];
    }
    pivot_col.push_back(j);
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q) {
    if (sgn(m[q][k]) != 0) return std::nullopt;
  }
  std::vector<mpq_class> c(k, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) c[pivot_col[i]] = m[i][k];
  return c;
}

std::size_t rank(const std::vector<Element>& cols, std::size_t rows) {
  Matrix m(rows, std::vector<mpq_class>(cols.size()));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) m[r][j] = cols[j][r];
  }
  std::size_t rk = 0;
  for (std::size_t j = 0; j < cols.size() && rk < rows; ++j) {
    std::size_t p = rk;
    while (p < rows && sgn(m[p][j]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rk]);
    for (std::size_t q = rk + 1; q < rows; ++q) {
      if (sgn(m[q][j]) == 0) continue;
      const mpq_class f = m[q][j] / m[rk][j];
      for (std::size_t c = j; c < cols.size(); ++c) m[q][c] -= f * m[rk][c];
    }
    ++rk;
  }
  return rk;
}

bool is_zero(const Element& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

mpq_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return mpq_class(f);
}

}  // namespace

SpanMembership in_span(const TupleSpace& sp, const std::vector<Element>& gens, const Element& v,
                       std::int64_t search_bound) {
  if (!sp.contains(v)) throw Error(ErrorCode::type_mismatch, "vector outside the space");
  for (const auto& g : gens) {
    if (!sp.contains(g)) throw Error(ErrorCode::type_mismatch, "generator outside the space");
  }
  SpanMembership out;
  out.coefficients.assign(gens.size(), 0);
  if (is_zero(v)) {
    out.member = true;
    return out;
  }
  const NumberTag s = sp.scalars();
  if (level(s) == 0) {
    bool all_nonneg = !std::any_of(v.begin(), v.end(), [](const mpq_class& q) { return sgn(q) < 0; });
    for (const auto& g : gens) {
      for (const auto& q : g) all_nonneg = all_nonneg && sgn(q) >= 0;
    }
    std::vector<mpq_class> bound(gens.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (is_zero(gens[i])) continue;
      if (!all_nonneg) {
        bound[i] = search_bound;
        continue;
      }
      std::optional<mpq_class> b;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (sgn(gens[i][j]) == 0) continue;
        // support outside v forces a zero coefficient
        const mpq_class q = floor_q(v[j] / gens[i][j]);
        b = b ? std::min(*b, q) : q;
      }
      bound[i] = std::max(*b, mpq_class(0));
    }
    out.member = false;
    // depth-first over generators; with nonnegative data the remainder never goes negative
    std::vector<mpq_class> coeff(gens.size(), 0);
    std::function<bool(std::size_t, const Element&)> go = [&](std::size_t i, const Element& rest) -> bool {
      if (i == gens.size()) return is_zero(rest);
      Element r = rest;
      for (mpq_class c = 0; c <= bound[i]; ++c) {
        if (c > 0) {
          bool negative = false;
          for (std::size_t j = 0; j < r.size(); ++j) {
            r[j] -= gens[i][j];
            negative = negative || sgn(r[j]) < 0;
          }
          if (all_nonneg && negative) break;
        }
        coeff[i] = c;
        if (go(i + 1, r)) return true;
      }
      coeff[i] = 0;
      return false;
    };
    out.member = go(0, v);
    if (out.member) out.coefficients = coeff;
    out.complete = out.member || all_nonneg;
    return out;
  }
  if (tag_is_group(s)) {
    // field scalars: plain linear algebra
    if (auto c = solve(gens, v)) {
      out.member = true;
      out.coefficients = *c;
    }
    return out;
  }
  // Q0 / R0 scalars: nonnegative solution on an independent subset
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!is_zero(gens[i])) idx.push_back(i);
  }
  const std::size_t m = idx.size();
  const std::size_t maxk = std::min(m, v.size());
  for (std::size_t k = 1; k <= maxk; ++k) {
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<Element> cols;
      for (std::size_t p : pick) cols.push_back(gens[idx[p]]);
      if (rank(cols, v.size()) == k) {
        if (auto c = solve(cols, v)) {
          if (std::all_of(c->begin(), c->end(), [](const mpq_class& q) { return sgn(q) >= 0; })) {
            out.member = true;
            for (std::size_t i = 0; i < k; ++i) out.coefficients[idx[pick[i]]] = (*c)[i];
            return out;
          }
        }
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

Dependence is_independent(const TupleSpace& sp, const std::vector<Element>& gens) {
  Dependence out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Element> others;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    const auto r = in_span(sp, others, gens[i]);
    if (r.member) return {false, i, true};
    out.complete = out.complete && r.complete;
  }
  return out;
}

TupleBasis standard_basis(const TupleSpace& sp) {
  TupleBasis out;
  const std::size_t n = sp.dim();
  const bool nonneg_factors =
      std::all_of(sp.factors().begin(), sp.factors().end(), [](NumberTag t) { return nonneg(t); });
  const bool spans = nonneg_factors && std::all_of(sp.factors().begin(), sp.factors().end(),
                                                   [&](NumberTag t) { return level(t) <= level(sp.scalars()); });
  if (!spans) return out;
  for (std::size_t j = 0; j < n; ++j) {
    Element e = sp.zero();
    e[j] = 1;
    out.basis.push_back(e);
  }
  const bool integral = level(sp.scalars()) == 0 &&
                        std::all_of(sp.factors().begin(), sp.factors().end(), [](NumberTag t) { return level(t) == 0; });
  if (!integral) return out;
  // e_j = x + y with x, y >= 0 integral forces x <= e_j, so x ranges over {0,1}^n
  bool all = true;
  for (std::size_t j = 0; j < n; ++j) {
    bool ok = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Element x(n), y(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = (mask >> i) & 1u;
        y[i] = out.basis[j][i] - x[i];
      }
      if (!sp.contains(y)) continue;
      if (!is_zero(x) && !is_zero(y)) ok = false;
    }
    // c . u = e_j with c a nonzero integer scalar needs c = 1
    for (int c = 2; c <= 3; ++c) {
      Element u(n);
      for (std::size_t i = 0; i < n; ++i) u[i] = out.basis[j][i] / c;
      if (sp.contains(u)) ok = false;
    }
    out.indecomposable.push_back({"unit vector " + std::to_string(j + 1) + " is not a sum of two nonzero vectors", ok});
    all = all && ok;
  }
  // every spanning set holds each indecomposable unit vector, and the units
  // alone already span, so no other independent spanning set exists
  out.unique = all;
  if (all) out.dimension = n;
  return out;
}

// ---- product subsets of tuple spaces ----

namespace {

const CoordSet& coord(const SymbolicSubset& w, std::size_t i) { return w.coords.at(i); }

void check_shape(const TupleSpace& sp, const SymbolicSubset& w) {
  if (w.coords.size() != sp.dim()) throw Error(ErrorCode::type_mismatch, "subset has the wrong number of coordinates");
  if (w.or_zero) throw Error(ErrorCode::invalid_argument, "space subsets must be plain products");
}

bool coord_has_zero(const CoordSet& c) {
  switch (c.kind) {
    case CoordSet::Kind::positive: return false;
    case CoordSet::Kind::values: return std::find(c.values.begin(), c.values.end(), 0) != c.values.end();
    default: return true;
  }
}

bool coord_is_zero(const CoordSet& c) {
  switch (c.kind) {
    case CoordSet::Kind::zero: return true;
    case CoordSet::Kind::multiples: return sgn(c.step) == 0;
    case CoordSet::Kind::values: return c.values.size() == 1 && sgn(c.values[0]) == 0;
    default: return false;
  }
}

// Scaling level and sign of the coordinate set inside factor t.
int coord_level(const CoordSet& c, NumberTag t) {
  if (c.kind == CoordSet::Kind::within) return std::min(level(t), level(c.tag));
  if (c.kind == CoordSet::Kind::multiples) return 0;
  return level(t);
}
bool coord_nonneg(const CoordSet& c, NumberTag t) {
  if (c.kind == CoordSet::Kind::within) return nonneg(t) || nonneg(c.tag);
  return nonneg(t) || c.kind == CoordSet::Kind::positive;
}

bool coord_group(const CoordSet& c, NumberTag t) {
  switch (c.kind) {
    case CoordSet::Kind::zero: return true;
    case CoordSet::Kind::all:
    case CoordSet::Kind::multiples: return tag_is_group(t);
    case CoordSet::Kind::within: return tag_is_group(t) && tag_is_group(c.tag);
    case CoordSet::Kind::positive: return false;
    case CoordSet::Kind::values: return coord_is_zero(c);
  }
  return false;
}

}  // namespace

bool closed_under_addition(const TupleSpace& sp, const SymbolicSubset& w) {
  check_shape(sp, w);
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    const CoordSet& c = coord(w, i);
    if (c.kind != CoordSet::Kind::values) continue;
    const Component comp = Component::tag(sp.factors()[i]);
    for (const auto& a : c.values) {
      for (const auto& b : c.values) {
        if (comp.contains(a) && comp.contains(b) && !c.contains(comp, a + b)) return false;
      }
    }
  }
  return true;
}

bool closed_under_scalars(const TupleSpace& sp, const SymbolicSubset& w, NumberTag scalars) {
  check_shape(sp, w);
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    const CoordSet& c = coord(w, i);
    const NumberTag t = sp.factors()[i];
    if (coord_is_zero(c)) continue;
    // 0 is a scalar, and a finite set with a nonzero value cannot absorb 2x
    if (c.kind == CoordSet::Kind::positive || c.kind == CoordSet::Kind::values) return false;
    if (level(scalars) > coord_level(c, t)) return false;
    if (tag_is_group(scalars) && coord_nonneg(c, t)) return false;
  }
  return true;
}

bool proper_subset(const TupleSpace& sp, const SymbolicSubset& w) {
  check_shape(sp, w);
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    const CoordSet& c = coord(w, i);
    const NumberTag t = sp.factors()[i];
    switch (c.kind) {
      case CoordSet::Kind::all: break;
      case CoordSet::Kind::within:
        if (!(level(t) <= level(c.tag) && (!nonneg(c.tag) || nonneg(t)))) return true;
        break;
      case CoordSet::Kind::multiples: {
        if (sgn(c.step) == 0 || level(t) > 0) return true;
        const mpq_class inv = 1 / c.step;
        if (inv.get_den() != 1) return true;
        break;
      }
      default: return true;
    }
  }
  return false;
}

bool is_additive_group(const TupleSpace& sp, const SymbolicSubset& w) {
  check_shape(sp, w);
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    if (!coord_group(coord(w, i), sp.factors()[i])) return false;
  }
  return true;
}

std::optional<SymbolicSubset> nontrivial_subgroup(const TupleSpace& sp, const SymbolicSubset& w) {
  check_shape(sp, w);
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    if (!coord_has_zero(coord(w, i))) return std::nullopt;
  }
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    const CoordSet& c = coord(w, i);
    const NumberTag t = sp.factors()[i];
    if (coord_is_zero(c) || !coord_group(c, t)) continue;
    SymbolicSubset g{std::vector<CoordSet>(sp.dim(), CoordSet::zero_only()), false};
    g.coords[i] = c;
    bool others_zero = true;
    for (std::size_t j = 0; j < sp.dim(); ++j) others_zero = others_zero && (j == i || coord_is_zero(coord(w, j)));
    if (others_zero) {
      // the candidate is W itself; an even sublattice is a proper subgroup
      mpq_class step = 2;
      if (c.kind == CoordSet::Kind::multiples) step = 2 * abs(mpq_class(c.step.get_num()));
      g.coords[i] = CoordSet::multiples_of(step);
    }
    return g;
  }
  return std::nullopt;
}

std::optional<SymbolicSubset> s_semivector_witness(const TupleSpace& sp) {
  return nontrivial_subgroup(sp, whole(sp.ring()));
}

namespace {

// Sampled replay of closure clauses, recorded next to the exact rules.
void sampled_closure(const TupleSpace& sp, const SymbolicSubset& w, NumberTag scalars, std::vector<Clause>& out) {
  const auto pts = w.samples(sp.ring(), 24);
  bool add_ok = true, scale_ok = true;
  for (const auto& a : pts) {
    for (const auto& b : pts) add_ok = add_ok && w.contains(sp.ring(), sp.add(a, b));
    for (const auto& c : Component::tag(scalars).samples()) {
      scale_ok = scale_ok && w.contains(sp.ring(), sp.scale(c, a));
    }
  }
  out.push_back({"sampled sums stay in W", add_ok, true});
  out.push_back({"sampled scalings by " + std::string(to_string(scalars)) + " stay in W", scale_ok, true});
}

SpaceCertificate finish(std::string name, std::vector<Clause> t, std::optional<SymbolicSubset> witness) {
  SpaceCertificate c;
  c.property = std::move(name);
  c.holds = std::all_of(t.begin(), t.end(), [](const Clause& k) { return k.pass; });
  if (c.holds) c.witness = std::move(witness);
  c.transcript = std::move(t);
  return c;
}

}  // namespace

SpaceCertificate certify_s_subsemivector(const TupleSpace& sp, const SymbolicSubset& w) {
  std::vector<Clause> t;
  const auto& ring = sp.ring();
  t.push_back({"V is an S-semigroup under +", static_cast<bool>(s_semivector_witness(sp))});
  t.push_back({"W = " + w.describe(ring) + " is a proper subset of V", proper_subset(sp, w)});
  t.push_back({"W holds the zero vector", w.contains(ring, sp.zero())});
  t.push_back({"W is closed under +", closed_under_addition(sp, w)});
  t.push_back({"W is closed under scaling by " + std::string(to_string(sp.scalars())),
               closed_under_scalars(sp, w, sp.scalars())});
  sampled_closure(sp, w, sp.scalars(), t);
  auto g = nontrivial_subgroup(sp, w);
  t.push_back({g ? "W holds the proper subgroup " + g->describe(ring) : "W holds a proper subgroup with two elements",
               static_cast<bool>(g)});
  return finish("s-subsemivector", std::move(t), g);
}

SpaceCertificate certify_s_pseudo_semivector(const TupleSpace& sp, const SymbolicSubset& w, NumberTag p) {
  std::vector<Clause> t;
  const auto& ring = sp.ring();
  const std::string sn(to_string(sp.scalars())), pn(to_string(p));
  t.push_back({pn + " is a semifield properly inside " + sn,
               nonneg(p) && level(p) < level(sp.scalars()) + (tag_is_group(sp.scalars()) ? 1 : 0) && p != sp.scalars()});
  t.push_back({"W = " + w.describe(ring) + " is a proper subset of V", proper_subset(sp, w)});
  t.push_back({"W holds the zero vector", w.contains(ring, sp.zero())});
  t.push_back({"W is closed under +", closed_under_addition(sp, w)});
  t.push_back({"W is not closed under scaling by " + sn, !closed_under_scalars(sp, w, sp.scalars())});
  t.push_back({"W is closed under scaling by " + pn, closed_under_scalars(sp, w, p)});
  sampled_closure(sp, w, p, t);
  return finish("s-pseudo-semivector", std::move(t), w);
}

SpaceCertificate certify_s_anti_semivector(const TupleSpace& sp, const SymbolicSubset& w, NumberTag s) {
  std::vector<Clause> t;
  const auto& ring = sp.ring();
  const std::string fn(to_string(sp.scalars())), sn(to_string(s));
  t.push_back({"V is a vector space over the field " + fn,
               tag_is_group(sp.scalars()) && level(sp.scalars()) >= 1 && has_group_factor(sp.factors()) &&
                   std::all_of(sp.factors().begin(), sp.factors().end(), [](NumberTag f) { return tag_is_group(f); })});
  t.push_back({sn + " is a semifield inside " + fn, nonneg(s) && level(s) <= level(sp.scalars())});
  t.push_back({"W holds the zero vector", w.contains(ring, sp.zero())});
  t.push_back({"W is closed under +", closed_under_addition(sp, w)});
  t.push_back({"W is closed under scaling by " + sn, closed_under_scalars(sp, w, s)});
  t.push_back({"W is a semigroup that is not a group", !is_additive_group(sp, w)});
  sampled_closure(sp, w, s, t);
  return finish("s-anti-semivector", std::move(t), w);
}

std::vector<mpq_class> default_grid() {
  std::vector<mpq_class> g{0};
  for (mpq_class q : {mpq_class(1), mpq_class(2), mpq_class(3), mpq_class(1, 2), mpq_class(1, 3)}) {
    g.push_back(q);
    g.push_back(-q);
  }
  return g;
}

LinearMapCheck check_s_linear_map(const TupleMap& t, const TupleSpace& v, const TupleSpace& w,
                                  const SymbolicSubset& p, const SymbolicSubset& c,
                                  const std::vector<mpq_class>& grid) {
  check_shape(v, p);
  check_shape(w, c);
  LinearMapCheck out;
  // grid points of P, coordinate by coordinate
  std::vector<Element> pts{Element{}};
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Component comp = Component::tag(v.factors()[i]);
    std::vector<Element> next;
    for (const auto& e : pts) {
      for (const auto& q : grid) {
        if (!p.coords[i].contains(comp, q)) continue;
        Element f = e;
        f.push_back(q);
        next.push_back(std::move(f));
      }
    }
    pts = std::move(next);
  }
  constexpr std::size_t kMaxPoints = 64;
  if (pts.size() > kMaxPoints) {
    std::vector<Element> thin;
    const std::size_t stride = (pts.size() + kMaxPoints - 1) / kMaxPoints;
    for (std::size_t i = 0; i < pts.size(); i += stride) thin.push_back(pts[i]);
    pts = std::move(thin);
  }
  std::vector<mpq_class> coeffs;
  for (const auto& q : grid) {
    if (tag_contains(v.scalars(), q) && tag_contains(w.scalars(), q)) coeffs.push_back(q);
  }
  for (const auto& x : pts) {
    const Element tx = t(x);
    if (!w.contains(tx) || !c.contains(w.ring(), tx)) {
      out.verdict = Verdict::no({});
      out.counterexample = {x};
      return out;
    }
  }
  for (const auto& k : coeffs) {
    for (const auto& p1 : pts) {
      for (const auto& p2 : pts) {
        ++out.checked;
        const Element lhs = t(v.add(v.scale(k, p1), p2));
        const Element rhs = w.add(w.scale(k, t(p1)), t(p2));
        if (lhs != rhs) {
          out.verdict = Verdict::no({});
          out.counterexample = {Element{k}, p1, p2};
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace srcert

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

#include <doctest.h>

#include <random>

#include "srcert/constructions.hpp"
#include "srcert/semivector.hpp"

using namespace srcert;

namespace {

Element el(std::initializer_list<long> xs) {
  Element out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Element combine(const TupleSpace& sp, const std::vector<Element>& gens, const std::vector<mpq_class>& c) {
  Element v = sp.zero();
  for (std::size_t i = 0; i < gens.size(); ++i) v = sp.add(v, sp.scale(c[i], gens[i]));
  return v;
}

SymbolicSubset product_of(std::vector<CoordSet> coords) {
  SymbolicSubset s;
  s.coords = std::move(coords);
  return s;
}

}  // namespace

TEST_CASE("finite lattice spaces") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const FiniteSpace sp = lattice_space(lattices::chain(n));
    CHECK(check_space_axioms(sp).verdict.holds);
  }
  CHECK(check_space_axioms(lattice_space(lattices::pentagon())).verdict.holds);
  const FiniteSpace sp = lattice_space(lattices::power_set(3));
  // span is closed, contains its generators and grows with them
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    ElementSet g(sp.size()), h(sp.size());
    for (Index v = 0; v < sp.size(); ++v) {
      if (rng() % 3 == 0) g.insert(v);
      if (g.contains(v) || rng() % 4 == 0) h.insert(v);
    }
    const ElementSet s = span(sp, g);
    CHECK(g.subset_of(s));
    CHECK(s.subset_of(span(sp, h)));
    CHECK(s.contains(*sp.zero()));
    for (Index a : s.elements()) {
      for (Index b : s.elements()) CHECK(s.contains(sp.add(a, b)));
      for (Index c = 0; c < sp.scalars().size(); ++c) CHECK(s.contains(sp.act(c, a)));
    }
    // every member of the span has a combination that reproduces it
    const auto gens = g.elements();
    for (Index v : s.elements()) {
      const auto co = combination(sp, gens, v);
      REQUIRE(co.has_value());
      Index acc = *sp.zero();
      for (std::size_t i = 0; i < gens.size(); ++i) acc = sp.add(acc, sp.act((*co)[i], gens[i]));
      CHECK(acc == v);
    }
  }
}

TEST_CASE("chain over two elements: unique basis, many representations") {
  const FiniteLattice c4 = lattices::chain({"0", "b", "a", "1"});
  const FiniteSpace sp = lattice_space(c4);
  const BasisCensus bc = bases(sp);
  REQUIRE(bc.unique);
  CHECK(bc.dimension == std::size_t{3});
  const std::vector<Index> basis{*sp.find("b"), *sp.find("a"), *sp.find("1")};
  std::size_t total = 0;
  for (Index v = 0; v < sp.size(); ++v) {
    const auto reps = representations(sp, basis, v);
    CHECK(reps.size() == representation_count(sp, basis, v));
    CHECK(representation_count(sp, basis, v, Exec::serial) == representation_count(sp, basis, v, Exec::parallel));
    total += reps.size();
  }
  // the 2^3 assignments are split between the four vectors
  CHECK(total == 8);
  CHECK(representation_count(sp, basis, *sp.find("1")) == 4);
  CHECK(representation_count(sp, basis, *sp.find("a")) == 2);
  CHECK(representation_count(sp, basis, *sp.find("b")) == 1);
  CHECK_FALSE(s_semivector_witness(sp).has_value());
}

TEST_CASE("independence in Z0 x Z0") {
  const TupleSpace sp({NumberTag::Z0, NumberTag::Z0}, NumberTag::Z0);
  const std::vector<Element> gens{el({1, 1}), el({2, 1}), el({3, 0})};
  CHECK(is_independent(sp, gens).independent);
  // three independent vectors in a space of dimension two
  CHECK(standard_basis(sp).dimension == std::size_t{2});
  CHECK_FALSE(in_span(sp, gens, el({1, 3})).member);
  CHECK_FALSE(in_span(sp, gens, el({3, 1})).member);
  const auto m = in_span(sp, gens, el({3, 2}));
  REQUIRE(m.member);
  CHECK(combine(sp, gens, m.coefficients) == el({3, 2}));
  const Dependence d = is_independent(sp, {el({1, 0}), el({0, 1}), el({2, 3})});
  CHECK_FALSE(d.independent);
  CHECK(d.member == std::size_t{2});
  CHECK_FALSE(is_independent(sp, {el({0, 0}), el({1, 0})}).independent);
}

TEST_CASE("Z0 span membership matches brute force") {
  const TupleSpace sp({NumberTag::Z0, NumberTag::Z0, NumberTag::Z0}, NumberTag::Z0);
  std::mt19937_64 rng(5);
  for (int round = 0; round < 60; ++round) {
    std::vector<Element> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(el({long(rng() % 3), long(rng() % 3), long(rng() % 3)}));
    const Element v = el({long(rng() % 6), long(rng() % 6), long(rng() % 6)});
    bool brute = false;
    for (int a = 0; a <= 6 && !brute; ++a)
      for (int b = 0; b <= 6 && !brute; ++b)
        for (int c = 0; c <= 6 && !brute; ++c) brute = combine(sp, gens, {a, b, c}) == v;
    const SpanMembership m = in_span(sp, gens, v);
    CHECK(m.complete);
    CHECK(m.member == brute);
    if (m.member) CHECK(combine(sp, gens, m.coefficients) == v);
  }
}

TEST_CASE("Q0 cone membership") {
  const TupleSpace sp({NumberTag::Q0, NumberTag::Q0}, NumberTag::Q0);
  const std::vector<Element> gens{el({1, 2}), el({2, 1})};
  const auto m = in_span(sp, gens, el({1, 1}));
  REQUIRE(m.member);
  CHECK(m.coefficients == std::vector<mpq_class>{mpq_class(1, 3), mpq_class(1, 3)});
  CHECK_FALSE(in_span(sp, gens, el({1, 0})).member);
  std::mt19937_64 rng(9);
  for (int round = 0; round < 40; ++round) {
    std::vector<Element> g3{el({long(rng() % 4), long(rng() % 4)}), el({long(rng() % 4), long(rng() % 4)}),
                            el({long(rng() % 4), long(rng() % 4)})};
    const Element v = el({long(rng() % 5), long(rng() % 5)});
    const auto r = in_span(sp, g3, v);
    if (r.member) {
      CHECK(combine(sp, g3, r.coefficients) == v);
      for (const auto& c : r.coefficients) CHECK(sgn(c) >= 0);
    }
  }
}

TEST_CASE("unit vectors of Z0^n are the only basis") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const TupleSpace sp(std::vector<NumberTag>(n, NumberTag::Z0), NumberTag::Z0);
    const TupleBasis b = standard_basis(sp);
    CHECK(b.unique);
    CHECK(b.dimension == n);
    CHECK(b.basis.size() == n);
    for (const auto& clause : b.indecomposable) CHECK(clause.pass);
  }
  const TupleSpace q(std::vector<NumberTag>{NumberTag::Q0, NumberTag::Q0}, NumberTag::Q0);
  CHECK_FALSE(standard_basis(q).unique);
  CHECK_FALSE(standard_basis(q).dimension.has_value());
}

TEST_CASE("no two vectors span Z x Z0 over Z0") {
  // The three vectors (-1,0), (1,0), (0,1) span it. A two-element candidate
  // set would have to reach each of them with nonnegative coefficients; the
  // search below covers entries in [-bound, bound] and coefficients up to
  // coef, and finds none.
  const TupleSpace sp({NumberTag::Z, NumberTag::Z0}, NumberTag::Z0);
  const long bound = 4, coef = 12;
  const std::vector<Element> targets{el({-1, 0}), el({1, 0}), el({0, 1})};
  auto reaches = [&](const Element& g, const Element& h, const Element& t) {
    for (long a = 0; a <= coef; ++a)
      for (long b = 0; b <= coef; ++b)
        if (combine(sp, {g, h}, {a, b}) == t) return true;
    return false;
  };
  std::size_t pairs = 0, spanning = 0;
  for (long x1 = -bound; x1 <= bound; ++x1)
    for (long y1 = 0; y1 <= bound; ++y1)
      for (long x2 = x1; x2 <= bound; ++x2)
        for (long y2 = 0; y2 <= bound; ++y2) {
          ++pairs;
          const Element g = el({x1, y1}), h = el({x2, y2});
          bool all = true;
          for (const auto& t : targets) all = all && reaches(g, h, t);
          if (all) ++spanning;
        }
  MESSAGE("two-element candidates checked: " << pairs << " (entries in [-" << bound << "," << bound
                                               << "], coefficients up to " << coef << ")");
  CHECK(spanning == 0);
  const std::vector<Element> three{el({-1, 0}), el({1, 0}), el({0, 1})};
  for (const auto& v : {el({-5, 2}), el({3, 7}), el({0, 0})}) {
    bool found = false;
    for (long a = 0; a <= coef && !found; ++a)
      for (long b = 0; b <= coef && !found; ++b)
        for (long c = 0; c <= coef && !found; ++c) found = combine(sp, three, {a, b, c}) == v;
    CHECK(found);
  }
}

TEST_CASE("scalar choices and S-semivector spaces") {
  CHECK(valid_scalar_choices({NumberTag::R0, NumberTag::Q0, NumberTag::Z}) == std::vector<NumberTag>{NumberTag::Z0});
  CHECK(valid_scalar_choices({NumberTag::Q0, NumberTag::Q0}) == std::vector<NumberTag>{NumberTag::Z0, NumberTag::Q0});
  CHECK(has_group_factor({NumberTag::Z0, NumberTag::Z}));
  CHECK_FALSE(has_group_factor({NumberTag::Z0, NumberTag::Q0}));
  const TupleSpace zz({NumberTag::Z, NumberTag::Z0}, NumberTag::Z0);
  const auto w = s_semivector_witness(zz);
  REQUIRE(w.has_value());
  CHECK(is_additive_group(zz, *w));
  CHECK(proper_subset(zz, *w));
  CHECK_FALSE(s_semivector_witness(TupleSpace({NumberTag::Q0, NumberTag::Q0, NumberTag::Q0}, NumberTag::Z0)).has_value());
}

TEST_CASE("S-subsemivector") {
  const TupleSpace sp({NumberTag::Q0, NumberTag::Z0, NumberTag::Z}, NumberTag::Z0);
  const auto yes = certify_s_subsemivector(
      sp, product_of({CoordSet::everything(), CoordSet::everything(), CoordSet::multiples_of(2)}));
  CHECK(yes.holds);
  const auto no = certify_s_subsemivector(
      sp, product_of({CoordSet::everything(), CoordSet::everything(), CoordSet::inside(NumberTag::Z0)}));
  CHECK_FALSE(no.holds);
  CHECK(closed_under_addition(sp, product_of({CoordSet::everything(), CoordSet::everything(), CoordSet::multiples_of(2)})));
  CHECK(closed_under_scalars(sp, product_of({CoordSet::everything(), CoordSet::everything(), CoordSet::multiples_of(2)}), NumberTag::Z0));
}

TEST_CASE("linear maps on grids") {
  const TupleSpace sp({NumberTag::Z0, NumberTag::Z0}, NumberTag::Z0);
  const auto all = product_of({CoordSet::everything(), CoordSet::everything()});
  const auto doubling = check_s_linear_map([](const Element& v) { return Element{v[0], 2 * v[1]}; }, sp, sp, all, all);
  CHECK(doubling.verdict.holds);
  CHECK(doubling.checked > 0);
  const auto shift = check_s_linear_map([](const Element& v) { return Element{v[0] + 1, v[1]}; }, sp, sp, all, all);
  CHECK_FALSE(shift.verdict.holds);
  CHECK_FALSE(shift.counterexample.empty());
}

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

#include "srcert/constructions.hpp"
#include "srcert/error.hpp"
#include "srcert/structure.hpp"
#include "srcert/substructures.hpp"

using namespace srcert;

namespace {

bool brute_closed(const Structure& s, const std::vector<Index>& xs) {
  std::vector<bool> in(s.size());
  for (Index x : xs) in[x] = true;
  for (Index a : xs)
    for (Index b : xs)
      if (!in[s.add(a, b)] || !in[s.mul(a, b)]) return false;
  return true;
}

ElementSet set_of(const Structure& s, std::initializer_list<const char*> labels) {
  ElementSet e(s.size());
  for (auto l : labels) e.insert(*s.find(l));
  return e;
}

}  // namespace

TEST_CASE("axiom validation") {
  // max with addition mod 3 as product: not distributive
  RawTables raw;
  raw.labels = {"0", "1", "2"};
  raw.add = {0, 1, 2, 1, 1, 2, 2, 2, 2};  // max
  raw.mul = {0, 1, 2, 1, 2, 0, 2, 0, 1};  // addition mod 3
  try {
    validate_semiring(raw);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::axiom_violation);
    CHECK(e.witness().size() == 3);
  }
  raw.mul = {0, 0, 0, 0, 1, 1, 0, 1, 2};  // min
  const Structure s = validate_semiring(raw);
  CHECK(s.has(Flag::semiring));
  CHECK(s.has(Flag::commutative_mul));
  CHECK(s.zero() == Index{0});
  CHECK(s.one() == Index{2});
}

TEST_CASE("flags of standard structures") {
  CHECK(zmod_ring(7).has(Flag::field));
  CHECK_FALSE(zmod_ring(6).has(Flag::field));
  CHECK(zmod_ring(6).has(Flag::ring));
  CHECK(chain_lattice(3).has(Flag::lattice_derived));
  CHECK(chain_lattice(3).has(Flag::strict));
  CHECK(chain_lattice(3).has(Flag::semifield));
  CHECK_FALSE(power_set_semiring(2).has(Flag::semifield));
}

TEST_CASE("characteristic") {
  CHECK(characteristic(zmod_ring(12)) == Characteristic{Characteristic::Kind::finite, 12});
  CHECK(characteristic(chain_lattice(4)).kind == Characteristic::Kind::undefined);
  const Structure z2z3 = direct_product(std::vector<Structure>{zmod_ring(2), zmod_ring(3)});
  CHECK(characteristic(z2z3).m == 6);
}

TEST_CASE("strictness witness on Z12") {
  const Structure z = zmod_ring(12);
  const Verdict v = is_strict(z);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness == std::vector<Index>{1, 11});
  // the pair named in the literature fails as well
  CHECK(z.add(*z.find("5"), *z.find("7")) == *z.zero());
}

TEST_CASE("element classes of Z12") {
  const Structure z = zmod_ring(12);
  const ElementClasses c = classify_elements(z);
  CHECK(c.invertibles == std::vector<Index>{1, 5, 7, 11});
  CHECK(c.idempotents == std::vector<Index>{0, 1, 4, 9});
  CHECK(c.zero_divisors == std::vector<Index>{2, 3, 4, 6, 8, 9, 10});
  for (const auto& [a, b] : c.zero_divisor_pairs) CHECK(z.mul(a, b) == 0);
  CHECK_FALSE(zero_divisor_free(z).holds);
  CHECK(zero_absorbing(z).holds);
}

TEST_CASE("closed subset census is exact on small structures") {
  for (const Structure& s : {chain_lattice(3), chain_lattice(4), zmod_ring(6), power_set_semiring(2), zmod_ring(8)}) {
    const SubsetCensus c = closed_subsets(s);
    REQUIRE(c.complete);
    std::size_t brute = 0;
    for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<Index> xs;
      for (Index i = 0; i < s.size(); ++i)
        if (mask >> i & 1) xs.push_back(i);
      if (brute_closed(s, xs)) ++brute;
    }
    CHECK(c.sets.size() == brute);
    for (std::size_t i = 0; i + 1 < c.sets.size(); ++i) CHECK(canonical_less(c.sets[i], c.sets[i + 1]));
    for (const auto& e : c.sets) CHECK(closed_under_ops(s, e));
  }
  // every nonempty subset of a chain is closed
  CHECK(closed_subsets(chain_lattice(3)).sets.size() == 7);
}

TEST_CASE("closure, relative identities, subsemirings") {
  const Structure z = zmod_ring(12);
  CHECK(closure(z, set_of(z, {"3"})) == set_of(z, {"0", "3", "6", "9"}));
  const ElementSet evens = set_of(z, {"0", "4", "8"});
  CHECK(relative_zero(z, evens) == Index{0});
  CHECK(relative_one(z, evens) == Index{4});
  CHECK(is_subsemiring(z, evens));
  CHECK(is_ideal(z, set_of(z, {"0", "3", "6", "9"}), Side::two_sided));
  CHECK_FALSE(is_ideal(z, set_of(z, {"0", "1"}), Side::left));
  for (const auto& e : subsemirings(z).sets) CHECK(relative_zero(z, e).has_value());
}

TEST_CASE("congruences") {
  const Structure z = zmod_ring(12);
  const Verdict v = is_congruence_simple(z);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness == std::vector<Index>{0, 2});
  for (auto [a, b] : {std::pair<Index, Index>{0, 2}, {0, 6}}) {
    const Congruence c = congruence_closure(z, a, b);
    CHECK(is_congruence(z, c));
    CHECK_FALSE(c.is_full());
    CHECK(c.related(a, b));
  }
  CHECK(congruence_closure(z, 0, 6).classes() == 6);
  CHECK(congruence_closure(z, 0, 1).is_full());
  CHECK(is_congruence_simple(zmod_ring(5)).holds);
  CHECK(is_congruence_simple(chain_lattice(2)).holds);
  CHECK_FALSE(is_congruence_simple(chain_lattice(3)).holds);
}

TEST_CASE("subgroups of a semigroup: both methods agree") {
  for (const FiniteMagma& m : {zmod_ring(12).mul_table(), zmod_ring(10).mul_table(), full_transformation(2),
                               symmetric_group(3), chain_lattice(4).mul_table()}) {
    const auto a = subgroups_of_semigroup(m, SubgroupMethod::idempotent_anchored);
    const auto b = subgroups_of_semigroup(m, SubgroupMethod::exhaustive);
    CHECK(a == b);
    for (const auto& g : a) CHECK(is_subgroup(m, g));
  }
  // a chain has only trivial groups
  CHECK_FALSE(s_semigroup_witness(chain_lattice(4).mul_table()).has_value());
  const auto w = s_semigroup_witness(symmetric_group(3));
  REQUIRE(w.has_value());
  CHECK(w->count() == 2);
}

TEST_CASE("homomorphisms") {
  const Structure z12 = zmod_ring(12), z6 = zmod_ring(6);
  std::vector<Index> f(12);
  for (Index i = 0; i < 12; ++i) f[i] = i % 6;
  const HomReport r = check_hom(f, z12, z6, HomKind::ring);
  CHECK(r.verdict.holds);
  REQUIRE(r.kernel.has_value());
  CHECK(r.kernel->elements() == std::vector<Index>{0, 6});
  std::vector<Index> g(12);
  for (Index i = 0; i < 12; ++i) g[i] = (i * 5) % 6;
  CHECK_FALSE(check_hom(g, z12, z6, HomKind::multiplicative).verdict.holds);
  CHECK(check_hom(g, z12, z6, HomKind::additive).verdict.holds);
}

TEST_CASE("inductive star on a bounded distributive lattice") {
  const auto l = lattices::chain(4);
  const Structure s = lattice_semiring(l);
  const std::vector<Index> top(s.size(), *s.one());
  CHECK(check_inductive_star(s, l.poset(), top).all());
  const std::vector<Index> bottom(s.size(), *s.zero());
  CHECK_FALSE(check_inductive_star(s, l.poset(), bottom).fixed_point.holds);
}

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
#include "srcert/kernels.hpp"
#include "srcert/magma.hpp"
#include "srcert/structure.hpp"
#include "srcert/substructures.hpp"

using namespace srcert;
namespace k = srcert::kernels;

TEST_CASE("first_index: openmp matches the serial scan") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = rng() % 300;
    std::vector<char> hit(n);
    const double p = (rng() % 100) / 1000.0;
    for (auto& h : hit) h = std::bernoulli_distribution(p)(rng);
    auto pred = [&](std::size_t i) { return hit[i] != 0; };
    CHECK(k::serial::first_index(n, pred) == k::omp::first_index(n, pred));
  }
}

TEST_CASE("map_indices keeps order") {
  auto sq = [](std::size_t i) { return static_cast<long>(i * i) - 3; };
  CHECK(k::serial::map_indices<long>(500, sq) == k::omp::map_indices<long>(500, sq));
  CHECK(k::omp::map_indices<long>(0, sq).empty());
}

TEST_CASE("first_pair and first_triple are lexicographic") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const Index n = 1 + rng() % 20;
    std::vector<char> t(n * n * n);
    for (auto& x : t) x = std::bernoulli_distribution(0.01)(rng);
    auto p3 = [&](Index a, Index b, Index c) { return t[(a * n + b) * n + c] != 0; };
    auto p2 = [&](Index a, Index b) { return t[a * n + b] != 0; };
    CHECK(k::first_triple(n, p3, Exec::serial) == k::first_triple(n, p3, Exec::parallel));
    CHECK(k::first_pair(n, p2, Exec::serial) == k::first_pair(n, p2, Exec::parallel));
    // brute force
    std::optional<std::array<Index, 2>> want;
    for (Index a = 0; a < n && !want; ++a)
      for (Index b = 0; b < n && !want; ++b)
        if (p2(a, b)) want = std::array<Index, 2>{a, b};
    CHECK(k::first_pair(n, p2, Exec::parallel) == want);
  }
}

TEST_CASE("library scans agree across execution modes") {
  const FiniteMagma t3 = full_transformation(3);
  CHECK(associativity(t3, Exec::serial).witness == associativity(t3, Exec::parallel).witness);
  // a non-associative table: x*y = (x - y) mod 5
  const FiniteMagma sub = FiniteMagma::tabulate({"0", "1", "2", "3", "4"}, [](Index a, Index b) { return (a + 5 - b) % 5; });
  const Verdict s = associativity(sub, Exec::serial), q = associativity(sub, Exec::parallel);
  CHECK_FALSE(s.holds);
  CHECK(s.witness == q.witness);
  for (const Structure& st : {zmod_ring(12), chain_lattice(4), power_set_semiring(3), zmod_ring(30)}) {
    CHECK(is_congruence_simple(st, Exec::serial).witness == is_congruence_simple(st, Exec::parallel).witness);
    CHECK(closed_subsets(st, kDefaultSubsetCap, Exec::serial).sets ==
          closed_subsets(st, kDefaultSubsetCap, Exec::parallel).sets);
  }
  AxiomOptions ser, par;
  ser.exec = Exec::serial;
  par.exec = Exec::parallel;
  const RawTables raw = matrix_semiring(chain_lattice(2), 2).raw();
  CHECK(validate_semiring(raw, ser).flags().list() == validate_semiring(raw, par).flags().list());
}

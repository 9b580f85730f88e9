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

// Serial reference vs OpenMP kernels on the heaviest exhaustive checks.
// Arg 0 runs the serial scan, arg 1 the parallel one.

#include <benchmark/benchmark.h>

#include "srcert/certificate.hpp"
#include "srcert/certifier.hpp"
#include "srcert/constructions.hpp"
#include "srcert/magma.hpp"
#include "srcert/poset.hpp"
#include "srcert/structure.hpp"
#include "srcert/substructures.hpp"

using namespace srcert;

static Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

static void BM_Associativity(benchmark::State& st) {
  const FiniteMagma m = full_transformation(4);  // 256 elements
  for (auto _ : st) benchmark::DoNotOptimize(associativity(m, exec_of(st)));
}
BENCHMARK(BM_Associativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Distributive(benchmark::State& st) {
  const FiniteLattice l = lattices::power_set(6);  // 64 elements
  for (auto _ : st) benchmark::DoNotOptimize(is_distributive(l, exec_of(st)));
}
BENCHMARK(BM_Distributive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SemiringAxioms(benchmark::State& st) {
  const Structure s = matrix_semiring(chain_lattice(2), 2);
  const RawTables raw = s.raw();
  AxiomOptions ao;
  ao.exec = exec_of(st);
  ao.simplicity_limit = 0;
  for (auto _ : st) benchmark::DoNotOptimize(validate_semiring(raw, ao));
}
BENCHMARK(BM_SemiringAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_CongruenceSimple(benchmark::State& st) {
  const Structure s = zmod_ring(60);
  for (auto _ : st) benchmark::DoNotOptimize(is_congruence_simple(s, exec_of(st)));
}
BENCHMARK(BM_CongruenceSimple)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ClosedSubsets(benchmark::State& st) {
  const Structure s = power_set_semiring(4);
  for (auto _ : st) benchmark::DoNotOptimize(closed_subsets(s, kDefaultSubsetCap, exec_of(st)));
}
BENCHMARK(BM_ClosedSubsets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SIdempotentScan(benchmark::State& st) {
  auto gs = std::make_shared<const Structure>(
      GroupSemiring(std::make_shared<const Structure>(chain_lattice(2)), symmetric_group(3), "C2S3").materialize());
  const Subject subj = Subject::table(gs, "C2S3");
  SearchOptions opts;
  opts.exec = exec_of(st);
  opts.limit = 4096;
  for (auto _ : st) benchmark::DoNotOptimize(find_all(subj, Property::s_idempotent, opts));
}
BENCHMARK(BM_SIdempotentScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

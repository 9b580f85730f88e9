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

#include "../oracle.hpp"
#include "srcert/certifier.hpp"
#include "srcert/constructions.hpp"

using namespace srcert;

TEST_CASE("oracle sanity") {
  const Subject z12 = Subject::table(std::make_shared<const Structure>(zmod_ring(12)), "Z12");
  CHECK(oracle::accepts(z12, Property::s_unit, Json{{"x", "5"}, {"y", "5"}, {"a", "7"}, {"b", "7"}}) ==
        replay(z12, Property::s_unit, parse_witness(z12, Json{{"x", "5"}, {"y", "5"}, {"a", "7"}, {"b", "7"}})).ok);
  CHECK_FALSE(oracle::accepts(z12, Property::s_zero_divisor, Json{{"a", "0"}, {"b", "3"}, {"x", "4"}, {"y", "8"}}));
  const Subject z0 = subject_of(build(parse_spec(R"({"kind":"archetype","tags":["Z0"]})")));
  CHECK(oracle::accepts(z0, Property::s_semifield_1, Json{{"A", {{"coords", {"multiples:2"}}}}}));
  CHECK_FALSE(oracle::accepts(z0, Property::s_semifield_1, Json{{"A", {{"coords", {"all"}}}}}));
  CHECK_FALSE(oracle::accepts(z0, Property::s_semifield_1, Json{{"A", {{"coords", {"0"}}}}}));
}

TEST_CASE("mutated certificates are rejected") {
  const auto records = load_claims(std::string(SRCERT_DATA_DIR) + "/claims");
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto st = oracle::fuzz_certificates(records, 20, seed);
    CAPTURE(seed);
    CHECK(st.certificates > 20);
    CHECK(st.false_accepts == 0);
    CHECK(st.valid_rejected == 0);
    for (const auto& p : st.problems) FAIL_CHECK(p);
    MESSAGE("seed " << seed << ": " << st.invalid_tested << " invalid mutants rejected, " << st.oracle_valid
                    << " valid alternatives, " << st.unparsable << " unreadable");
  }
}

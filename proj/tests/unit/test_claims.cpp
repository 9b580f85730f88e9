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

#include <algorithm>
#include <random>
#include <set>

#include "srcert/claims.hpp"

using namespace srcert;

namespace {

std::vector<ClaimRecord> corpus() { return load_claims(std::string(SRCERT_DATA_DIR) + "/claims"); }

}  // namespace

TEST_CASE("the claims corpus passes") {
  const auto records = corpus();
  CHECK(records.size() >= 60);
  std::set<std::string> ids;
  for (const auto& r : records) CHECK(ids.insert(r.id).second);
  const auto results = run_claims(records, 2);
  for (const auto& r : results) {
    CAPTURE(r.id);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("replay is order independent and repeatable") {
  auto records = corpus();
  const std::string first = ledger_text(run_claims(records, 1), false);
  std::mt19937_64 rng(17);
  std::shuffle(records.begin(), records.end(), rng);
  CHECK(ledger_text(run_claims(records, 3), false) == first);
  CHECK(ledger_text(run_claims(records, 1), false) == first);
}

TEST_CASE("id globs") {
  CHECK(id_matches("*", "anything"));
  CHECK(id_matches("matrix-*", "matrix-c2-order-16"));
  CHECK_FALSE(id_matches("matrix-*", "chain-matrix"));
  CHECK(id_matches("z?-*", "z5-c-simple"));
  CHECK_FALSE(id_matches("z?-*", "z12-c-simple"));
  CHECK(id_matches("*simple", "z12-c-simple"));
  std::size_t n = 0;
  for (const auto& r : corpus()) n += id_matches("s-semiring-2-*", r.id);
  CHECK(n > 0);
}

TEST_CASE("a wrong expectation fails") {
  auto records = parse_claims(Json::parse(R"([
    {"id":"chain-3-order","subject":{"kind":"chain_lattice","n":3},"check":"order","expect":{"value":4}},
    {"id":"chain-3-order-ok","subject":{"kind":"chain_lattice","n":3},"check":"order","expect":{"value":3}},
    {"id":"missing-param","subject":{"kind":"chain_lattice"},"check":"order","expect":{"error":"MissingParam"}}
  ])"));
  const auto results = run_claims(records);
  REQUIRE(results.size() == 3);
  CHECK_FALSE(results[0].pass);
  CHECK(results[1].pass);
  CHECK(results[2].pass);
  CHECK(ledger_text(results, false).find("2/3 claims pass") != std::string::npos);
}

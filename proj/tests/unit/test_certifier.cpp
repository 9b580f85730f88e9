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
#include "srcert/error.hpp"
#include "srcert/report.hpp"
#include "srcert/spec.hpp"

using namespace srcert;

namespace {

Subject table_subject(Structure s, std::string name) {
  return Subject::table(std::make_shared<const Structure>(std::move(s)), std::move(name));
}

Subject spec_subject(const std::string& text) { return subject_of(build(parse_spec(text))); }

Json labels_of(const Structure& s, std::uint32_t mask) {
  Json out = Json::array();
  for (Index i = 0; i < s.size(); ++i)
    if (mask >> i & 1) out.push_back(s.label(i));
  return out;
}

// Witness tuples of an element property, by brute force through the oracle.
std::size_t brute_count(const Subject& subj, Property p) {
  const auto& s = subj.structure();
  const auto& roles = witness_roles(p);
  const std::size_t n = s.size();
  std::size_t total = 1, count = 0;
  for (std::size_t r = 0; r < roles.size(); ++r) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    Json w = Json::object();
    std::size_t c = code;
    for (std::size_t r = roles.size(); r-- > 0;) {
      w[roles[r]] = s.label(static_cast<Index>(c % n));
      c /= n;
    }
    if (oracle::accepts(subj, p, w)) ++count;
  }
  return count;
}

// Does some assignment of the subset and element roles satisfy the oracle?
bool brute_exists(const Subject& subj, Property p, const Json& fixed = Json::object()) {
  const auto& s = subj.structure();
  std::vector<std::string> sets, elems;
  for (const auto& r : witness_roles(p)) {
    if (fixed.contains(r) || r == "side") continue;
    // single upper-case letters name subsets, the rest elements
    if (r.size() == 1 && std::isupper(static_cast<unsigned char>(r[0]))) {
      sets.push_back(r);
    } else {
      elems.push_back(r);
    }
  }
  const std::size_t n = s.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < sets.size(); ++i) total <<= n;
  for (std::size_t i = 0; i < elems.size(); ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    Json w = fixed;
    std::size_t c = code;
    for (const auto& r : elems) {
      w[r] = s.label(static_cast<Index>(c % n));
      c /= n;
    }
    for (const auto& r : sets) {
      w[r] = labels_of(s, static_cast<std::uint32_t>(c & ((1u << n) - 1)));
      c >>= n;
    }
    if (oracle::accepts(subj, p, w)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("element properties: find_all lists exactly the oracle's witnesses") {
  std::vector<Subject> subjects{table_subject(zmod_ring(6), "Z6"), table_subject(zmod_ring(8), "Z8"),
                                table_subject(zmod_ring(10), "Z10"), table_subject(zmod_ring(12), "Z12"),
                                table_subject(power_set_semiring(3), "P3"), table_subject(chain_lattice(4), "C4")};
  SearchOptions opts;
  opts.limit = 1u << 20;
  for (const auto& subj : subjects) {
    for (Property p : {Property::s_zero_divisor, Property::s_anti_zero_divisor, Property::s_idempotent, Property::s_unit}) {
      CAPTURE(subj.name());
      CAPTURE(to_string(p));
      const auto all = find_all(subj, p, opts);
      CHECK(all.size() == brute_count(subj, p));
      for (std::size_t i = 0; i < all.size() && i < 50; ++i) {
        CHECK(verify(subj, all[i]).ok);
        CHECK(oracle::accepts(subj, p, witness_json(subj, all[i].parts)));
      }
      // certify agrees with the list on existence
      const Certificate c = certify(subj, p);
      CHECK(c.holds == !all.empty());
      CHECK(verify(subj, c).ok);
    }
  }
}

TEST_CASE("S-idempotents of the boolean group semiring") {
  auto gs = std::make_shared<const Structure>(
      GroupSemiring(std::make_shared<const Structure>(chain_lattice(2)), symmetric_group(3), "C2S3").materialize());
  const Subject subj = Subject::table(gs, "C2S3");
  SearchOptions opts;
  opts.limit = 1u << 20;
  CHECK(find_all(subj, Property::s_idempotent, opts).size() == brute_count(subj, Property::s_idempotent));
  SearchOptions ser = opts, par = opts;
  ser.exec = Exec::serial;
  par.exec = Exec::parallel;
  const auto a = find_all(subj, Property::s_idempotent, ser), b = find_all(subj, Property::s_idempotent, par);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(witness_json(subj, a[i].parts) == witness_json(subj, b[i].parts));
}

TEST_CASE("subset properties: certify agrees with brute force") {
  std::vector<Subject> subjects;
  for (std::size_t n = 2; n <= 5; ++n) subjects.push_back(table_subject(chain_lattice(n), "C" + std::to_string(n)));
  for (std::size_t n = 2; n <= 8; ++n) subjects.push_back(table_subject(zmod_ring(n), "Z" + std::to_string(n)));
  subjects.push_back(table_subject(power_set_semiring(2), "P2"));
  subjects.push_back(table_subject(power_set_semiring(3), "P3"));
  for (const auto& subj : subjects) {
    for (Property p : {Property::s_semiring_1, Property::s_semiring_2, Property::s_semifield_1,
                       Property::s_semifield_2, Property::s_anti_semiring}) {
      CAPTURE(subj.name());
      CAPTURE(to_string(p));
      const Certificate c = certify(subj, p);
      REQUIRE(c.complete_search);
      CHECK(c.holds == brute_exists(subj, p));
      CHECK(verify(subj, c).ok);
      if (c.holds) CHECK(oracle::accepts(subj, p, witness_json(subj, c.parts)));
    }
  }
}

TEST_CASE("weak semifields on small chains") {
  for (std::size_t n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const Subject subj = table_subject(chain_lattice(n), "C" + std::to_string(n));
    const Certificate c = certify(subj, Property::s_weak_semifield);
    CHECK(c.holds == brute_exists(subj, Property::s_weak_semifield));
    CHECK(verify(subj, c).ok);
  }
  // C3 is an S-semifield-I but not weak under the literal definitions
  const Subject c3 = table_subject(chain_lattice(3), "C3");
  CHECK(certify(c3, Property::s_semifield_1).holds);
  CHECK_FALSE(certify(c3, Property::s_weak_semifield).holds);
  for (std::size_t n = 4; n <= 6; ++n) {
    const Subject cn = table_subject(chain_lattice(n), "C");
    CHECK(certify(cn, Property::s_semifield_1).holds);
    CHECK(certify(cn, Property::s_weak_semifield).holds);
  }
}

TEST_CASE("input-driven properties agree with brute force") {
  for (const Subject& subj : {table_subject(chain_lattice(4), "C4"), table_subject(zmod_ring(6), "Z6"),
                              table_subject(power_set_semiring(2), "P2")}) {
    const auto& s = subj.structure();
    for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
      const Json P = labels_of(s, mask);
      for (Property p : {Property::s_subsemiring, Property::s_ideal, Property::s_dual_ideal}) {
        CAPTURE(subj.name());
        CAPTURE(to_string(p));
        CAPTURE(P.dump());
        const Certificate c = certify(subj, p, parse_witness(subj, Json{{"P", P}}));
        CHECK(c.holds == brute_exists(subj, p, Json{{"P", P}}));
        CHECK(verify(subj, c).ok);
      }
    }
  }
}

TEST_CASE("supplied witnesses are replayed, not searched") {
  const Subject z10 = spec_subject(R"({"kind":"archetype","tags":["Z10","Z0"]})");
  const Json good = {{"A", {{"coords", {"values:0|2|4|6|8", "0"}}, {"or_zero", false}}}, {"z", {"0", "0"}}, {"u", {"6", "0"}}};
  const Certificate ok = certify(z10, Property::s_semiring_2, parse_witness(z10, good));
  CHECK(ok.holds);
  CHECK(exit_code(ok) == 0);
  Json bad = good;
  bad["u"] = {"2", "0"};
  const Certificate no = certify(z10, Property::s_semiring_2, parse_witness(z10, bad));
  CHECK_FALSE(no.holds);
  CHECK_FALSE(no.complete_search);
  CHECK(exit_code(no) == 2);
  CHECK(std::any_of(no.notes.begin(), no.notes.end(), [](const std::string& n) { return n.starts_with("supplied witness rejected"); }));
}

TEST_CASE("symbolic subjects without a rule ask for a witness") {
  const Subject z = spec_subject(R"({"kind":"archetype","tags":["Z"]})");
  try {
    certify(z, Property::s_unit);
    FAIL("searched");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::needs_witness);
  }
}

TEST_CASE("symbolic rules") {
  const Subject q0 = spec_subject(R"({"kind":"archetype","tags":["Q0"]})");
  const Certificate c = certify(q0, Property::s_semifield_1);
  CHECK_FALSE(c.holds);
  CHECK(c.complete_search);
  CHECK(exit_code(c) == 1);
  CHECK(verify(q0, c).ok);
  const Subject z0 = spec_subject(R"({"kind":"archetype","tags":["Z0"]})");
  const Certificate d = certify(z0, Property::s_semifield_1);
  REQUIRE(d.holds);
  CHECK(witness_json(z0, d.parts).at("A").at("coords") == Json{"multiples:2"});
  CHECK(oracle::accepts(z0, Property::s_semifield_1, witness_json(z0, d.parts)));
  const Subject zz = spec_subject(R"({"kind":"archetype","tags":["Z0","Z0","Z0"]})");
  const Certificate e = certify(zz, Property::s_idempotent);
  CHECK_FALSE(e.holds);
  CHECK(e.complete_search);
}

TEST_CASE("verification rejects a positive certificate with its witness removed") {
  const Subject m = table_subject(matrix_semiring(chain_lattice(2), 2), "M2");
  Certificate c = certify(m, Property::s_semiring_1);
  REQUIRE(c.holds);
  c.parts.clear();
  CHECK_FALSE(verify(m, c).ok);
}

TEST_CASE("certificate json carries the transcript") {
  const Subject z12 = table_subject(zmod_ring(12), "Z12");
  const Certificate c = certify(z12, Property::s_zero_divisor);
  const Json j = certificate_json(z12, c);
  CHECK(j.at("holds") == true);
  CHECK(j.at("transcript").size() == c.transcript.size());
  CHECK_FALSE(c.transcript.empty());
  CHECK(parse_witness(z12, j.at("witness")) == c.parts);
}

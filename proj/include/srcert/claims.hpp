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

#pragma once

// Regression corpus of claims about concrete structures. Each record names a
// subject, a check and the expected outcome; replay is deterministic.
//
// Record fields:
//   id        unique slug
//   subject   structure spec (or "space": space spec for semivector checks)
//   check     see run_check in claims.cpp for the list
//   property  certify / find-all only
//   inputs, witness   role -> value, as in witness files
//   args      check-specific parameters
//   expect    {"holds":B, "complete":B, "value":V, "witness":{..},
//              "contains":V, "error":"Code"}; absent keys are not compared
//   note      free text

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srcert/certificate.hpp"
#include "srcert/spec.hpp"

namespace srcert {

struct ClaimRecord {
  std::string id;
  Json doc;
};

struct ClaimResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double millis = 0;
};

std::vector<ClaimRecord> load_claims(const std::string& dir);
std::vector<ClaimRecord> parse_claims(const Json& array);

ClaimResult run_claim(const ClaimRecord& r);

// Glob with '*' and '?' over ids.
bool id_matches(std::string_view glob, std::string_view id);

// Runs on up to `workers` threads; results sorted by id.
std::vector<ClaimResult> run_claims(const std::vector<ClaimRecord>& records, std::size_t workers = 1);

// One line per claim: "PASS id detail" plus timing when asked.
std::string ledger_text(const std::vector<ClaimResult>& results, bool timing);

// For certify claims expecting a positive result: the subject and the
// certificate the claim produces.
std::optional<std::pair<Subject, Certificate>> positive_certificate(const ClaimRecord& r);

}  // namespace srcert

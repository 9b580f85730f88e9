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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "srcert/types.hpp"

namespace srcert {

enum class ErrorCode {
  cycle_detected,
  duplicate_label,
  not_a_lattice,
  not_boolean,
  axiom_violation,
  missing_one,
  cap_exceeded,
  not_strict,
  no_unit,
  too_few_atoms,
  unknown_kind,
  missing_param,
  type_mismatch,
  invalid_argument,
  needs_witness,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Index> witness = {},
        std::string detail = {});

  ErrorCode code() const noexcept { return code_; }
  // Offending element indices (pair for NotALattice, triple for AxiomViolation).
  const std::vector<Index>& witness() const noexcept { return witness_; }
  // Axiom name, parameter name or field path depending on the code.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::vector<Index> witness_;
  std::string detail_;
};

}  // namespace srcert

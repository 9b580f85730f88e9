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

#include "srcert/error.hpp"

namespace srcert {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::cycle_detected: return "CycleDetected";
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::not_a_lattice: return "NotALattice";
    case ErrorCode::not_boolean: return "NotBoolean";
    case ErrorCode::axiom_violation: return "AxiomViolation";
    case ErrorCode::missing_one: return "MissingOne";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::not_strict: return "NotStrict";
    case ErrorCode::no_unit: return "NoUnit";
    case ErrorCode::too_few_atoms: return "TooFewAtoms";
    case ErrorCode::unknown_kind: return "UnknownKind";
    case ErrorCode::missing_param: return "MissingParam";
    case ErrorCode::type_mismatch: return "TypeMismatch";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::needs_witness: return "NeedsWitness";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<Index> witness, std::string detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)),
      detail_(std::move(detail)) {}

}  // namespace srcert

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

// Machine-readable reports: certificates, witnesses, validation and
// classification, each as JSON with a short human summary alongside.

#include <string>

#include "srcert/certificate.hpp"
#include "srcert/spec.hpp"

namespace srcert {

// Witness file grammar, one key per role:
//   table subjects:    subsets are label arrays, elements are labels
//   symbolic subjects: subsets are {"coords":[d,..],"or_zero":B} where each d
//                      is "0", "all", "positive", "multiples:q",
//                      "values:x|y|..", or "within:TAG"; elements are arrays
//                      of coordinate strings
//   "side":            "left", "right" or "two_sided" (ideal-like properties)
Parts parse_witness(const Subject& s, const Json& j);
Json witness_json(const Subject& s, const Parts& parts);

std::string coord_descriptor(const CoordSet& c, const Component& comp);
CoordSet parse_coord_descriptor(std::string_view d, const Component& comp);

Json certificate_json(const Subject& s, const Certificate& c);
std::string certificate_summary(const Subject& s, const Certificate& c);

// Axiom report. "ok" is false for lattices that are not distributive (the
// failing triple is named) and for symbolic structures whose sampled laws fail.
Json validate_report(const Built& b);
// Flags, characteristic, element classes and a substructure census.
Json classify_report(const Built& b, std::size_t cap);

}  // namespace srcert

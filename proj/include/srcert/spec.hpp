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

// Structure specs: one JSON object per structure, validated before anything
// is built. Grammar (fields beyond these are rejected; "name" is allowed on
// every kind):
//
//   {"kind":"chain_lattice","n":N}            {"kind":"power_set","k":K}
//   {"kind":"lattice_tables","labels":[..],"join":[[..]],"meet":[[..]]}
//   {"kind":"lattice_tables","labels":[..],"covers":[["lo","hi"],..]}
//   {"kind":"table","labels":[..],"add":[[..]],"mul":[[..]],"require_zero":B}
//   {"kind":"zmod","n":N}
//   {"kind":"symmetric_group"|"full_transformation"|"cyclic_group"|"dihedral","n":N}
//   {"kind":"direct_product"|"mixed_product","factors":[spec,..]}
//   {"kind":"matrix","base":spec,"dim":K}
//   {"kind":"polynomial","base":spec,"max_degree":D}
//   {"kind":"group_semiring"|"semigroup_semiring"|"group_ring","coeff":spec,"carrier":spec}
//   {"kind":"v_of","carrier":spec}
//   {"kind":"archetype","tags":["Z0","Q","Z7",..]}
//
// Table entries are labels or indices. Space specs:
//   {"scalars":"Z0"|spec,"vectors":["Z0","Z"]|spec}

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "srcert/certificate.hpp"
#include "srcert/magma.hpp"
#include "srcert/poset.hpp"
#include "srcert/semivector.hpp"
#include "srcert/structure.hpp"
#include "srcert/symbolic.hpp"

namespace srcert {

using Json = nlohmann::json;

struct StructureSpec {
  Json doc;
  const std::string& kind() const;
  std::string name() const;
  friend bool operator==(const StructureSpec&, const StructureSpec&) = default;
};

// UnknownKind, MissingParam, TypeMismatch (detail: field path), or
// InvalidArgument for malformed text (message carries line and column).
StructureSpec parse_spec(std::string_view text);
StructureSpec spec_from_json(const Json& j);
// Canonical text: keys sorted, no insignificant whitespace.
std::string serialize(const StructureSpec& s);

// A built structure. Exactly one of table / symbolic / magma is set; lattice
// kinds also keep the lattice.
struct Built {
  std::string name;
  std::shared_ptr<const Structure> table;
  std::shared_ptr<const SymbolicSemiring> symbolic;
  std::shared_ptr<const FiniteMagma> magma;
  std::optional<FiniteLattice> lattice;
  // polynomial specs have their laws checked on samples only
  bool sampled_laws = false;
};

struct BuildOptions {
  // Largest finite structure materialized as tables.
  std::size_t materialize_cap = 4096;
};

Built build(const StructureSpec& s, const BuildOptions& opts = {});
Subject subject_of(const Built& b);

// Space specs.
using Space = std::variant<FiniteSpace, TupleSpace>;
Space build_space(const Json& j);

// Sampled check of the semiring laws on a symbolic structure; the first
// failing law, or nullopt.
std::optional<std::string> sampled_law_failure(const SymbolicSemiring& s);

}  // namespace srcert

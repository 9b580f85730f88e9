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

// Certificates for the Smarandache properties and their independent replay.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "srcert/structure.hpp"
#include "srcert/symbolic.hpp"
#include "srcert/types.hpp"

namespace srcert {

enum class Property {
  semifield,
  prime_semifield,
  s_semiring_1,
  s_semiring_2,
  s_subsemiring,
  s_ideal,
  s_pseudo_subsemiring,
  s_dual_ideal,
  s_pseudo_ideal,
  s_pseudo_dual_ideal,
  s_semidivision_ring,
  s_zero_divisor,
  s_anti_zero_divisor,
  s_idempotent,
  s_unit,
  s_semifield_1,
  s_weak_semifield,
  s_semifield_2,
  s_anti_semiring,
  s_anti_semifield,
  s_anti_ideal,
};

std::string_view to_string(Property p) noexcept;
std::optional<Property> parse_property(std::string_view name);
const std::vector<Property>& all_properties();

// Roles the caller supplies (the subset under test), and every role a
// positive certificate carries.
const std::vector<std::string>& input_roles(Property p);
const std::vector<std::string>& witness_roles(Property p);
bool is_element_property(Property p);

// The structure a certificate talks about: a finite table or an exact
// symbolic semiring. Table elements travel as one-coordinate Elements holding
// the index.
class Subject {
 public:
  static Subject table(std::shared_ptr<const Structure> s, std::string name);
  static Subject symbolic(std::shared_ptr<const SymbolicSemiring> s, std::string name);

  bool is_table() const noexcept { return static_cast<bool>(table_); }
  const Structure& structure() const { return *table_; }
  const std::shared_ptr<const Structure>& structure_ptr() const noexcept { return table_; }
  const SymbolicSemiring& ring() const { return *ring_; }
  const std::shared_ptr<const SymbolicSemiring>& ring_ptr() const noexcept { return ring_; }
  const std::string& name() const noexcept { return name_; }
  std::string describe() const;

  Element element(Index i) const { return Element{mpq_class(i)}; }
  Index index(const Element& x) const;
  std::string format(const Element& x) const;

 private:
  std::shared_ptr<const Structure> table_;
  std::shared_ptr<const SymbolicSemiring> ring_;
  std::string name_;
};

// A subset (table or symbolic), an element, or a textual option such as the
// side of an ideal.
using Part = std::variant<ElementSet, SymbolicSubset, Element, std::string>;
using Parts = std::vector<std::pair<std::string, Part>>;

const Part* find_part(const Parts& parts, std::string_view role);
void set_part(Parts& parts, std::string role, Part p);

struct Clause {
  std::string text;
  bool pass = false;
  // Checked on a sample of an infinite set rather than exhaustively.
  bool sampled = false;
};

struct Certificate {
  Property property = Property::semifield;
  std::string subject;
  bool holds = false;
  bool complete_search = true;
  Parts parts;
  std::vector<Clause> transcript;
  std::vector<std::string> notes;
};

struct Verification {
  bool ok = false;
  std::vector<Clause> transcript;
};

// Replays the defining clauses of the property on the subject's operations.
// A positive certificate verifies when every clause passes. A negative
// certificate with complete_search verifies when an exhaustive scan, written
// apart from the search code, finds no witness (table subjects) or when its
// recorded rule clauses replay (symbolic subjects).
Verification verify(const Subject& s, const Certificate& c, std::size_t cap = 1u << 16);

// Positive replay only: do the given parts witness the property?
Verification replay(const Subject& s, Property p, const Parts& parts);

}  // namespace srcert

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

// Exact symbolic semirings: tuples, matrices and group algebras whose
// coordinates live in number archetypes (Z0, Q0, R0, Z, Q, R) or in small
// table-backed semirings. Reals are represented by their rational points.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srcert/magma.hpp"
#include "srcert/structure.hpp"

namespace srcert {

enum class NumberTag { Z0, Q0, R0, Z, Q, R };

std::string_view to_string(NumberTag t) noexcept;
std::optional<NumberTag> parse_number_tag(std::string_view s);
bool tag_contains(NumberTag t, const mpq_class& q);
// Z, Q, R: every element has an additive inverse.
bool tag_is_group(NumberTag t) noexcept;

std::string format_rational(const mpq_class& q);
// Accepts "3", "-7", "1/2"; nullopt otherwise.
std::optional<mpq_class> parse_rational(std::string_view s);

// One coordinate domain. Table coordinates are stored as their element index.
class Component {
 public:
  static Component tag(NumberTag t);
  static Component table(std::shared_ptr<const Structure> s, std::string name);

  bool is_tag() const noexcept { return !table_; }
  NumberTag number_tag() const noexcept { return tag_; }
  const Structure& structure() const { return *table_; }
  const std::shared_ptr<const Structure>& structure_ptr() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }

  bool contains(const mpq_class& x) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class zero() const;
  std::optional<mpq_class> one() const;
  // Some y in the component with a + y = target (a * y = target).
  std::optional<mpq_class> solve_add(const mpq_class& a, const mpq_class& target) const;
  std::optional<mpq_class> solve_mul(const mpq_class& a, const mpq_class& target) const;
  bool group_like() const;
  std::optional<std::size_t> finite_size() const;
  std::string format(const mpq_class& x) const;
  std::optional<mpq_class> parse(std::string_view text) const;
  // Small deterministic point set used by sampled replay.
  std::vector<mpq_class> samples() const;

  friend bool operator==(const Component& a, const Component& b) {
    return a.tag_ == b.tag_ && a.table_ == b.table_ && a.name_ == b.name_;
  }

 private:
  NumberTag tag_ = NumberTag::Z0;
  std::shared_ptr<const Structure> table_;
  std::string name_;
};

using Element = std::vector<mpq_class>;

class SymbolicSemiring {
 public:
  virtual ~SymbolicSemiring() = default;

  virtual std::string describe() const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual std::optional<Element> one() const = 0;
  virtual std::string format(const Element& x) const = 0;
  // Multiplication known to commute for every pair.
  virtual bool known_commutative() const = 0;
  // y with a * y = target, when the carrier admits an exact procedure.
  virtual std::optional<Element> solve_mul(const Element& a, const Element& target) const;

  const std::vector<Component>& coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  Element add(const Element& a, const Element& b) const;
  Element zero() const;
  bool contains(const Element& x) const;
  std::optional<Element> solve_add(const Element& a, const Element& target) const;
  bool group_like() const;
  std::optional<std::size_t> finite_size() const;
  Element element_at(std::size_t i) const;
  std::size_t index_of(const Element& x) const;

 protected:
  explicit SymbolicSemiring(std::vector<Component> coords) : coords_(std::move(coords)) {}

 private:
  std::vector<Component> coords_;
};

// Componentwise product of components.
class TupleSemiring final : public SymbolicSemiring {
 public:
  explicit TupleSemiring(std::vector<Component> factors);
  std::string describe() const override;
  Element mul(const Element& a, const Element& b) const override;
  std::optional<Element> one() const override;
  std::string format(const Element& x) const override;
  bool known_commutative() const override;
  std::optional<Element> solve_mul(const Element& a, const Element& target) const override;
};

// k x k matrices over one component, row-major coordinates.
class MatrixSemiring final : public SymbolicSemiring {
 public:
  MatrixSemiring(Component base, std::size_t k);
  std::string describe() const override;
  Element mul(const Element& a, const Element& b) const override;
  std::optional<Element> one() const override;
  std::string format(const Element& x) const override;
  bool known_commutative() const override { return k_ == 1 && base().is_tag(); }
  std::size_t k() const noexcept { return k_; }
  const Component& base() const { return coords().front(); }

 private:
  std::size_t k_;
};

// Formal sums over a finite group or monoid with coefficients in a component;
// coordinate g is the coefficient of carrier element g.
class GroupAlgebra final : public SymbolicSemiring {
 public:
  GroupAlgebra(Component coeff, FiniteMagma carrier, std::string carrier_name);
  std::string describe() const override;
  Element mul(const Element& a, const Element& b) const override;
  std::optional<Element> one() const override;
  std::string format(const Element& x) const override;
  bool known_commutative() const override;
  const FiniteMagma& carrier() const noexcept { return carrier_; }
  const Component& coeff() const { return coords().front(); }

 private:
  FiniteMagma carrier_;
  std::string carrier_name_;
  std::optional<Index> identity_;
};

// Table structure of a finite symbolic semiring. CapExceeded beyond cap.
Structure materialize(const SymbolicSemiring& s, std::size_t cap = 4096);

// Per-coordinate description of an infinite or finite subset.
struct CoordSet {
  enum class Kind { zero, all, positive, multiples, values, within };
  Kind kind = Kind::all;
  mpq_class step;                 // multiples
  std::vector<mpq_class> values;  // values
  NumberTag tag = NumberTag::Z0;  // within

  static CoordSet zero_only() { return {Kind::zero, {}, {}, {}}; }
  static CoordSet everything() { return {Kind::all, {}, {}, {}}; }
  static CoordSet positive_part() { return {Kind::positive, {}, {}, {}}; }
  static CoordSet multiples_of(mpq_class p) { return {Kind::multiples, std::move(p), {}, {}}; }
  static CoordSet listed(std::vector<mpq_class> v) { return {Kind::values, {}, std::move(v), {}}; }
  static CoordSet inside(NumberTag t) { return {Kind::within, {}, {}, t}; }

  bool contains(const Component& c, const mpq_class& x) const;
  std::vector<mpq_class> samples(const Component& c) const;
  std::string describe(const Component& c) const;
  friend bool operator==(const CoordSet&, const CoordSet&) = default;
};

// Product of coordinate sets, optionally united with the zero element.
struct SymbolicSubset {
  std::vector<CoordSet> coords;
  bool or_zero = false;

  bool contains(const SymbolicSemiring& s, const Element& x) const;
  std::string describe(const SymbolicSemiring& s) const;
  // Deterministic sample of members: every combination when there are at
  // most `limit`, otherwise a seeded selection that always includes the zero
  // element (when a member) and the per-coordinate extremes.
  std::vector<Element> samples(const SymbolicSemiring& s, std::size_t limit = 48) const;
  friend bool operator==(const SymbolicSubset&, const SymbolicSubset&) = default;
};

SymbolicSubset whole(const SymbolicSemiring& s);

}  // namespace srcert

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

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srcert/magma.hpp"
#include "srcert/poset.hpp"
#include "srcert/structure.hpp"
#include "srcert/symbolic.hpp"

namespace srcert {

// Distributive lattice as a semiring: + is join, * is meet. Non-distributive
// lattices are rejected with a distributivity AxiomViolation.
Structure lattice_semiring(const FiniteLattice& l);
Structure chain_lattice(std::size_t n);
Structure power_set_semiring(std::size_t k);

Structure zmod_ring(std::size_t n);

// Componentwise tables; labels "(x,y,...)".
Structure direct_product(std::span<const Structure> factors);
// Direct product that keeps a kind tag per factor ("semiring", "ring", "field", ...).
Structure mixed_direct_product(std::span<const Structure> factors);
std::string kind_tag(const Structure& s);

// All k x k matrices over a table base, materialized; CapExceeded when
// |base|^(k*k) exceeds cap. Use MatrixSemiring for lazy element arithmetic.
Structure matrix_semiring(const Structure& base, std::size_t k, std::size_t cap = 4096);

// Permutations composed as (p*q)(x) = p(q(x)). S3 uses the labels 1, p1..p5
// with p1 = 132, p2 = 321, p3 = 213, p4 = 231, p5 = 312 in one-line form.
FiniteMagma symmetric_group(std::size_t n);
// All maps of {1..n} to itself (n^n elements), one-line labels "[f(1),...]".
FiniteMagma full_transformation(std::size_t n);
// Labels 1, g, g^2, ..., g^(n-1).
FiniteMagma cyclic_group(std::size_t n);
// Labels 1, r, ..., r^(n-1), s, sr, ..., sr^(n-1).
FiniteMagma dihedral_group(std::size_t n);

// Adjoin inf: x*inf = inf*x = inf, x+x = x, x+y = inf for x != y. The result
// has no additive identity once the semigroup has two or more elements.
Structure v_of(const FiniteMagma& s);

// Sparse polynomial with coefficients in a component (table coefficients are
// element indices). Terms ascend by exponent; zero coefficients are dropped.
struct SparsePoly {
  std::vector<std::pair<std::uint64_t, mpq_class>> terms;
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;
};

SparsePoly normalize(SparsePoly p, const Component& base);
SparsePoly poly_add(const SparsePoly& p, const SparsePoly& q, const Component& base);
SparsePoly poly_mul(const SparsePoly& p, const SparsePoly& q, const Component& base);
// Terms of degree above max_degree removed.
SparsePoly truncate(const SparsePoly& p, std::uint64_t max_degree);
std::string format_poly(const SparsePoly& p, const Component& base);

// Polynomials of degree at most max_degree over a component; products drop
// the terms above max_degree. Coordinate i is the coefficient of x^i.
class PolynomialSemiring final : public SymbolicSemiring {
 public:
  PolynomialSemiring(Component base, std::size_t max_degree);
  std::string describe() const override;
  Element mul(const Element& a, const Element& b) const override;
  std::optional<Element> one() const override;
  std::string format(const Element& x) const override;
  bool known_commutative() const override { return base().is_tag() || base().structure().has(Flag::commutative_mul); }
  std::size_t max_degree() const noexcept { return dim() - 1; }
  const Component& base() const { return coords().front(); }
};

// Group (or monoid) semiring element: carrier index -> coefficient index.
struct FormalSum {
  std::map<Index, Index> coeffs;
  friend bool operator==(const FormalSum&, const FormalSum&) = default;
  friend auto operator<=>(const FormalSum&, const FormalSum&) = default;
};

class GroupSemiring {
 public:
  enum class Mode { semiring, ring };

  // semiring mode: coefficients must be a strict commutative semiring with a
  // unit (NotStrict, NoUnit). ring mode: coefficients must form a ring.
  GroupSemiring(std::shared_ptr<const Structure> coeff, FiniteMagma carrier, std::string name,
                Mode mode = Mode::semiring);

  const Structure& coeff() const noexcept { return *coeff_; }
  const FiniteMagma& carrier() const noexcept { return carrier_; }
  const std::string& name() const noexcept { return name_; }
  Index identity() const noexcept { return identity_; }

  FormalSum zero() const { return {}; }
  FormalSum add(const FormalSum& a, const FormalSum& b) const;
  FormalSum mul(const FormalSum& a, const FormalSum& b) const;
  // s at the identity of the carrier.
  FormalSum lift(Index s) const;
  // 1 * g.
  FormalSum embed(Index g) const;
  // s(sum s_i g_i) = sum (s s_i) g_i.
  FormalSum scale(Index s, const FormalSum& a) const;
  // True when a is 1*g for some carrier element g.
  bool in_carrier(const FormalSum& a) const;

  std::string format(const FormalSum& a) const;
  // Terms joined by '+': "c*g", "g" (coefficient 1) or "c" (at the identity).
  FormalSum parse(std::string_view text) const;

  // |coeff|^|carrier|, saturating at 2^62.
  std::uint64_t order() const;
  Structure materialize(std::size_t cap = 4096) const;
  // Equals the characteristic of the coefficients.
  Characteristic characteristic() const;
  // First pair (x, y) of nonzero sums supported on at most two carrier
  // elements with x*y = 0, in enumeration order.
  std::optional<std::pair<FormalSum, FormalSum>> zero_divisor_support2() const;
  // Sum with coordinates in carrier order (coefficient indices).
  FormalSum from_coordinates(std::span<const Index> coords) const;

 private:
  std::shared_ptr<const Structure> coeff_;
  FiniteMagma carrier_;
  std::string name_;
  Index identity_ = 0;
  Index czero_ = 0;
  std::optional<Index> cone_;
};

struct AtomFactors {
  FormalSum alpha;
  FormalSum beta;
  Index atom = 0;        // coefficient index of a
  Index complement = 0;  // coefficient index of a'
  std::uint64_t k = 0;
  std::uint64_t r = 0;
};

// For a Boolean coefficient semiring with at least two atoms and the cyclic
// carrier built by cyclic_group(n): alpha = a g^k + a' g^r, beta = a g^r + a' g^k
// with k + r = i (mod n) and k != r, so alpha * beta = g^i and neither factor
// lies in the carrier. NotBoolean, TooFewAtoms.
AtomFactors atom_factorization(const GroupSemiring& gs, std::uint64_t i);
bool verify_atom_factorization(const GroupSemiring& gs, const FormalSum& alpha, const FormalSum& beta,
                               std::uint64_t i);

}  // namespace srcert

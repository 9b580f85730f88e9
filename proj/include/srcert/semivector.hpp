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

// Semivector spaces over semifields: finite table spaces and exact tuple
// spaces over number archetypes.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "srcert/certificate.hpp"
#include "srcert/magma.hpp"
#include "srcert/poset.hpp"
#include "srcert/structure.hpp"
#include "srcert/symbolic.hpp"
#include "srcert/types.hpp"

namespace srcert {

// ---- finite spaces ----

class FiniteSpace {
 public:
  // action[c][v] = c . v for scalar index c and vector index v.
  FiniteSpace(std::shared_ptr<const Structure> scalars, FiniteMagma add, std::vector<std::vector<Index>> action);

  std::size_t size() const noexcept { return add_.size(); }
  const Structure& scalars() const noexcept { return *scalars_; }
  const FiniteMagma& add_table() const noexcept { return add_; }
  Index add(Index a, Index b) const noexcept { return add_(a, b); }
  Index act(Index c, Index v) const noexcept { return action_[c][v]; }
  std::optional<Index> zero() const noexcept { return zero_; }
  const std::string& label(Index v) const { return add_.label(v); }
  std::optional<Index> find(std::string_view label) const { return add_.find(label); }

 private:
  std::shared_ptr<const Structure> scalars_;
  FiniteMagma add_;
  std::vector<std::vector<Index>> action_;
  std::optional<Index> zero_;
};

struct SpaceAxioms {
  Verdict verdict;
  // 1-based number of the first failing condition (0 when all hold).
  int failed = 0;
  std::string law;
};

// The ten defining conditions, exhaustively. Witness indices are vectors and
// scalars in the order the condition names them.
SpaceAxioms check_space_axioms(const FiniteSpace& sp);

// Lattice vectors with join as addition over C2: 0.x = bottom, 1.x = x.
FiniteSpace lattice_space(const FiniteLattice& l);

ElementSet span(const FiniteSpace& sp, const ElementSet& gens);
// Coefficients (scalar indices, one per generator) with sum c_i g_i = v.
std::optional<std::vector<Index>> combination(const FiniteSpace& sp, const std::vector<Index>& gens, Index v,
                                              Exec exec = default_exec());

struct Dependence {
  bool independent = true;
  // Position in the generator list of a member spanned by the others.
  std::optional<std::size_t> member;
  bool complete = true;
};

Dependence is_independent(const FiniteSpace& sp, const std::vector<Index>& gens);

struct BasisCensus {
  std::vector<std::vector<Index>> bases;
  bool unique = false;
  // Reported only for a certified unique basis.
  std::optional<std::size_t> dimension;
  bool complete = true;
};

// Every independent spanning set with at most size_cap members.
BasisCensus bases(const FiniteSpace& sp, std::size_t size_cap = 6);

// All scalar assignments over the basis that reproduce v.
std::vector<std::vector<Index>> representations(const FiniteSpace& sp, const std::vector<Index>& basis, Index v,
                                                Exec exec = default_exec());
std::size_t representation_count(const FiniteSpace& sp, const std::vector<Index>& basis, Index v,
                                 Exec exec = default_exec());

// Witness: a proper additive subgroup with at least two vectors.
std::optional<ElementSet> s_semivector_witness(const FiniteSpace& sp);

// ---- tuple spaces over number archetypes ----

// Vectors are tuples with coordinates in the factor tags; scalars act
// componentwise. With a field tag (Q, R) as scalars the space is a vector
// space.
class TupleSpace {
 public:
  TupleSpace(std::vector<NumberTag> factors, NumberTag scalars);

  const std::vector<NumberTag>& factors() const noexcept { return factors_; }
  NumberTag scalars() const noexcept { return scalars_; }
  std::size_t dim() const noexcept { return factors_.size(); }
  const SymbolicSemiring& ring() const { return *ring_; }
  const std::shared_ptr<const SymbolicSemiring>& ring_ptr() const noexcept { return ring_; }
  bool contains(const Element& v) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const mpq_class& c, const Element& v) const;
  Element zero() const;
  std::string format(const Element& v) const;
  std::string describe() const;

 private:
  std::vector<NumberTag> factors_;
  NumberTag scalars_;
  std::shared_ptr<const SymbolicSemiring> ring_;
};

// Scalar tags that keep every factor closed under scaling.
std::vector<NumberTag> valid_scalar_choices(const std::vector<NumberTag>& factors);
// At least one factor is Z, Q or R.
bool has_group_factor(const std::vector<NumberTag>& factors);

struct SpanMembership {
  bool member = false;
  std::vector<mpq_class> coefficients;
  // false when the search was bounded rather than decided.
  bool complete = true;
};

// Z0 scalars: exhaustive box search, exact when every generator entry is
// nonnegative. Q0 and R0 scalars: exact cone membership through linearly
// independent generator subsets (a nonnegative solution exists on one of
// them whenever one exists at all).
SpanMembership in_span(const TupleSpace& sp, const std::vector<Element>& gens, const Element& v,
                       std::int64_t search_bound = 12);

Dependence is_independent(const TupleSpace& sp, const std::vector<Element>& gens);

struct TupleBasis {
  std::vector<Element> basis;
  bool unique = false;
  std::optional<std::size_t> dimension;
  // Indecomposability of each unit vector; uniqueness rests on it.
  std::vector<Clause> indecomposable;
};

// Unit vectors; unique (with dimension) when every factor is Z0 over Z0.
TupleBasis standard_basis(const TupleSpace& sp);

// Witness: a factor subgroup embedded with zeros elsewhere.
std::optional<SymbolicSubset> s_semivector_witness(const TupleSpace& sp);

// Exact per-coordinate facts about a product subset W.
bool closed_under_addition(const TupleSpace& sp, const SymbolicSubset& w);
bool closed_under_scalars(const TupleSpace& sp, const SymbolicSubset& w, NumberTag scalars);
bool proper_subset(const TupleSpace& sp, const SymbolicSubset& w);
bool is_additive_group(const TupleSpace& sp, const SymbolicSubset& w);
// A subgroup of W with at least two elements, as a product subset.
std::optional<SymbolicSubset> nontrivial_subgroup(const TupleSpace& sp, const SymbolicSubset& w);

struct SpaceCertificate {
  std::string property;
  bool holds = false;
  std::optional<SymbolicSubset> witness;
  std::vector<Clause> transcript;
};

SpaceCertificate certify_s_subsemivector(const TupleSpace& sp, const SymbolicSubset& w);
SpaceCertificate certify_s_pseudo_semivector(const TupleSpace& sp, const SymbolicSubset& w, NumberTag p);
// sp: a vector space over a field tag; s: the semifield the subspace uses.
SpaceCertificate certify_s_anti_semivector(const TupleSpace& sp, const SymbolicSubset& w, NumberTag s);

struct LinearMapCheck {
  Verdict verdict;
  // First failing (c, p1, p2) when the law fails, or the point whose image
  // leaves C.
  std::vector<Element> counterexample;
  std::size_t checked = 0;
};

using TupleMap = std::function<Element(const Element&)>;

// Default grid for coefficients and coordinates.
std::vector<mpq_class> default_grid();

// T(c p1 + p2) = c T(p1) + T(p2) and T(p) in C for p, p1, p2 in P, on the
// grid points of P and the grid coefficients that are scalars.
LinearMapCheck check_s_linear_map(const TupleMap& t, const TupleSpace& v, const TupleSpace& w,
                                  const SymbolicSubset& p, const SymbolicSubset& c,
                                  const std::vector<mpq_class>& grid = default_grid());

}  // namespace srcert

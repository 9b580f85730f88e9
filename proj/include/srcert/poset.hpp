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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srcert/magma.hpp"
#include "srcert/types.hpp"

namespace srcert {

class FinitePoset {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }
  std::optional<Index> find(std::string_view label) const;
  bool leq(Index a, Index b) const noexcept { return up_[a].contains(b); }
  bool less(Index a, Index b) const noexcept { return a != b && leq(a, b); }
  // Every related pair (a,b), a <= b, reflexive pairs included, sorted.
  std::vector<std::pair<Index, Index>> relation() const;

 private:
  friend FinitePoset poset_from_leq(std::vector<std::string>, std::span<const std::pair<Index, Index>>);
  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
};

// Reflexive-transitive closure of the given pairs; CycleDetected when the
// closure is not antisymmetric, DuplicateLabel on repeated labels.
FinitePoset poset_from_leq(std::vector<std::string> labels,
                           std::span<const std::pair<Index, Index>> pairs);
FinitePoset poset_from_leq(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& pairs);

class FiniteLattice {
 public:
  const FinitePoset& poset() const noexcept { return poset_; }
  const OpTable& meet_table() const noexcept { return meet_; }
  const OpTable& join_table() const noexcept { return join_; }
  Index meet(Index a, Index b) const noexcept { return meet_(a, b); }
  Index join(Index a, Index b) const noexcept { return join_(a, b); }
  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::vector<std::string>& labels() const noexcept { return poset_.labels(); }
  bool leq(Index a, Index b) const noexcept { return poset_.leq(a, b); }

 private:
  friend FiniteLattice as_lattice(const FinitePoset&);
  FinitePoset poset_;
  OpTable meet_;
  OpTable join_;
  Index bottom_ = 0;
  Index top_ = 0;
};

// Exhaustive inf/sup; NotALattice names the first pair lacking one.
FiniteLattice as_lattice(const FinitePoset& p);

// Algebraic lattice from join/meet tables: checks commutativity, associativity,
// absorption and idempotence (AxiomViolation otherwise) and derives the order
// a <= b iff meet(a,b) = a.
FiniteLattice lattice_from_tables(const OpTable& join, const OpTable& meet);

struct HasseDiagram {
  std::vector<std::string> nodes;
  std::vector<std::pair<Index, Index>> covers;  // (lower, upper), sorted
  friend bool operator==(const HasseDiagram&, const HasseDiagram&) = default;
};

HasseDiagram hasse(const FinitePoset& p);
inline HasseDiagram hasse(const FiniteLattice& l) { return hasse(l.poset()); }
FinitePoset closure_of(const HasseDiagram& h);
std::string to_dot(const HasseDiagram& h, std::string_view graph_name = "hasse");

Verdict is_distributive(const FiniteLattice& l, Exec exec = default_exec());
Verdict is_modular(const FiniteLattice& l, Exec exec = default_exec());
std::vector<Index> complements(const FiniteLattice& l, Index x);
bool is_complemented(const FiniteLattice& l);
bool is_boolean(const FiniteLattice& l);
std::vector<Index> atoms(const FiniteLattice& l);

struct AtomIsomorphism {
  std::vector<Index> atoms;
  // image[x] = bitmask over positions in `atoms` of the atoms below x.
  std::vector<std::uint64_t> image;
};

// Lattice isomorphism onto the power set of the atoms, checked against the
// join and meet tables before it is returned. NotBoolean otherwise.
AtomIsomorphism boolean_atom_iso(const FiniteLattice& l);

namespace lattices {
// Labels "0","a1",...,"a(n-2)","1" from bottom to top.
FiniteLattice chain(std::size_t n);
FiniteLattice chain(std::vector<std::string> bottom_to_top);
// Subsets of {x1..xk}; element i is the subset with bitmask i.
FiniteLattice power_set(std::size_t k);
std::vector<std::string> power_set_labels(std::size_t k);
// 0 < a < c < 1 and 0 < b < 1.
FiniteLattice pentagon();
// 0 < a, b, c < 1 with a, b, c pairwise incomparable.
FiniteLattice diamond();
// 0 < a, b < 1, the four-element Boolean algebra.
FiniteLattice square();
}  // namespace lattices

}  // namespace srcert

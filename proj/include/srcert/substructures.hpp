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
#include <vector>

#include "srcert/magma.hpp"
#include "srcert/poset.hpp"
#include "srcert/structure.hpp"
#include "srcert/types.hpp"

namespace srcert {

inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 16;

// Subsets found by a search; complete is false when the cap stopped it early.
struct SubsetCensus {
  std::vector<ElementSet> sets;  // canonical order
  bool complete = true;
};

// Smallest subset containing gens and closed under + and *.
ElementSet closure(const Structure& s, const ElementSet& gens);
bool closed_under_ops(const Structure& s, const ElementSet& subset);
// Element of the subset acting as additive (multiplicative) identity on it.
std::optional<Index> relative_zero(const Structure& s, const ElementSet& subset);
std::optional<Index> relative_one(const Structure& s, const ElementSet& subset);
bool is_subsemiring(const Structure& s, const ElementSet& subset);

// Every nonempty subset closed under + and *, by breadth-first growth of
// generator closures. Stops with complete=false after `cap` distinct sets.
SubsetCensus closed_subsets(const Structure& s, std::size_t cap = kDefaultSubsetCap,
                            Exec exec = default_exec());
// Closed subsets C with base <= C <= within, same growth and cap.
SubsetCensus closed_subsets_between(const Structure& s, const ElementSet& base, const ElementSet& within,
                                    std::size_t cap = kDefaultSubsetCap, Exec exec = default_exec());
// closed_subsets filtered to those holding their own additive identity.
SubsetCensus subsemirings(const Structure& s, std::size_t cap = kDefaultSubsetCap,
                          Exec exec = default_exec());

enum class Side { left, right, two_sided };
bool is_ideal(const Structure& s, const ElementSet& subset, Side side);

struct Congruence {
  std::vector<Index> class_of;  // class ids numbered by first occurrence
  std::size_t classes() const;
  bool related(Index a, Index b) const { return class_of[a] == class_of[b]; }
  bool is_identity() const { return classes() == class_of.size(); }
  bool is_full() const { return classes() <= 1; }
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

Congruence congruence_closure(const Structure& s, Index a, Index b);
// Compatibility of the partition with c+., .+c, c*. and .*c.
bool is_congruence(const Structure& s, const Congruence& c);
// Witness: first pair (a,b), a<b, whose closure is a proper congruence.
Verdict is_congruence_simple(const Structure& s, Exec exec = default_exec());

enum class SubgroupMethod { idempotent_anchored, exhaustive };

// For each idempotent e, the maximal subgroup with identity e.
std::vector<ElementSet> maximal_subgroups(const FiniteMagma& m);
// All subgroups of an associative magma in canonical order. The exhaustive
// method enumerates every subset and is limited to 20 elements.
std::vector<ElementSet> subgroups_of_semigroup(const FiniteMagma& m,
                                               SubgroupMethod method = SubgroupMethod::idempotent_anchored);
// Smallest proper subgroup with at least two elements.
std::optional<ElementSet> s_semigroup_witness(const FiniteMagma& m);

enum class HomKind { semiring, additive, multiplicative, lattice, ring };

struct HomReport {
  Verdict verdict;  // witness (a,b) of the first failing pair
  std::string failed_law;
  std::optional<ElementSet> kernel;  // ring kind only
};

HomReport check_hom(std::span<const Index> f, const Structure& src, const Structure& dst, HomKind kind);

struct StarReport {
  Verdict monotone;     // witness (a,b,c)
  Verdict fixed_point;  // witness (a): a*star(a) + 1 <= star(a) fails
  Verdict induction;    // witness (a,b,x): a*x + b <= x but star(a)*b not <= x
  bool all() const { return monotone.holds && fixed_point.holds && induction.holds; }
};

StarReport check_inductive_star(const Structure& s, const FinitePoset& order, std::span<const Index> star);

}  // namespace srcert

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

#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srcert/magma.hpp"
#include "srcert/types.hpp"

namespace srcert {

enum class Flag : unsigned {
  semigroup,
  group,
  semiring,
  ring,
  field,
  semifield,
  lattice_derived,
  strict,
  zero_absorbing,
  commutative_add,
  commutative_mul,
  has_one,
  congruence_simple,
};
inline constexpr std::size_t kFlagCount = 13;

std::string_view to_string(Flag f) noexcept;

class FlagSet {
 public:
  bool has(Flag f) const noexcept { return bits_.test(static_cast<std::size_t>(f)); }
  void set(Flag f, bool on = true) noexcept { bits_.set(static_cast<std::size_t>(f), on); }
  std::vector<Flag> list() const;

 private:
  std::bitset<kFlagCount> bits_;
};

struct RawTables {
  std::vector<std::string> labels;
  std::vector<Index> add;  // row-major n*n
  std::vector<Index> mul;  // row-major n*n
};

struct AxiomOptions {
  // Off only for semirings without additive identity (the V(S) adjunction).
  bool require_zero = true;
  Exec exec = default_exec();
  // congruence_simple is computed when the carrier has at most this many elements.
  std::size_t simplicity_limit = 64;
};

// A validated finite semiring. Immutable; only validate_semiring builds one.
class Structure {
 public:
  std::size_t size() const noexcept { return add_.size(); }
  const std::vector<std::string>& labels() const noexcept { return add_.labels(); }
  const std::string& label(Index i) const { return add_.label(i); }
  std::optional<Index> find(std::string_view label) const { return add_.find(label); }
  const FiniteMagma& add_table() const noexcept { return add_; }
  const FiniteMagma& mul_table() const noexcept { return mul_; }
  Index add(Index a, Index b) const noexcept { return add_(a, b); }
  Index mul(Index a, Index b) const noexcept { return mul_(a, b); }
  std::optional<Index> zero() const noexcept { return zero_; }
  std::optional<Index> one() const noexcept { return one_; }
  bool has(Flag f) const noexcept { return flags_.has(f); }
  const FlagSet& flags() const noexcept { return flags_; }
  // Kind tags of the factors when built as a (mixed) direct product.
  const std::vector<std::string>& factor_tags() const noexcept { return factor_tags_; }
  Structure with_factor_tags(std::vector<std::string> tags) const;
  RawTables raw() const;

 private:
  friend Structure validate_semiring(FiniteMagma, FiniteMagma, const AxiomOptions&);
  FiniteMagma add_;
  FiniteMagma mul_;
  std::optional<Index> zero_;
  std::optional<Index> one_;
  FlagSet flags_;
  std::vector<std::string> factor_tags_;
};

// Checks (S,+) commutative monoid, (S,.) semigroup and both distributive laws;
// AxiomViolation names the axiom and the first failing tuple. Absorption of
// zero is reported as a flag and is not required.
Structure validate_semiring(FiniteMagma add, FiniteMagma mul, const AxiomOptions& opts = {});
Structure validate_semiring(RawTables raw, const AxiomOptions& opts = {});

struct Characteristic {
  enum class Kind { zero, finite, undefined };
  Kind kind = Kind::undefined;
  std::uint64_t m = 0;
  std::string to_string() const;
  friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

Characteristic characteristic(const Structure& s);

// Witness: first pair (a,b) of nonzero elements with a + b = 0.
Verdict is_strict(const Structure& s);
// Witness: first pair (a,b) of nonzero elements with a * b = 0.
Verdict zero_divisor_free(const Structure& s);
// Witness: first x with 0x != 0 or x0 != 0.
Verdict zero_absorbing(const Structure& s);

struct ElementClasses {
  std::vector<Index> zero_divisors;
  std::vector<std::pair<Index, Index>> zero_divisor_pairs;
  std::vector<Index> idempotents;
  std::vector<Index> units;        // xy = 1 or yx = 1 for some y
  std::vector<Index> invertibles;  // xy = yx = 1 for some y
};

ElementClasses classify_elements(const Structure& s);

}  // namespace srcert

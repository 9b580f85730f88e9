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

#include "srcert/structure.hpp"

#include <numeric>
#include <unordered_map>

#include "srcert/error.hpp"
#include "srcert/kernels.hpp"
#include "srcert/substructures.hpp"

namespace srcert {

std::string_view to_string(Flag f) noexcept {
  switch (f) {
    case Flag::semigroup: return "semigroup";
    case Flag::group: return "group";
    case Flag::semiring: return "semiring";
    case Flag::ring: return "ring";
    case Flag::field: return "field";
    case Flag::semifield: return "semifield";
    case Flag::lattice_derived: return "lattice_derived";
    case Flag::strict: return "strict";
    case Flag::zero_absorbing: return "zero_absorbing";
    case Flag::commutative_add: return "commutative_add";
    case Flag::commutative_mul: return "commutative_mul";
    case Flag::has_one: return "has_one";
    case Flag::congruence_simple: return "congruence_simple";
  }
  return "?";
}

std::vector<Flag> FlagSet::list() const {
  std::vector<Flag> out;
  for (std::size_t i = 0; i < kFlagCount; ++i) {
    if (bits_.test(i)) out.push_back(static_cast<Flag>(i));
  }
  return out;
}

Structure Structure::with_factor_tags(std::vector<std::string> tags) const {
  Structure s = *this;
  s.factor_tags_ = std::move(tags);
  return s;
}

RawTables Structure::raw() const {
  return {labels(), {add_.table().begin(), add_.table().end()}, {mul_.table().begin(), mul_.table().end()}};
}

namespace {

[[noreturn]] void violation(const std::string& axiom, std::vector<Index> w, const FiniteMagma& m) {
  std::string msg = axiom + " fails at (";
  for (std::size_t i = 0; i < w.size(); ++i) msg += (i ? "," : "") + m.label(w[i]);
  throw Error(ErrorCode::axiom_violation, msg + ")", std::move(w), axiom);
}

}  // namespace

Structure validate_semiring(FiniteMagma add, FiniteMagma mul, const AxiomOptions& opts) {
  if (add.labels() != mul.labels()) {
    throw Error(ErrorCode::invalid_argument, "addition and multiplication tables disagree on labels");
  }
  const auto n = static_cast<Index>(add.size());
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty carrier");
  if (auto v = commutativity(add); !v) violation("additive commutativity", v.witness, add);
  if (auto v = associativity(add, opts.exec); !v) violation("additive associativity", v.witness, add);
  if (auto v = associativity(mul, opts.exec); !v) violation("multiplicative associativity", v.witness, add);
  auto left = kernels::first_triple(
      n, [&](Index a, Index b, Index c) { return mul(a, add(b, c)) != add(mul(a, b), mul(a, c)); },
      opts.exec);
  if (left) violation("left distributivity", {(*left)[0], (*left)[1], (*left)[2]}, add);
  auto right = kernels::first_triple(
      n, [&](Index a, Index b, Index c) { return mul(add(b, c), a) != add(mul(b, a), mul(c, a)); },
      opts.exec);
  if (right) violation("right distributivity", {(*right)[0], (*right)[1], (*right)[2]}, add);

  Structure s;
  s.zero_ = identity_element(add);
  if (!s.zero_ && opts.require_zero) {
    throw Error(ErrorCode::axiom_violation, "no additive identity", {}, "additive identity");
  }
  s.one_ = identity_element(mul);
  s.add_ = std::move(add);
  s.mul_ = std::move(mul);

  FlagSet& f = s.flags_;
  f.set(Flag::semigroup);
  f.set(Flag::semiring);
  f.set(Flag::commutative_add);
  f.set(Flag::commutative_mul, commutativity(s.mul_).holds);
  f.set(Flag::has_one, s.one_.has_value());
  f.set(Flag::group, is_group(s.mul_));

  bool idempotent = true;
  bool absorption = true;
  for (Index a = 0; a < n; ++a) {
    idempotent = idempotent && s.add(a, a) == a && s.mul(a, a) == a;
    for (Index b = 0; b < n && absorption; ++b) {
      absorption = s.add(a, s.mul(a, b)) == a && s.mul(a, s.add(a, b)) == a;
    }
  }
  f.set(Flag::lattice_derived, idempotent && absorption && f.has(Flag::commutative_mul));

  if (s.zero_) {
    const Index z = *s.zero_;
    bool ring = true;
    for (Index a = 0; a < n && ring; ++a) {
      bool inv = false;
      for (Index b = 0; b < n && !inv; ++b) inv = s.add(a, b) == z;
      ring = inv;
    }
    f.set(Flag::ring, ring);
    f.set(Flag::strict, is_strict(s).holds);
    f.set(Flag::zero_absorbing, zero_absorbing(s).holds);
    const bool unital = s.one_ && *s.one_ != z;
    f.set(Flag::semifield, unital && f.has(Flag::commutative_mul) && f.has(Flag::strict) &&
                               zero_divisor_free(s).holds);
    bool field = unital && ring && f.has(Flag::commutative_mul);
    for (Index a = 0; a < n && field; ++a) {
      if (a == z) continue;
      bool inv = false;
      for (Index b = 0; b < n && !inv; ++b) inv = s.mul(a, b) == *s.one_;
      field = inv;
    }
    f.set(Flag::field, field);
  }
  if (n <= opts.simplicity_limit) f.set(Flag::congruence_simple, is_congruence_simple(s, opts.exec).holds);
  return s;
}

Structure validate_semiring(RawTables raw, const AxiomOptions& opts) {
  auto labels = raw.labels;
  return validate_semiring(FiniteMagma(std::move(labels), std::move(raw.add)),
                           FiniteMagma(std::move(raw.labels), std::move(raw.mul)), opts);
}

std::string Characteristic::to_string() const {
  switch (kind) {
    case Kind::zero: return "0";
    case Kind::finite: return std::to_string(m);
    case Kind::undefined: return "undefined";
  }
  return "?";
}

Characteristic characteristic(const Structure& s) {
  if (!s.zero()) return {};
  const Index z = *s.zero();
  const auto n = static_cast<Index>(s.size());
  // Per element: the orbit x, 2x, 3x, ... is eventually periodic. Zero either
  // occurs once in the tail (exact multiple) or on the cycle (congruence class).
  struct Orbit {
    std::uint64_t mu, lambda, t;
  };
  std::vector<Orbit> orbits;
  orbits.reserve(n);
  std::uint64_t bound_mu = 1;
  std::uint64_t bound_lcm = 1;
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 32;
  for (Index x = 0; x < n; ++x) {
    std::unordered_map<Index, std::uint64_t> first;
    Index cur = x;
    std::uint64_t k = 1;
    std::optional<std::uint64_t> zero_at;
    while (true) {
      auto [it, fresh] = first.emplace(cur, k);
      if (!fresh) break;
      if (cur == z && !zero_at) zero_at = k;
      cur = s.add(cur, x);
      ++k;
    }
    if (!zero_at) return {};
    const std::uint64_t mu = first[cur];
    const std::uint64_t lambda = k - mu;
    orbits.push_back({mu, lambda, *zero_at});
    bound_mu = std::max(bound_mu, mu);
    bound_lcm = std::lcm(bound_lcm, lambda);
    if (bound_lcm > kLimit) throw Error(ErrorCode::cap_exceeded, "characteristic search bound too large");
  }
  const std::uint64_t bound = bound_mu + bound_lcm;
  for (std::uint64_t m = 1; m <= bound; ++m) {
    bool all = true;
    for (const auto& o : orbits) {
      const bool hit = o.t < o.mu ? m == o.t : (m >= o.mu && (m - o.t) % o.lambda == 0 && m >= o.t);
      if (!hit) {
        all = false;
        break;
      }
    }
    if (all) return {Characteristic::Kind::finite, m};
  }
  return {};
}

Verdict is_strict(const Structure& s) {
  if (!s.zero()) return Verdict::no({});
  const Index z = *s.zero();
  for (Index a = 0; a < s.size(); ++a) {
    if (a == z) continue;
    for (Index b = 0; b < s.size(); ++b) {
      if (b != z && s.add(a, b) == z) return Verdict::no({a, b});
    }
  }
  return Verdict::yes();
}

Verdict zero_divisor_free(const Structure& s) {
  if (!s.zero()) return Verdict::no({});
  const Index z = *s.zero();
  for (Index a = 0; a < s.size(); ++a) {
    if (a == z) continue;
    for (Index b = 0; b < s.size(); ++b) {
      if (b != z && s.mul(a, b) == z) return Verdict::no({a, b});
    }
  }
  return Verdict::yes();
}

Verdict zero_absorbing(const Structure& s) {
  if (!s.zero()) return Verdict::no({});
  const Index z = *s.zero();
  for (Index x = 0; x < s.size(); ++x) {
    if (s.mul(z, x) != z || s.mul(x, z) != z) return Verdict::no({x});
  }
  return Verdict::yes();
}

ElementClasses classify_elements(const Structure& s) {
  ElementClasses c;
  const auto n = static_cast<Index>(s.size());
  for (Index x = 0; x < n; ++x) {
    if (s.mul(x, x) == x) c.idempotents.push_back(x);
    if (s.zero() && x != *s.zero()) {
      bool zd = false;
      for (Index y = 0; y < n; ++y) {
        if (y != *s.zero() && s.mul(x, y) == *s.zero()) {
          c.zero_divisor_pairs.emplace_back(x, y);
          zd = true;
        }
      }
      if (zd) c.zero_divisors.push_back(x);
    }
    if (s.one()) {
      bool one_sided = false;
      bool two_sided = false;
      for (Index y = 0; y < n; ++y) {
        const bool r = s.mul(x, y) == *s.one();
        const bool l = s.mul(y, x) == *s.one();
        one_sided = one_sided || r || l;
        two_sided = two_sided || (r && l);
      }
      if (one_sided) c.units.push_back(x);
      if (two_sided) c.invertibles.push_back(x);
    }
  }
  return c;
}

}  // namespace srcert

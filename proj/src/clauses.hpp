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

// Clause checks shared by certificate replay. A host supplies elements,
// regions (subsets) and the two operations; table hosts enumerate every
// member, symbolic hosts use deterministic samples.

#include <optional>
#include <string>
#include <vector>

#include "srcert/certificate.hpp"
#include "srcert/structure.hpp"
#include "srcert/symbolic.hpp"

namespace srcert::detail {

struct TableHost {
  using Elem = Index;
  using Region = ElementSet;
  const Structure& s;

  static constexpr bool exhaustive = true;
  std::vector<Index> members(const ElementSet& r) const { return r.elements(); }
  bool contains(const ElementSet& r, Index x) const { return r.contains(x); }
  Index add(Index a, Index b) const { return s.add(a, b); }
  Index mul(Index a, Index b) const { return s.mul(a, b); }
  std::optional<Index> zero() const { return s.zero(); }
  std::optional<Index> one() const { return s.one(); }
  std::string show(Index x) const { return s.label(x); }
  ElementSet whole() const { return ElementSet::full(s.size()); }
  bool ring_like() const { return s.has(Flag::ring); }
  std::optional<Index> neg_in(const ElementSet& r, Index a, Index z) const {
    for (Index b : r.elements()) {
      if (s.add(a, b) == z) return b;
    }
    return std::nullopt;
  }
  std::optional<Index> inv_in(const ElementSet& r, Index a, Index u) const {
    for (Index b : r.elements()) {
      if (s.mul(a, b) == u && s.mul(b, a) == u) return b;
    }
    return std::nullopt;
  }
};

struct SymHost {
  using Elem = Element;
  using Region = SymbolicSubset;
  const SymbolicSemiring& s;

  static constexpr bool exhaustive = false;
  std::vector<Element> members(const SymbolicSubset& r) const { return r.samples(s); }
  bool contains(const SymbolicSubset& r, const Element& x) const { return r.contains(s, x); }
  Element add(const Element& a, const Element& b) const { return s.add(a, b); }
  Element mul(const Element& a, const Element& b) const { return s.mul(a, b); }
  std::optional<Element> zero() const { return s.zero(); }
  std::optional<Element> one() const { return s.one(); }
  std::string show(const Element& x) const { return s.format(x); }
  SymbolicSubset whole() const { return srcert::whole(s); }
  bool ring_like() const { return s.group_like(); }
  std::optional<Element> neg_in(const SymbolicSubset& r, const Element& a, const Element& z) const {
    auto y = s.solve_add(a, z);
    if (y && r.contains(s, *y) && s.add(a, *y) == z) return y;
    // the solver returns one solution; finite coordinates may hold others
    for (const auto& c : r.samples(s)) {
      if (s.add(a, c) == z) return c;
    }
    return std::nullopt;
  }
  std::optional<Element> inv_in(const SymbolicSubset& r, const Element& a, const Element& u) const {
    auto y = s.solve_mul(a, u);
    if (y && r.contains(s, *y) && s.mul(a, *y) == u && s.mul(*y, a) == u) return y;
    for (const auto& c : r.samples(s)) {
      if (s.mul(a, c) == u && s.mul(c, a) == u) return c;
    }
    return std::nullopt;
  }
};

// Accumulates clauses into a transcript; every check returns its verdict.
template <class H>
class Replayer {
 public:
  using E = typename H::Elem;
  using R = typename H::Region;

  explicit Replayer(const H& h) : h_(h) {}

  std::vector<Clause>& transcript() { return out_; }
  bool all_pass() const {
    for (const auto& c : out_) {
      if (!c.pass) return false;
    }
    return true;
  }

  bool note(std::string text, bool pass, bool sampled = false) {
    out_.push_back({std::move(text), pass, sampled});
    return pass;
  }

  bool nonempty(const std::string& n, const R& r) {
    return note(n + " is nonempty", !h_.members(r).empty(), !H::exhaustive);
  }

  bool member(const std::string& n, const R& r, const std::string& en, const E& x) {
    return note(en + " = " + h_.show(x) + " lies in " + n, h_.contains(r, x));
  }

  bool subset(const std::string& a, const R& ra, const std::string& b, const R& rb) {
    for (const auto& x : h_.members(ra)) {
      if (!h_.contains(rb, x)) return note(a + " is contained in " + b + " (fails at " + h_.show(x) + ")", false);
    }
    return note(a + " is contained in " + b, true, !H::exhaustive);
  }

  // Some member of the container lies outside r.
  bool proper(const std::string& a, const R& ra, const std::string& b, const R& rb) {
    for (const auto& x : h_.members(rb)) {
      if (!h_.contains(ra, x)) return note(a + " differs from " + b + " (" + h_.show(x) + " is missing)", true);
    }
    return note(a + " differs from " + b, false, !H::exhaustive);
  }

  bool closed(const std::string& n, const R& r) {
    const auto m = h_.members(r);
    for (const auto& a : m) {
      for (const auto& b : m) {
        if (!h_.contains(r, h_.add(a, b))) {
          return note(n + " is closed under + (fails at " + h_.show(a) + " + " + h_.show(b) + ")", false);
        }
        if (!h_.contains(r, h_.mul(a, b))) {
          return note(n + " is closed under * (fails at " + h_.show(a) + " * " + h_.show(b) + ")", false);
        }
      }
    }
    return note(n + " is closed under + and *", true, !H::exhaustive);
  }

  bool zero(const std::string& n, const R& r, const std::string& zn, const E& z) {
    if (!member(n, r, zn, z)) return false;
    for (const auto& a : h_.members(r)) {
      if (!(h_.add(z, a) == a)) {
        return note(zn + " is an additive identity of " + n + " (fails at " + h_.show(a) + ")", false);
      }
    }
    return note(zn + " is an additive identity of " + n, true, !H::exhaustive);
  }

  bool one(const std::string& n, const R& r, const E& z, const std::string& un, const E& u) {
    if (!member(n, r, un, u)) return false;
    if (u == z) return note(un + " differs from the zero of " + n, false);
    for (const auto& a : h_.members(r)) {
      if (!(h_.mul(u, a) == a) || !(h_.mul(a, u) == a)) {
        return note(un + " is a multiplicative identity of " + n + " (fails at " + h_.show(a) + ")", false);
      }
    }
    return note(un + " is a multiplicative identity of " + n + " distinct from its zero", true, !H::exhaustive);
  }

  bool commutative(const std::string& n, const R& r) {
    const auto m = h_.members(r);
    for (const auto& a : m) {
      for (const auto& b : m) {
        if (!(h_.mul(a, b) == h_.mul(b, a))) {
          return note(n + " is commutative (fails at " + h_.show(a) + ", " + h_.show(b) + ")", false);
        }
      }
    }
    return note(n + " is commutative", true, !H::exhaustive);
  }

  bool noncommutative(const std::string& n, const R& r) {
    const auto m = h_.members(r);
    for (const auto& a : m) {
      for (const auto& b : m) {
        if (!(h_.mul(a, b) == h_.mul(b, a))) {
          return note(n + " is non-commutative: " + h_.show(a) + " * " + h_.show(b) + " != " + h_.show(b) + " * " +
                          h_.show(a),
                      true);
        }
      }
    }
    return note(n + " is non-commutative", false, !H::exhaustive);
  }

  bool strict(const std::string& n, const R& r, const E& z) {
    const auto m = h_.members(r);
    for (const auto& a : m) {
      for (const auto& b : m) {
        if (h_.add(a, b) == z && !(a == z && b == z)) {
          return note(n + " is strict (fails at " + h_.show(a) + " + " + h_.show(b) + ")", false);
        }
      }
    }
    return note(n + " is strict", true, !H::exhaustive);
  }

  bool zero_divisor_free(const std::string& n, const R& r, const E& z) {
    const auto m = h_.members(r);
    for (const auto& a : m) {
      for (const auto& b : m) {
        if (h_.mul(a, b) == z && !(a == z) && !(b == z)) {
          return note(n + " has no zero divisors (fails at " + h_.show(a) + " * " + h_.show(b) + ")", false);
        }
      }
    }
    return note(n + " has no zero divisors", true, !H::exhaustive);
  }

  bool additive_inverses(const std::string& n, const R& r, const E& z) {
    for (const auto& a : h_.members(r)) {
      if (!h_.neg_in(r, a, z)) return note(n + " has additive inverses (missing for " + h_.show(a) + ")", false);
    }
    return note(n + " has additive inverses", true, !H::exhaustive);
  }

  bool multiplicative_inverses(const std::string& n, const R& r, const E& z, const E& u) {
    for (const auto& a : h_.members(r)) {
      if (a == z) continue;
      if (!h_.inv_in(r, a, u)) {
        return note(n + " has multiplicative inverses (missing for " + h_.show(a) + ")", false);
      }
    }
    return note(n + " has multiplicative inverses off its zero", true, !H::exhaustive);
  }

  bool not_a_ring(const std::string& n, const R& r, const E& z) {
    for (const auto& a : h_.members(r)) {
      if (!h_.neg_in(r, a, z)) return note(n + " is not a ring: " + h_.show(a) + " has no additive inverse in it", true);
    }
    return note(n + " is not a ring", false, !H::exhaustive);
  }

  bool beyond_zero(const std::string& n, const R& r, const E& z) {
    for (const auto& a : h_.members(r)) {
      if (!(a == z)) return note(n + " holds an element other than " + h_.show(z), true);
    }
    return note(n + " holds an element other than " + h_.show(z), false, !H::exhaustive);
  }

  // For all x in r and c in by: c*x in into (left) or x*c in into (right).
  bool absorbs(const std::string& into_n, const R& into, const std::string& n, const R& r, const std::string& byn,
               const R& by, bool left, bool right) {
    const auto m = h_.members(r);
    const auto k = h_.members(by);
    for (const auto& x : m) {
      for (const auto& c : k) {
        if (left && !h_.contains(into, h_.mul(c, x))) {
          return note(byn + " * " + n + " lies in " + into_n + " (fails at " + h_.show(c) + " * " + h_.show(x) + ")",
                      false);
        }
        if (right && !h_.contains(into, h_.mul(x, c))) {
          return note(n + " * " + byn + " lies in " + into_n + " (fails at " + h_.show(x) + " * " + h_.show(c) + ")",
                      false);
        }
      }
    }
    std::string what = left && right ? byn + " * " + n + " and " + n + " * " + byn : (left ? byn + " * " + n : n + " * " + byn);
    return note(what + " lie in " + into_n, true, !H::exhaustive);
  }

  bool semifield(const std::string& n, const R& r, const std::string& zn, const E& z, const std::string& un,
                 const E& u) {
    bool ok = closed(n, r);
    ok = zero(n, r, zn, z) && ok;
    ok = one(n, r, z, un, u) && ok;
    ok = commutative(n, r) && ok;
    ok = strict(n, r, z) && ok;
    ok = zero_divisor_free(n, r, z) && ok;
    return ok;
  }

  bool field(const std::string& n, const R& r, const std::string& zn, const E& z, const std::string& un, const E& u) {
    bool ok = closed(n, r);
    ok = zero(n, r, zn, z) && ok;
    ok = one(n, r, z, un, u) && ok;
    ok = commutative(n, r) && ok;
    ok = additive_inverses(n, r, z) && ok;
    ok = multiplicative_inverses(n, r, z, u) && ok;
    return ok;
  }

  const H& host() const { return h_; }

 private:
  const H& h_;
  std::vector<Clause> out_;
};

}  // namespace srcert::detail

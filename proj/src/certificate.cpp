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

#include "srcert/certificate.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "clauses.hpp"
#include "srcert/error.hpp"
#include "srcert/substructures.hpp"

namespace srcert {

namespace {

struct PropertyInfo {
  Property p;
  std::string_view name;
  std::vector<std::string> inputs;
  std::vector<std::string> roles;
};

const std::vector<PropertyInfo>& infos() {
  static const std::vector<PropertyInfo> all = {
      {Property::semifield, "semifield", {}, {}},
      {Property::prime_semifield, "prime-semifield", {}, {}},
      {Property::s_semiring_1, "s-semiring-1", {}, {"A", "z", "u"}},
      {Property::s_semiring_2, "s-semiring-2", {}, {"A", "z", "u"}},
      {Property::s_subsemiring, "s-subsemiring", {"P"}, {"P", "zP", "A", "z", "u"}},
      {Property::s_ideal, "s-ideal", {"P"}, {"P", "zP", "A", "z", "u"}},
      {Property::s_pseudo_subsemiring, "s-pseudo-subsemiring", {"A"}, {"A", "P", "zP", "B", "z", "u"}},
      {Property::s_dual_ideal, "s-dual-ideal", {"P"}, {"P", "zP", "A", "z", "u"}},
      {Property::s_pseudo_ideal, "s-pseudo-ideal", {"P"}, {"P", "A", "z", "u"}},
      {Property::s_pseudo_dual_ideal, "s-pseudo-dual-ideal", {"P"}, {"P", "A", "zA", "B", "z", "u"}},
      {Property::s_semidivision_ring, "s-semidivision-ring", {}, {"A", "zA", "B", "z", "u", "P", "zP"}},
      {Property::s_zero_divisor, "s-zero-divisor", {}, {"a", "b", "x", "y"}},
      {Property::s_anti_zero_divisor, "s-anti-zero-divisor", {}, {"x", "y", "a", "b"}},
      {Property::s_idempotent, "s-idempotent", {}, {"a", "b"}},
      {Property::s_unit, "s-unit", {}, {"x", "y", "a", "b"}},
      {Property::s_semifield_1, "s-semifield-1", {}, {"A"}},
      {Property::s_weak_semifield, "s-weak-semifield", {}, {"P", "zP", "uP", "T"}},
      {Property::s_semifield_2, "s-semifield-2", {}, {"A", "z", "u"}},
      {Property::s_anti_semiring, "s-anti-semiring", {}, {"A", "z"}},
      {Property::s_anti_semifield, "s-anti-semifield", {}, {"A", "z", "u"}},
      {Property::s_anti_ideal, "s-anti-ideal", {"P", "T"}, {"P", "zP", "T", "z", "u"}},
  };
  return all;
}

const PropertyInfo& info(Property p) {
  for (const auto& i : infos()) {
    if (i.p == p) return i;
  }
  throw Error(ErrorCode::invalid_argument, "unknown property");
}

}  // namespace

std::string_view to_string(Property p) noexcept {
  for (const auto& i : infos()) {
    if (i.p == p) return i.name;
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  for (const auto& i : infos()) {
    if (i.name == name) return i.p;
  }
  return std::nullopt;
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> all = [] {
    std::vector<Property> v;
    for (const auto& i : infos()) v.push_back(i.p);
    return v;
  }();
  return all;
}

const std::vector<std::string>& input_roles(Property p) { return info(p).inputs; }
const std::vector<std::string>& witness_roles(Property p) { return info(p).roles; }

bool is_element_property(Property p) {
  return p == Property::s_zero_divisor || p == Property::s_anti_zero_divisor || p == Property::s_idempotent ||
         p == Property::s_unit;
}

Subject Subject::table(std::shared_ptr<const Structure> s, std::string name) {
  Subject out;
  out.ring_ = std::make_shared<TupleSemiring>(std::vector<Component>{Component::table(s, name)});
  out.table_ = std::move(s);
  out.name_ = std::move(name);
  return out;
}

Subject Subject::symbolic(std::shared_ptr<const SymbolicSemiring> s, std::string name) {
  Subject out;
  out.ring_ = std::move(s);
  out.name_ = std::move(name);
  return out;
}

std::string Subject::describe() const {
  if (is_table()) return name_ + " (" + std::to_string(table_->size()) + " elements)";
  return name_.empty() ? ring_->describe() : name_;
}

Index Subject::index(const Element& x) const {
  if (x.size() != 1 || x[0].get_den() != 1 || sgn(x[0]) < 0 || x[0] >= mpq_class(table_->size())) {
    throw Error(ErrorCode::type_mismatch, "not an element of " + name_);
  }
  return static_cast<Index>(x[0].get_num().get_ui());
}

std::string Subject::format(const Element& x) const {
  if (is_table()) return table_->label(index(x));
  return ring_->format(x);
}

const Part* find_part(const Parts& parts, std::string_view role) {
  for (const auto& [r, p] : parts) {
    if (r == role) return &p;
  }
  return nullptr;
}

void set_part(Parts& parts, std::string role, Part p) {
  for (auto& [r, q] : parts) {
    if (r == role) {
      q = std::move(p);
      return;
    }
  }
  parts.emplace_back(std::move(role), std::move(p));
}

namespace {

using detail::Replayer;
using detail::SymHost;
using detail::TableHost;

// Pulls typed parts out of a certificate for one host kind.
struct TableGet {
  const Subject& subj;
  const Parts& parts;
  std::optional<ElementSet> region(const std::string& role) const {
    const Part* p = find_part(parts, role);
    if (!p) return std::nullopt;
    if (const auto* e = std::get_if<ElementSet>(p); e && e->universe() == subj.structure().size()) return *e;
    return std::nullopt;
  }
  std::optional<Index> elem(const std::string& role) const {
    const Part* p = find_part(parts, role);
    if (!p) return std::nullopt;
    const auto* e = std::get_if<Element>(p);
    if (!e) return std::nullopt;
    try {
      return subj.index(*e);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
};

struct SymGet {
  const Subject& subj;
  const Parts& parts;
  std::optional<SymbolicSubset> region(const std::string& role) const {
    const Part* p = find_part(parts, role);
    if (!p) return std::nullopt;
    if (const auto* e = std::get_if<SymbolicSubset>(p); e && e->coords.size() == subj.ring().dim()) return *e;
    return std::nullopt;
  }
  std::optional<Element> elem(const std::string& role) const {
    const Part* p = find_part(parts, role);
    if (!p) return std::nullopt;
    const auto* e = std::get_if<Element>(p);
    if (!e || !subj.ring().contains(*e)) return std::nullopt;
    return *e;
  }
};

std::string side_of(const Parts& parts) {
  if (const Part* p = find_part(parts, "side")) {
    if (const auto* s = std::get_if<std::string>(p)) return *s;
  }
  return "two_sided";
}

template <class H, class G>
void run_replay(Replayer<H>& r, const H& h, const G& g, Property p, const Parts& parts) {
  using E = typename H::Elem;
  using R = typename H::Region;
  bool missing = false;
  auto reg = [&](const std::string& role) -> R {
    auto x = g.region(role);
    if (!x) {
      r.note("witness supplies the subset " + role, false);
      missing = true;
      return h.whole();
    }
    return *x;
  };
  auto el = [&](const std::string& role) -> E {
    auto x = g.elem(role);
    if (!x) {
      r.note("witness supplies the element " + role, false);
      missing = true;
      if constexpr (std::is_same_v<E, Index>) {
        return Index{0};
      } else {
        return h.s.zero();
      }
    }
    return *x;
  };
  const R S = h.whole();
  auto global_zero = [&]() -> std::optional<E> {
    auto z = h.zero();
    if (!z) r.note("the subject has an additive identity 0", false);
    return z;
  };
  auto global_one = [&]() -> std::optional<E> {
    auto u = h.one();
    if (!u) r.note("the subject has a multiplicative identity 1", false);
    return u;
  };
  auto subject_semifield = [&]() {
    auto z = global_zero();
    auto u = global_one();
    if (!z || !u) return;
    r.semifield("S", S, "0", *z, "1", *u);
  };
  auto subject_ring = [&]() { r.note("the subject is a ring", h.ring_like(), !H::exhaustive); };
  auto side_flags = [&](bool& left, bool& right) {
    const std::string side = side_of(parts);
    left = side != "right";
    right = side != "left";
    if (side != "left" && side != "right" && side != "two_sided") r.note("side is left, right or two_sided", false);
  };

  switch (p) {
    case Property::semifield:
    case Property::prime_semifield:
      subject_semifield();
      break;
    case Property::s_semiring_1:
    case Property::s_semiring_2:
    case Property::s_semifield_2:
    case Property::s_anti_semifield: {
      if (p == Property::s_anti_semifield) subject_ring();
      const R A = reg("A");
      const E z = el("z");
      const E u = el("u");
      if (missing) return;
      r.proper("A", A, "S", S);
      if (p == Property::s_semiring_1 || p == Property::s_anti_semifield) {
        r.semifield("A", A, "z", z, "u", u);
      } else {
        r.field("A", A, "z", z, "u", u);
      }
      break;
    }
    case Property::s_subsemiring:
    case Property::s_ideal:
    case Property::s_dual_ideal: {
      const R P = reg("P");
      const E zP = el("zP");
      const R A = reg("A");
      const E z = el("z");
      const E u = el("u");
      if (missing) return;
      r.nonempty("P", P);
      r.proper("P", P, "S", S);
      r.closed("P", P);
      r.zero("P", P, "zP", zP);
      r.subset("A", A, "P", P);
      r.proper("A", A, "P", P);
      r.semifield("A", A, "z", z, "u", u);
      if (p == Property::s_ideal) {
        bool left = true, right = true;
        side_flags(left, right);
        // right: a*p in A, left: p*a in A
        r.absorbs("A", A, "A", A, "P", P, left, right);
      } else if (p == Property::s_dual_ideal) {
        bool ok = true;
        for (const auto& a : h.members(A)) {
          if (a == z) continue;
          for (const auto& q : h.members(P)) {
            if (!h.contains(A, h.add(a, q))) {
              r.note("a + p lies in A for a in A\\{z}, p in P (fails at " + h.show(a) + " + " + h.show(q) + ")",
                     false);
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (ok) r.note("a + p lies in A for a in A\\{z}, p in P", true, !H::exhaustive);
      }
      break;
    }
    case Property::s_pseudo_subsemiring: {
      const R A = reg("A");
      const R P = reg("P");
      const E zP = el("zP");
      const R B = reg("B");
      const E z = el("z");
      const E u = el("u");
      if (missing) return;
      r.nonempty("A", A);
      r.subset("A", A, "P", P);
      r.proper("A", A, "P", P);
      r.proper("P", P, "S", S);
      r.closed("P", P);
      r.zero("P", P, "zP", zP);
      r.subset("B", B, "P", P);
      r.semifield("B", B, "z", z, "u", u);
      break;
    }
    case Property::s_pseudo_ideal: {
      const R P = reg("P");
      const R A = reg("A");
      const E z = el("z");
      const E u = el("u");
      if (missing) return;
      bool left = true, right = true;
      side_flags(left, right);
      r.nonempty("P", P);
      r.subset("P", P, "A", A);
      r.proper("P", P, "A", A);
      r.proper("A", A, "S", S);
      r.semifield("A", A, "z", z, "u", u);
      r.absorbs("P", P, "P", P, "A", A, left, right);
      break;
    }
    case Property::s_pseudo_dual_ideal: {
      const R P = reg("P");
      const R A = reg("A");
      const E zA = el("zA");
      const R B = reg("B");
      const E z = el("z");
      const E u = el("u");
      if (missing) return;
      r.nonempty("P", P);
      r.subset("P", P, "A", A);
      r.proper("P", P, "A", A);
      r.closed("A", A);
      r.zero("A", A, "zA", zA);
      r.subset("B", B, "A", A);
      r.semifield("B", B, "z", z, "u", u);
      bool ok = true;
      for (const auto& q : h.members(P)) {
        for (const auto& a : h.members(A)) {
          if (!h.contains(P, h.add(q, a))) {
            r.note("p + a lies in P for p in P, a in A (fails at " + h.show(q) + " + " + h.show(a) + ")", false);
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) r.note("p + a lies in P for p in P, a in A", true, !H::exhaustive);
      break;
    }
    case Property::s_semidivision_ring: {
      const R A = reg("A");
      const E zA = el("zA");
      const R B = reg("B");
      const E z = el("z");
      const E u = el("u");
      const R P = reg("P");
      const E zP = el("zP");
      if (missing) return;
      r.proper("A", A, "S", S);
      r.closed("A", A);
      r.zero("A", A, "zA", zA);
      r.noncommutative("A", A);
      r.subset("B", B, "A", A);
      r.proper("B", B, "A", A);
      r.semifield("B", B, "z", z, "u", u);
      r.subset("P", P, "A", A);
      r.closed("P", P);
      r.zero("P", P, "zP", zP);
      r.noncommutative("P", P);
      r.zero_divisor_free("P", P, zP);
      break;
    }
    case Property::s_zero_divisor: {
      const E a = el("a"), b = el("b"), x = el("x"), y = el("y");
      if (missing) return;
      auto z0 = global_zero();
      if (!z0) return;
      const E z = *z0;
      r.note("a, b != 0", !(a == z) && !(b == z));
      r.note("a * b = 0", h.mul(a, b) == z);
      r.note("x, y lie outside {a, b, 0}", !(x == a) && !(x == b) && !(x == z) && !(y == a) && !(y == b) && !(y == z));
      r.note("x != y", !(x == y));
      r.note("a * x = 0 or x * a = 0", h.mul(a, x) == z || h.mul(x, a) == z);
      r.note("b * y = 0 or y * b = 0", h.mul(b, y) == z || h.mul(y, b) == z);
      r.note("x * y != 0 or y * x != 0", !(h.mul(x, y) == z) || !(h.mul(y, x) == z));
      break;
    }
    case Property::s_anti_zero_divisor: {
      const E x = el("x"), y = el("y"), a = el("a"), b = el("b");
      if (missing) return;
      auto z0 = global_zero();
      if (!z0) return;
      const E z = *z0;
      r.note("x * y != 0", !(h.mul(x, y) == z));
      r.note("a, b lie outside {0, x, y}", !(a == z) && !(a == x) && !(a == y) && !(b == z) && !(b == x) && !(b == y));
      r.note("a * x != 0 or x * a != 0", !(h.mul(a, x) == z) || !(h.mul(x, a) == z));
      r.note("b * y != 0 or y * b != 0", !(h.mul(b, y) == z) || !(h.mul(y, b) == z));
      r.note("a * b = 0 or b * a = 0", h.mul(a, b) == z || h.mul(b, a) == z);
      break;
    }
    case Property::s_idempotent: {
      const E a = el("a"), b = el("b");
      if (missing) return;
      auto z0 = global_zero();
      if (!z0) return;
      r.note("a != 0", !(a == *z0));
      r.note("a * a = a", h.mul(a, a) == a);
      r.note("b != a", !(b == a));
      r.note("b * b = a", h.mul(b, b) == a);
      const bool first = h.mul(a, b) == b || h.mul(b, a) == b;
      const bool second = h.mul(b, a) == a || h.mul(a, b) == a;
      r.note("exactly one of (ab = b or ba = b) and (ba = a or ab = a)", first != second);
      break;
    }
    case Property::s_unit: {
      const E x = el("x"), y = el("y"), a = el("a"), b = el("b");
      if (missing) return;
      auto u0 = global_one();
      if (!u0) return;
      const E one = *u0;
      r.note("x != 1", !(x == one));
      r.note("x * y = 1", h.mul(x, y) == one);
      r.note("a, b lie outside {x, y, 1}", !(a == x) && !(a == y) && !(a == one) && !(b == x) && !(b == y) && !(b == one));
      const bool i = h.mul(x, a) == y || h.mul(a, x) == y;
      const bool ii = h.mul(y, b) == x || h.mul(b, y) == x;
      r.note("xa = y or ax = y, or yb = x or by = x", i || ii);
      r.note("a * b = 1", h.mul(a, b) == one);
      break;
    }
    case Property::s_semifield_1: {
      subject_semifield();
      const R A = reg("A");
      if (missing) return;
      r.nonempty("A", A);
      r.proper("A", A, "S", S);
      r.closed("A", A);
      if (auto z = h.zero()) r.beyond_zero("A", A, *z);
      r.absorbs("A", A, "A", A, "S", S, true, true);
      r.note("k-semi algebra read as: proper, closed, absorbing s*a for every s in S, not {0}", true);
      break;
    }
    case Property::s_weak_semifield: {
      const R P = reg("P");
      const E zP = el("zP");
      const E uP = el("uP");
      const R T = reg("T");
      if (missing) return;
      r.proper("P", P, "S", S);
      r.semifield("P", P, "zP", zP, "uP", uP);
      r.nonempty("T", T);
      r.subset("T", T, "P", P);
      r.proper("T", T, "P", P);
      r.closed("T", T);
      r.beyond_zero("T", T, zP);
      r.absorbs("T", T, "T", T, "P", P, true, true);
      break;
    }
    case Property::s_anti_semiring: {
      subject_ring();
      const R A = reg("A");
      const E z = el("z");
      if (missing) return;
      r.nonempty("A", A);
      r.closed("A", A);
      r.zero("A", A, "z", z);
      r.not_a_ring("A", A, z);
      break;
    }
    case Property::s_anti_ideal: {
      subject_ring();
      const R P = reg("P");
      const E zP = el("zP");
      const R T = reg("T");
      const E z = el("z");
      const E u = el("u");
      if (missing) return;
      r.proper("T", T, "S", S);
      r.semifield("T", T, "z", z, "u", u);
      r.nonempty("P", P);
      r.subset("P", P, "T", T);
      r.closed("P", P);
      r.zero("P", P, "zP", zP);
      r.absorbs("P", P, "P", P, "T", T, false, true);
      break;
    }
  }
}

// ---- exhaustive scans for negative table certificates ----
// Written directly from the definitions; they share no code with the searches.

std::optional<Index> identity_in(const Structure& s, const std::vector<Index>& m, bool additive) {
  for (Index e : m) {
    bool ok = true;
    for (Index a : m) {
      const Index l = additive ? s.add(e, a) : s.mul(e, a);
      const Index rr = additive ? s.add(a, e) : s.mul(a, e);
      if (l != a || rr != a) {
        ok = false;
        break;
      }
    }
    if (ok) return e;
  }
  return std::nullopt;
}

bool closed_set(const Structure& s, const ElementSet& c) {
  const auto m = c.elements();
  for (Index a : m) {
    for (Index b : m) {
      if (!c.contains(s.add(a, b)) || !c.contains(s.mul(a, b))) return false;
    }
  }
  return true;
}

struct SF {
  Index z;
  Index u;
};

// Semifield test on a closed set; returns its zero and one.
std::optional<SF> semifield_of(const Structure& s, const ElementSet& c, bool field) {
  const auto m = c.elements();
  auto z = identity_in(s, m, true);
  if (!z) return std::nullopt;
  auto u = identity_in(s, m, false);
  if (!u || *u == *z) return std::nullopt;
  for (Index a : m) {
    bool neg = false, inv = (a == *z);
    for (Index b : m) {
      if (s.mul(a, b) != s.mul(b, a)) return std::nullopt;
      if (!field && s.add(a, b) == *z && (a != *z || b != *z)) return std::nullopt;
      if (!field && s.mul(a, b) == *z && a != *z && b != *z) return std::nullopt;
      if (s.add(a, b) == *z) neg = true;
      if (s.mul(a, b) == *u) inv = true;
    }
    if (field && (!neg || !inv)) return std::nullopt;
  }
  return SF{*z, *u};
}

struct Scan {
  const Structure& s;
  std::size_t cap;
  bool complete = true;

  std::vector<ElementSet> closed(const ElementSet& base, const ElementSet& within) {
    auto c = closed_subsets_between(s, base, within, cap, Exec::serial);
    complete = complete && c.complete;
    return c.sets;
  }
  std::vector<ElementSet> all_closed() { return closed(ElementSet(s.size()), ElementSet::full(s.size())); }
};

bool absorbs_mul(const Structure& s, const ElementSet& into, const ElementSet& r, const ElementSet& by, bool left,
                 bool right) {
  for (Index x : r.elements()) {
    for (Index c : by.elements()) {
      if (left && !into.contains(s.mul(c, x))) return false;
      if (right && !into.contains(s.mul(x, c))) return false;
    }
  }
  return true;
}

bool any_semifield_in(Scan& sc, const ElementSet& within, bool proper_in_within) {
  for (const auto& c : sc.closed(ElementSet(sc.s.size()), within)) {
    if (proper_in_within && c == within) continue;
    if (semifield_of(sc.s, c, false)) return true;
  }
  return false;
}

// True when some witness exists.
bool exists_witness(const Structure& s, Property p, const Parts& parts, std::size_t cap, bool& complete) {
  Scan sc{s, cap};
  const std::size_t n = s.size();
  const ElementSet full = ElementSet::full(n);
  const ElementSet none(n);
  auto input = [&](const char* role) -> std::optional<ElementSet> {
    const Part* q = find_part(parts, role);
    if (!q) return std::nullopt;
    if (const auto* e = std::get_if<ElementSet>(q)) return *e;
    return std::nullopt;
  };
  const std::string side = side_of(parts);
  const bool left = side != "right", right = side != "left";
  bool found = false;
  auto zero_of = [&](const ElementSet& c) { return identity_in(s, c.elements(), true); };
  switch (p) {
    case Property::semifield:
      found = static_cast<bool>(semifield_of(s, full, false));
      break;
    case Property::prime_semifield:
      // a proper subsemifield is the witness against primality
      found = any_semifield_in(sc, full, true);
      break;
    case Property::s_semiring_1:
    case Property::s_semiring_2:
    case Property::s_semifield_2:
    case Property::s_anti_semifield:
      if (p == Property::s_anti_semifield && !s.has(Flag::ring)) break;
      for (const auto& c : sc.all_closed()) {
        if (c.count() < n &&
            semifield_of(s, c, p == Property::s_semiring_2 || p == Property::s_semifield_2)) {
          found = true;
          break;
        }
      }
      break;
    case Property::s_subsemiring:
    case Property::s_ideal:
    case Property::s_dual_ideal: {
      auto P = input("P");
      if (!P || P->empty() || P->count() == n || !closed_set(s, *P) || !zero_of(*P)) break;
      for (const auto& c : sc.closed(none, *P)) {
        if (c == *P) continue;
        auto f = semifield_of(s, c, false);
        if (!f) continue;
        if (p == Property::s_ideal && !absorbs_mul(s, c, c, *P, left, right)) continue;
        if (p == Property::s_dual_ideal) {
          bool ok = true;
          for (Index a : c.elements()) {
            for (Index q : P->elements()) {
              if (a != f->z && !c.contains(s.add(a, q))) ok = false;
            }
          }
          if (!ok) continue;
        }
        found = true;
        break;
      }
      break;
    }
    case Property::s_pseudo_subsemiring: {
      auto A = input("A");
      if (!A || A->empty()) break;
      for (const auto& P : sc.closed(*A, full)) {
        if (P == *A || P.count() == n || !zero_of(P)) continue;
        if (any_semifield_in(sc, P, false)) {
          found = true;
          break;
        }
      }
      break;
    }
    case Property::s_pseudo_ideal: {
      auto P = input("P");
      if (!P || P->empty()) break;
      for (const auto& A : sc.closed(*P, full)) {
        if (A == *P || A.count() == n || !semifield_of(s, A, false)) continue;
        if (absorbs_mul(s, *P, *P, A, left, right)) {
          found = true;
          break;
        }
      }
      break;
    }
    case Property::s_pseudo_dual_ideal: {
      auto P = input("P");
      if (!P || P->empty()) break;
      for (const auto& A : sc.closed(*P, full)) {
        if (A == *P || !zero_of(A)) continue;
        bool ok = true;
        for (Index q : P->elements()) {
          for (Index a : A.elements()) {
            if (!P->contains(s.add(q, a))) ok = false;
          }
        }
        if (ok && any_semifield_in(sc, A, false)) {
          found = true;
          break;
        }
      }
      break;
    }
    case Property::s_semidivision_ring: {
      const auto all = sc.all_closed();
      auto noncomm = [&](const ElementSet& c) {
        for (Index a : c.elements()) {
          for (Index b : c.elements()) {
            if (s.mul(a, b) != s.mul(b, a)) return true;
          }
        }
        return false;
      };
      std::vector<ElementSet> divs;
      for (const auto& c : all) {
        auto z = zero_of(c);
        if (!z || !noncomm(c)) continue;
        bool zdf = true;
        for (Index a : c.elements()) {
          for (Index b : c.elements()) {
            if (s.mul(a, b) == *z && a != *z && b != *z) zdf = false;
          }
        }
        if (zdf) divs.push_back(c);
      }
      for (const auto& A : all) {
        if (found) break;
        if (A.count() == n || !zero_of(A) || !noncomm(A)) continue;
        if (!any_semifield_in(sc, A, true)) continue;
        for (const auto& P : divs) {
          if (P.subset_of(A)) {
            found = true;
            break;
          }
        }
      }
      break;
    }
    case Property::s_zero_divisor:
    case Property::s_anti_zero_divisor:
    case Property::s_idempotent:
    case Property::s_unit: {
      const auto z = s.zero();
      const auto one = s.one();
      if (p == Property::s_unit ? !one : !z) break;
      const auto N = static_cast<Index>(n);
      auto m = [&](Index a, Index b) { return s.mul(a, b); };
      for (Index a = 0; a < N && !found; ++a) {
        for (Index b = 0; b < N && !found; ++b) {
          if (p == Property::s_idempotent) {
            const bool first = m(a, b) == b || m(b, a) == b;
            const bool second = m(b, a) == a || m(a, b) == a;
            found = a != *z && m(a, a) == a && b != a && m(b, b) == a && first != second;
            continue;
          }
          for (Index c = 0; c < N && !found; ++c) {
            for (Index d = 0; d < N && !found; ++d) {
              if (p == Property::s_zero_divisor) {
                // (a, b, x, y) = (a, b, c, d)
                found = a != *z && b != *z && m(a, b) == *z && c != a && c != b && c != *z && d != a && d != b && d != *z && c != d &&
                        (m(a, c) == *z || m(c, a) == *z) && (m(b, d) == *z || m(d, b) == *z) &&
                        (m(c, d) != *z || m(d, c) != *z);
              } else if (p == Property::s_anti_zero_divisor) {
                // (x, y, a, b) = (a, b, c, d)
                found = m(a, b) != *z && c != *z && c != a && c != b && d != *z && d != a && d != b &&
                        (m(c, a) != *z || m(a, c) != *z) && (m(d, b) != *z || m(b, d) != *z) &&
                        (m(c, d) == *z || m(d, c) == *z);
              } else {
                // (x, y, a, b) = (a, b, c, d)
                found = a != *one && m(a, b) == *one && c != a && c != b && c != *one && d != a && d != b &&
                        d != *one && ((m(a, c) == b || m(c, a) == b) || (m(b, d) == a || m(d, b) == a)) &&
                        m(c, d) == *one;
              }
            }
          }
        }
      }
      break;
    }
    case Property::s_semifield_1: {
      if (!semifield_of(s, full, false)) break;
      for (const auto& c : sc.all_closed()) {
        if (c.count() == n) continue;
        if (s.zero() && c.count() == 1 && c.contains(*s.zero())) continue;
        if (absorbs_mul(s, c, c, full, true, true)) {
          found = true;
          break;
        }
      }
      break;
    }
    case Property::s_weak_semifield: {
      const auto all = sc.all_closed();
      for (const auto& P : all) {
        if (found) break;
        if (P.count() == n) continue;
        auto f = semifield_of(s, P, false);
        if (!f) continue;
        for (const auto& T : all) {
          if (T == P || !T.subset_of(P)) continue;
          if (T.count() == 1 && T.contains(f->z)) continue;
          if (absorbs_mul(s, T, T, P, true, true)) {
            found = true;
            break;
          }
        }
      }
      break;
    }
    case Property::s_anti_semiring:
      if (!s.has(Flag::ring)) break;
      for (const auto& c : sc.all_closed()) {
        auto z = zero_of(c);
        if (!z) continue;
        for (Index a : c.elements()) {
          bool neg = false;
          for (Index b : c.elements()) neg = neg || s.add(a, b) == *z;
          if (!neg) found = true;
        }
        if (found) break;
      }
      break;
    case Property::s_anti_ideal: {
      if (!s.has(Flag::ring)) break;
      auto P = input("P");
      auto T = input("T");
      if (!P || !T || P->empty() || T->count() == n || !semifield_of(s, *T, false)) break;
      found = P->subset_of(*T) && closed_set(s, *P) && zero_of(*P) && absorbs_mul(s, *P, *P, *T, false, true);
      break;
    }
  }
  complete = sc.complete;
  return found;
}

// Premises of the rule-based negative answers on number archetypes.
std::vector<Clause> replay_rule(const Subject& subj, Property p) {
  std::vector<Clause> out;
  const SymbolicSemiring& r = subj.ring();
  const auto& cs = r.coords();
  const bool tuple = dynamic_cast<const TupleSemiring*>(&r) != nullptr;
  auto single_tag = [&](std::initializer_list<NumberTag> tags) {
    if (!tuple || cs.size() != 1 || !cs[0].is_tag()) return false;
    return std::find(tags.begin(), tags.end(), cs[0].number_tag()) != tags.end();
  };
  auto add = [&](std::string t, bool pass, bool sampled = false) { out.push_back({std::move(t), pass, sampled}); };
  const Component z0 = Component::tag(NumberTag::Z0);
  switch (p) {
    case Property::s_semiring_1: {
      add("the subject is the archetype Z0", single_tag({NumberTag::Z0}));
      // a semifield in Z0 holds 0 and 1 (the only idempotents), hence every n = 1 + ... + 1
      bool ok = true;
      for (const auto& q : z0.samples()) {
        mpq_class acc = 0;
        for (mpq_class k = 0; k < q; ++k) acc += 1;
        ok = ok && acc == q;
      }
      add("every sampled n in Z0 is a sum of copies of 1, so any semifield in Z0 is all of Z0", ok, true);
      break;
    }
    case Property::s_semifield_1: {
      add("the subject is the archetype Q0 or R0", single_tag({NumberTag::Q0, NumberTag::R0}));
      bool ok = true;
      const auto pts = Component::tag(NumberTag::Q0).samples();
      for (const auto& a : pts) {
        if (sgn(a) == 0) continue;
        for (const auto& t : pts) ok = ok && tag_contains(NumberTag::Q0, t / a) && (t / a) * a == t;
      }
      add("each sampled target t equals (t/a)*a for every sampled a != 0, so an absorbing set with a != 0 is "
          "everything",
          ok, true);
      break;
    }
    case Property::s_semiring_2:
    case Property::s_semifield_2: {
      bool premise = tuple;
      for (const auto& c : cs) {
        if (c.is_tag()) {
          premise = premise && !(c.number_tag() == NumberTag::Q || c.number_tag() == NumberTag::R);
        } else {
          bool comp = true;
          auto found = exists_witness(c.structure(), Property::s_semiring_2, {}, 1u << 16, comp);
          // a whole-table field also counts once other coordinates exist
          auto whole_field = semifield_of(c.structure(), ElementSet::full(c.structure().size()), true);
          premise = premise && comp && !found && !(whole_field && cs.size() > 1);
        }
      }
      if (single_tag({NumberTag::Q})) premise = true;
      add("no coordinate holds a field: tags Z0, Q0, R0 lack additive inverses, Z lacks 1/2, table coordinates "
          "scanned exhaustively; a single Q has no proper field",
          premise);
      break;
    }
    case Property::s_idempotent: {
      bool premise = tuple;
      for (const auto& c : cs) {
        premise = premise && c.is_tag() &&
                  (c.number_tag() == NumberTag::Z0 || c.number_tag() == NumberTag::Q0 ||
                   c.number_tag() == NumberTag::R0);
      }
      add("every coordinate is a nonnegative archetype", premise);
      bool ok = true;
      for (const auto& b : Component::tag(NumberTag::Q0).samples()) {
        const mpq_class sq = b * b;
        if (sq == 0 || sq == 1) ok = ok && (b == sq);
      }
      add("b_i^2 in {0, 1} forces b_i = b_i^2 for sampled nonnegative b_i, so b^2 = a idempotent gives b = a", ok,
          true);
      break;
    }
    default:
      add("a recorded rule covers this negative answer", false);
  }
  return out;
}

}  // namespace

Verification replay(const Subject& s, Property p, const Parts& parts) {
  Verification v;
  if (s.is_table()) {
    TableHost h{s.structure()};
    Replayer<TableHost> r(h);
    run_replay(r, h, TableGet{s, parts}, p, parts);
    v.ok = r.all_pass();
    v.transcript = std::move(r.transcript());
  } else {
    SymHost h{s.ring()};
    Replayer<SymHost> r(h);
    run_replay(r, h, SymGet{s, parts}, p, parts);
    v.ok = r.all_pass();
    v.transcript = std::move(r.transcript());
  }
  return v;
}

Verification verify(const Subject& s, const Certificate& c, std::size_t cap) {
  const Property p = c.property;
  if (c.holds) {
    Verification v = replay(s, p, c.parts);
    if (p == Property::prime_semifield) {
      if (!s.is_table()) {
        v.transcript.push_back({"no proper subsemifield (needs a finite subject)", false});
        v.ok = false;
      } else {
        bool complete = true;
        const bool found = exists_witness(s.structure(), p, {}, cap, complete);
        v.transcript.push_back({"no proper subset is a semifield (exhaustive scan)", !found && complete});
        v.ok = v.ok && !found && complete;
      }
    }
    return v;
  }
  Verification v;
  if (!c.complete_search) {
    v.transcript.push_back({"an incomplete search cannot support a negative answer", false});
    return v;
  }
  if (p == Property::semifield || (p == Property::prime_semifield && !find_part(c.parts, "B"))) {
    // negative subject-level answer: some defining clause must fail
    Verification r = replay(s, Property::semifield, {});
    v.transcript = std::move(r.transcript);
    v.ok = !r.ok;
    return v;
  }
  if (p == Property::prime_semifield) {
    // a proper subsemifield refutes primality
    Parts q;
    set_part(q, "A", *find_part(c.parts, "B"));
    if (const Part* z = find_part(c.parts, "z")) set_part(q, "z", *z);
    if (const Part* u = find_part(c.parts, "u")) set_part(q, "u", *u);
    Verification r = replay(s, Property::s_semiring_1, q);
    v.transcript = std::move(r.transcript);
    v.ok = r.ok;
    return v;
  }
  if (s.is_table()) {
    bool complete = true;
    const bool found = exists_witness(s.structure(), p, c.parts, cap, complete);
    v.transcript.push_back({"exhaustive scan finds no witness", !found && complete});
    v.ok = !found && complete;
    return v;
  }
  v.transcript = replay_rule(s, p);
  v.ok = !v.transcript.empty() && std::all_of(v.transcript.begin(), v.transcript.end(),
                                               [](const Clause& k) { return k.pass; });
  return v;
}

}  // namespace srcert

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

// Test-side model of the certificate clauses, written from the definitions
// and sharing no code with the certifier. Witnesses are read from their JSON
// form. Table subjects are checked exhaustively; symbolic subjects on a fixed
// window of coordinate values, so a symbolic "accept" means no violation was
// found in the window.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "srcert/certificate.hpp"
#include "srcert/claims.hpp"
#include "srcert/report.hpp"
#include "srcert/constructions.hpp"
#include "srcert/spec.hpp"
#include "srcert/symbolic.hpp"

namespace oracle {

using srcert::Index;
using srcert::Json;
using srcert::Property;

// ---- shared clause logic over an abstract model ----

template <class M>
struct Clauses {
  using E = typename M::E;
  using R = typename M::R;
  const M& m;

  bool closed(const R& r) const {
    const auto xs = m.members(r);
    for (const auto& a : xs)
      for (const auto& b : xs)
        if (!m.in(r, m.add(a, b)) || !m.in(r, m.mul(a, b))) return false;
    return true;
  }
  bool subset(const R& a, const R& b) const {
    for (const auto& x : m.members(a))
      if (!m.in(b, x)) return false;
    return true;
  }
  // some member of `outer` is missing from `inner`
  bool proper(const R& inner, const R& outer) const {
    for (const auto& x : m.members(outer))
      if (!m.in(inner, x)) return true;
    return false;
  }
  bool nonempty(const R& r) const { return !m.members(r).empty(); }
  bool zero_of(const R& r, const E& z) const {
    if (!m.in(r, z)) return false;
    for (const auto& a : m.members(r))
      if (!(m.add(z, a) == a)) return false;
    return true;
  }
  bool one_of(const R& r, const E& z, const E& u) const {
    if (!m.in(r, u) || u == z) return false;
    for (const auto& a : m.members(r))
      if (!(m.mul(u, a) == a) || !(m.mul(a, u) == a)) return false;
    return true;
  }
  bool commutative(const R& r) const {
    const auto xs = m.members(r);
    for (const auto& a : xs)
      for (const auto& b : xs)
        if (!(m.mul(a, b) == m.mul(b, a))) return false;
    return true;
  }
  bool strict(const R& r, const E& z) const {
    const auto xs = m.members(r);
    for (const auto& a : xs)
      for (const auto& b : xs)
        if (m.add(a, b) == z && !(a == z && b == z)) return false;
    return true;
  }
  bool no_zero_divisors(const R& r, const E& z) const {
    const auto xs = m.members(r);
    for (const auto& a : xs)
      for (const auto& b : xs)
        if (m.mul(a, b) == z && !(a == z) && !(b == z)) return false;
    return true;
  }
  bool semifield(const R& r, const E& z, const E& u) const {
    return closed(r) && zero_of(r, z) && one_of(r, z, u) && commutative(r) && strict(r, z) && no_zero_divisors(r, z);
  }
  bool field(const R& r, const E& z, const E& u) const {
    if (!closed(r) || !zero_of(r, z) || !one_of(r, z, u) || !commutative(r)) return false;
    for (const auto& a : m.members(r)) {
      if (!m.has_neg(r, a, z)) return false;
      if (!(a == z) && !m.has_inv(r, a, u)) return false;
    }
    return true;
  }
  // left: c*x in into, right: x*c in into, for x in r and c in by
  bool absorbs(const R& into, const R& r, const R& by, bool left, bool right) const {
    const auto ys = m.members(by);
    for (const auto& x : m.members(r))
      for (const auto& c : ys) {
        if (left && !m.in(into, m.mul(c, x))) return false;
        if (right && !m.in(into, m.mul(x, c))) return false;
      }
    return true;
  }
  bool beyond(const R& r, const E& z) const {
    for (const auto& a : m.members(r))
      if (!(a == z)) return true;
    return false;
  }
  bool noncommutative(const R& r) const { return !commutative(r); }

  // The roles come from the witness JSON through the model's readers.
  bool accepts(Property p, const Json& w) const {
    auto R_ = [&](const char* k) { return m.region(w.at(k)); };
    auto E_ = [&](const char* k) { return m.element(w.at(k)); };
    auto has = [&](std::initializer_list<const char*> ks) {
      for (auto k : ks)
        if (!w.contains(k)) return false;
      return true;
    };
    const R S = m.whole();
    const std::string side = w.value("side", std::string("two_sided"));
    const bool left = side != "right", right = side != "left";
    using P = Property;
    switch (p) {
      case P::s_semiring_1:
      case P::s_semiring_2:
      case P::s_semifield_2:
      case P::s_anti_semifield: {
        if (!has({"A", "z", "u"})) return false;
        const R A = R_("A");
        const E z = E_("z"), u = E_("u");
        if (p == P::s_anti_semifield && !m.ring_like()) return false;
        if (!proper(A, S)) return false;
        return (p == P::s_semiring_1 || p == P::s_anti_semifield) ? semifield(A, z, u) : field(A, z, u);
      }
      case P::s_subsemiring:
      case P::s_ideal:
      case P::s_dual_ideal: {
        if (!has({"P", "zP", "A", "z", "u"})) return false;
        const R Pr = R_("P"), A = R_("A");
        const E zP = E_("zP"), z = E_("z"), u = E_("u");
        if (!nonempty(Pr) || !proper(Pr, S) || !closed(Pr) || !zero_of(Pr, zP)) return false;
        if (!subset(A, Pr) || !proper(A, Pr) || !semifield(A, z, u)) return false;
        if (p == P::s_ideal) return absorbs(A, A, Pr, left, right);
        if (p == P::s_dual_ideal) {
          for (const auto& a : m.members(A)) {
            if (a == z) continue;
            for (const auto& q : m.members(Pr))
              if (!m.in(A, m.add(a, q))) return false;
          }
        }
        return true;
      }
      case P::s_pseudo_subsemiring: {
        if (!has({"A", "P", "zP", "B", "z", "u"})) return false;
        const R A = R_("A"), Pr = R_("P"), B = R_("B");
        const E zP = E_("zP"), z = E_("z"), u = E_("u");
        return nonempty(A) && subset(A, Pr) && proper(A, Pr) && proper(Pr, S) && closed(Pr) && zero_of(Pr, zP) &&
               subset(B, Pr) && semifield(B, z, u);
      }
      case P::s_pseudo_ideal: {
        if (!has({"P", "A", "z", "u"})) return false;
        const R Pr = R_("P"), A = R_("A");
        const E z = E_("z"), u = E_("u");
        if (side != "left" && side != "right" && side != "two_sided") return false;
        return nonempty(Pr) && subset(Pr, A) && proper(Pr, A) && proper(A, S) && semifield(A, z, u) &&
               absorbs(Pr, Pr, A, left, right);
      }
      case P::s_pseudo_dual_ideal: {
        if (!has({"P", "A", "zA", "B", "z", "u"})) return false;
        const R Pr = R_("P"), A = R_("A"), B = R_("B");
        const E zA = E_("zA"), z = E_("z"), u = E_("u");
        if (!(nonempty(Pr) && subset(Pr, A) && proper(Pr, A) && closed(A) && zero_of(A, zA) && subset(B, A) &&
              semifield(B, z, u)))
          return false;
        for (const auto& q : m.members(Pr))
          for (const auto& a : m.members(A))
            if (!m.in(Pr, m.add(q, a))) return false;
        return true;
      }
      case P::s_semidivision_ring: {
        if (!has({"A", "zA", "B", "z", "u", "P", "zP"})) return false;
        const R A = R_("A"), B = R_("B"), Pr = R_("P");
        const E zA = E_("zA"), z = E_("z"), u = E_("u"), zP = E_("zP");
        return proper(A, S) && closed(A) && zero_of(A, zA) && noncommutative(A) && subset(B, A) && proper(B, A) &&
               semifield(B, z, u) && subset(Pr, A) && closed(Pr) && zero_of(Pr, zP) && noncommutative(Pr) &&
               no_zero_divisors(Pr, zP);
      }
      case P::s_zero_divisor: {
        if (!has({"a", "b", "x", "y"}) || !m.zero()) return false;
        const E z = *m.zero(), a = E_("a"), b = E_("b"), x = E_("x"), y = E_("y");
        auto mul = [&](const E& s, const E& t) { return m.mul(s, t); };
        return !(a == z) && !(b == z) && mul(a, b) == z && !(x == a) && !(x == b) && !(x == z) && !(y == a) &&
               !(y == b) && !(y == z) && !(x == y) && (mul(a, x) == z || mul(x, a) == z) &&
               (mul(b, y) == z || mul(y, b) == z) && (!(mul(x, y) == z) || !(mul(y, x) == z));
      }
      case P::s_anti_zero_divisor: {
        if (!has({"a", "b", "x", "y"}) || !m.zero()) return false;
        const E z = *m.zero(), a = E_("a"), b = E_("b"), x = E_("x"), y = E_("y");
        auto mul = [&](const E& s, const E& t) { return m.mul(s, t); };
        return !(mul(x, y) == z) && !(a == z) && !(a == x) && !(a == y) && !(b == z) && !(b == x) && !(b == y) &&
               (!(mul(a, x) == z) || !(mul(x, a) == z)) && (!(mul(b, y) == z) || !(mul(y, b) == z)) &&
               (mul(a, b) == z || mul(b, a) == z);
      }
      case P::s_idempotent: {
        if (!has({"a", "b"}) || !m.zero()) return false;
        const E z = *m.zero(), a = E_("a"), b = E_("b");
        if (a == z || !(m.mul(a, a) == a) || b == a || !(m.mul(b, b) == a)) return false;
        const bool i = m.mul(a, b) == b || m.mul(b, a) == b;
        const bool ii = m.mul(b, a) == a || m.mul(a, b) == a;
        return i != ii;
      }
      case P::s_unit: {
        if (!has({"a", "b", "x", "y"}) || !m.one()) return false;
        const E one = *m.one(), a = E_("a"), b = E_("b"), x = E_("x"), y = E_("y");
        auto mul = [&](const E& s, const E& t) { return m.mul(s, t); };
        return !(x == one) && mul(x, y) == one && !(a == x) && !(a == y) && !(a == one) && !(b == x) && !(b == y) &&
               !(b == one) && (mul(x, a) == y || mul(a, x) == y || mul(y, b) == x || mul(b, y) == x) &&
               mul(a, b) == one;
      }
      case P::s_semifield_1: {
        if (!has({"A"}) || !m.zero() || !m.one()) return false;
        if (!semifield(S, *m.zero(), *m.one())) return false;
        const R A = R_("A");
        return nonempty(A) && proper(A, S) && closed(A) && beyond(A, *m.zero()) && absorbs(A, A, S, true, true);
      }
      case P::s_weak_semifield: {
        if (!has({"P", "zP", "uP", "T"})) return false;
        const R Pr = R_("P"), T = R_("T");
        const E zP = E_("zP"), uP = E_("uP");
        return proper(Pr, S) && semifield(Pr, zP, uP) && nonempty(T) && subset(T, Pr) && proper(T, Pr) &&
               closed(T) && beyond(T, zP) && absorbs(T, T, Pr, true, true);
      }
      case P::s_anti_semiring: {
        if (!has({"A", "z"}) || !m.ring_like()) return false;
        const R A = R_("A");
        const E z = E_("z");
        if (!nonempty(A) || !closed(A) || !zero_of(A, z)) return false;
        for (const auto& a : m.members(A))
          if (!m.has_neg(A, a, z)) return true;
        return false;
      }
      case P::s_anti_ideal: {
        if (!has({"P", "zP", "T", "z", "u"}) || !m.ring_like()) return false;
        const R Pr = R_("P"), T = R_("T");
        const E zP = E_("zP"), z = E_("z"), u = E_("u");
        return proper(T, S) && semifield(T, z, u) && nonempty(Pr) && subset(Pr, T) && closed(Pr) &&
               zero_of(Pr, zP) && absorbs(Pr, Pr, T, false, true);
      }
      case P::semifield:
      case P::prime_semifield:
        return false;
    }
    return false;
  }
};

// ---- finite tables ----

struct TableModel {
  using E = Index;
  using R = std::vector<bool>;
  const srcert::Structure& s;

  std::size_t n() const { return s.size(); }
  std::vector<Index> members(const R& r) const {
    std::vector<Index> out;
    for (Index i = 0; i < r.size(); ++i)
      if (r[i]) out.push_back(i);
    return out;
  }
  bool in(const R& r, Index x) const { return x < r.size() && r[x]; }
  Index add(Index a, Index b) const { return s.add(a, b); }
  Index mul(Index a, Index b) const { return s.mul(a, b); }
  R whole() const { return R(n(), true); }
  std::optional<Index> zero() const {
    for (Index e = 0; e < n(); ++e) {
      bool ok = true;
      for (Index a = 0; a < n() && ok; ++a) ok = add(e, a) == a;
      if (ok) return e;
    }
    return std::nullopt;
  }
  std::optional<Index> one() const {
    for (Index e = 0; e < n(); ++e) {
      bool ok = true;
      for (Index a = 0; a < n() && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) return e;
    }
    return std::nullopt;
  }
  bool ring_like() const {
    auto z = zero();
    if (!z) return false;
    for (Index a = 0; a < n(); ++a) {
      bool found = false;
      for (Index b = 0; b < n() && !found; ++b) found = add(a, b) == *z;
      if (!found) return false;
    }
    return true;
  }
  bool has_neg(const R& r, Index a, Index z) const {
    for (Index b : members(r))
      if (add(a, b) == z) return true;
    return false;
  }
  bool has_inv(const R& r, Index a, Index u) const {
    for (Index b : members(r))
      if (mul(a, b) == u && mul(b, a) == u) return true;
    return false;
  }
  Index element(const Json& j) const {
    for (Index i = 0; i < n(); ++i)
      if (s.labels()[i] == j.get<std::string>()) return i;
    throw std::runtime_error("oracle: unknown label " + j.dump());
  }
  R region(const Json& j) const {
    R r(n(), false);
    for (const auto& x : j) r[element(x)] = true;
    return r;
  }
};

// ---- symbolic structures over a window ----

inline bool tag_has(srcert::NumberTag t, const mpq_class& x) {
  using srcert::NumberTag;
  const bool integer = x.get_den() == 1;
  switch (t) {
    case NumberTag::Z0: return integer && sgn(x) >= 0;
    case NumberTag::Z: return integer;
    case NumberTag::Q0:
    case NumberTag::R0: return sgn(x) >= 0;
    case NumberTag::Q:
    case NumberTag::R: return true;
  }
  return false;
}

inline mpq_class rat(const std::string& s) {
  mpq_class q(s, 10);
  q.canonicalize();
  return q;
}

// Window values for number coordinates; deliberately not the certifier's samples.
inline std::vector<mpq_class> number_window() {
  std::vector<mpq_class> out;
  for (const char* s : {"0", "1", "2", "3", "4", "6", "9", "-1", "-2", "-5", "1/2", "1/3", "-3/2", "5/4"})
    out.push_back(rat(s));
  return out;
}

struct Desc {
  std::vector<std::string> coords;
  bool or_zero = false;
};

struct SymbolicModel {
  using E = srcert::Element;
  using R = Desc;
  const srcert::SymbolicSemiring& s;
  std::size_t cap = 300;

  const srcert::Component& comp(std::size_t i) const { return s.coords()[i]; }
  mpq_class czero(std::size_t i) const {
    return comp(i).is_tag() ? mpq_class(0) : mpq_class(*comp(i).structure().zero());
  }
  bool in_comp(std::size_t i, const mpq_class& x) const {
    if (comp(i).is_tag()) return tag_has(comp(i).number_tag(), x);
    return x.get_den() == 1 && sgn(x) >= 0 && x < mpq_class(static_cast<long>(comp(i).structure().size()));
  }
  mpq_class coord_value(std::size_t i, const std::string& text) const {
    if (comp(i).is_tag()) return rat(text);
    auto k = comp(i).structure().find(text);
    if (!k) throw std::runtime_error("oracle: unknown coordinate label " + text);
    return mpq_class(*k);
  }
  std::vector<mpq_class> comp_window(std::size_t i) const {
    std::vector<mpq_class> out;
    if (!comp(i).is_tag()) {
      for (Index k = 0; k < comp(i).structure().size(); ++k) out.emplace_back(k);
      return out;
    }
    for (const auto& q : number_window())
      if (in_comp(i, q)) out.push_back(q);
    return out;
  }

  bool desc_has(std::size_t i, const std::string& d, const mpq_class& x) const {
    if (!in_comp(i, x)) return false;
    if (d == "0") return x == czero(i);
    if (d == "all") return true;
    if (d == "positive") return comp(i).is_tag() ? sgn(x) > 0 : x != czero(i);
    const auto colon = d.find(':');
    const std::string kind = d.substr(0, colon), arg = colon == std::string::npos ? "" : d.substr(colon + 1);
    if (kind == "multiples") {
      if (!comp(i).is_tag()) return false;
      const mpq_class step = rat(arg);
      if (sgn(step) == 0) return sgn(x) == 0;
      const mpq_class r = x / step;
      return r.get_den() == 1;
    }
    if (kind == "values") {
      std::size_t start = 0;
      while (start <= arg.size()) {
        const auto bar = arg.find('|', start);
        const std::string v = arg.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
        if (!v.empty() && coord_value(i, v) == x) return true;
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      return false;
    }
    if (kind == "within") return tag_has(*srcert::parse_number_tag(arg), x);
    throw std::runtime_error("oracle: unknown descriptor " + d);
  }

  std::vector<mpq_class> desc_window(std::size_t i, const std::string& d) const {
    std::vector<mpq_class> cand = comp_window(i);
    const auto colon = d.find(':');
    if (colon != std::string::npos && d.substr(0, colon) == "multiples") {
      const mpq_class step = rat(d.substr(colon + 1));
      for (int k : {0, 1, 2, 5, -1, -3}) cand.push_back(step * k);
    } else if (colon != std::string::npos && d.substr(0, colon) == "values") {
      const std::string arg = d.substr(colon + 1);
      std::size_t start = 0;
      while (true) {
        const auto bar = arg.find('|', start);
        cand.push_back(coord_value(i, arg.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
    }
    std::vector<mpq_class> out;
    for (const auto& q : cand)
      if (desc_has(i, d, q) && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    return out;
  }

  std::vector<E> product(const std::vector<std::vector<mpq_class>>& per) const {
    std::vector<E> out{E{}};
    for (const auto& vals : per) {
      std::vector<E> next;
      for (const auto& pre : out)
        for (const auto& v : vals) {
          E e = pre;
          e.push_back(v);
          next.push_back(std::move(e));
        }
      out = std::move(next);
    }
    return out;
  }

  E zero_el() const {
    E z;
    for (std::size_t i = 0; i < s.dim(); ++i) z.push_back(czero(i));
    return z;
  }

  std::vector<E> capped(std::vector<E> xs) const {
    if (xs.size() <= cap) return xs;
    std::mt19937_64 rng(20240611);
    std::shuffle(xs.begin(), xs.end(), rng);
    const E z = zero_el();
    auto zi = std::find(xs.begin(), xs.end(), z);
    if (zi != xs.end()) std::iter_swap(xs.begin(), zi);
    xs.resize(cap);
    return xs;
  }

  std::vector<E> members(const R& r) const {
    std::vector<std::vector<mpq_class>> per;
    for (std::size_t i = 0; i < s.dim(); ++i) per.push_back(desc_window(i, r.coords[i]));
    auto xs = product(per);
    if (r.or_zero && std::find(xs.begin(), xs.end(), zero_el()) == xs.end()) xs.insert(xs.begin(), zero_el());
    return capped(std::move(xs));
  }
  bool in(const R& r, const E& x) const {
    if (x.size() != s.dim()) return false;
    if (r.or_zero && x == zero_el()) return true;
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!desc_has(i, r.coords[i], x[i])) return false;
    return true;
  }
  E add(const E& a, const E& b) const { return s.add(a, b); }
  E mul(const E& a, const E& b) const { return s.mul(a, b); }
  R whole() const { return Desc{std::vector<std::string>(s.dim(), "all"), false}; }
  std::optional<E> zero() const { return zero_el(); }
  std::optional<E> one() const { return s.one(); }
  bool ring_like() const {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (comp(i).is_tag()) {
        const auto t = comp(i).number_tag();
        if (t == srcert::NumberTag::Z0 || t == srcert::NumberTag::Q0 || t == srcert::NumberTag::R0) return false;
      } else {
        const auto& st = comp(i).structure();
        const Index z = *st.zero();
        for (Index a = 0; a < st.size(); ++a) {
          bool found = false;
          for (Index b = 0; b < st.size() && !found; ++b) found = st.add(a, b) == z;
          if (!found) return false;
        }
      }
    }
    return true;
  }
  // Per-coordinate candidates for y with op(a_i, y_i) = t_i; exact for tuples.
  template <class Op>
  bool solve_in(const R& r, const E& a, const E& t, Op op) const {
    for (const auto& x : members(r))
      if (op(a, x) == t && op(x, a) == t) return true;
    if (!dynamic_cast<const srcert::TupleSemiring*>(&s)) return false;
    std::vector<std::vector<mpq_class>> per;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      std::vector<mpq_class> cands = desc_window(i, r.coords[i]);
      E probe_a = zero_el(), probe_t = zero_el();
      std::vector<mpq_class> ok;
      for (const auto& c : cands) {
        E y = zero_el();
        probe_a[i] = a[i];
        y[i] = c;
        probe_t[i] = t[i];
        if (op(probe_a, y)[i] == t[i]) ok.push_back(c);
      }
      if (comp(i).is_tag()) {
        // exact solutions that the window may miss
        const bool additive = op(zero_el(), zero_el()) == zero_el() && op(probe_a, zero_el())[i] == a[i];
        mpq_class y = additive ? mpq_class(t[i] - a[i]) : (sgn(a[i]) != 0 ? mpq_class(t[i] / a[i]) : mpq_class(0));
        y.canonicalize();
        if (desc_has(i, r.coords[i], y)) ok.push_back(y);
      }
      if (ok.empty()) return false;
      per.push_back(ok);
    }
    for (const auto& y : product(per))
      if (in(r, y) && op(a, y) == t && op(y, a) == t) return true;
    return false;
  }
  bool has_neg(const R& r, const E& a, const E& z) const {
    return solve_in(r, a, z, [&](const E& x, const E& y) { return s.add(x, y); });
  }
  bool has_inv(const R& r, const E& a, const E& u) const {
    return solve_in(r, a, u, [&](const E& x, const E& y) { return s.mul(x, y); });
  }
  E element(const Json& j) const {
    if (!j.is_array() || j.size() != s.dim()) throw std::runtime_error("oracle: bad element " + j.dump());
    E out;
    for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(coord_value(i, j[i].is_string() ? j[i].get<std::string>() : j[i].dump()));
    return out;
  }
  R region(const Json& j) const {
    Desc d;
    for (const auto& c : j.at("coords")) d.coords.push_back(c.get<std::string>());
    d.or_zero = j.value("or_zero", false);
    if (d.coords.size() != s.dim()) throw std::runtime_error("oracle: bad subset " + j.dump());
    return d;
  }
};

inline bool accepts(const srcert::Subject& subj, Property p, const Json& witness) {
  if (subj.is_table()) {
    TableModel m{subj.structure()};
    return Clauses<TableModel>{m}.accepts(p, witness);
  }
  SymbolicModel m{subj.ring()};
  return Clauses<SymbolicModel>{m}.accepts(p, witness);
}

// ---- mutations ----

// Descriptor pool for a coordinate of a symbolic subset.
inline std::vector<std::string> descriptor_pool(const srcert::Component& c) {
  if (!c.is_tag()) {
    std::vector<std::string> out{"0", "all", "positive"};
    const auto n = c.structure().size();
    for (std::size_t k = 1; k < n && k < 6; ++k) out.push_back("values:" + c.structure().label(0) + "|" + c.structure().label(static_cast<Index>(k)));
    return out;
  }
  return {"0", "all", "positive", "multiples:2", "multiples:3", "multiples:1/2", "values:0|1", "values:1",
          "values:0|2|4", "within:Z0", "within:Z", "within:Q0"};
}

// One random single-role, single-element change of the witness JSON.
inline Json mutate(const srcert::Subject& subj, Property p, const Json& w, std::mt19937_64& rng) {
  std::vector<std::string> roles;
  for (const auto& r : srcert::witness_roles(p))
    if (w.contains(r) && r != "side") roles.push_back(r);
  Json out = w;
  const std::string role = roles[std::uniform_int_distribution<std::size_t>(0, roles.size() - 1)(rng)];
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  Json& v = out[role];
  if (subj.is_table()) {
    const auto& labels = subj.structure().labels();
    if (v.is_string()) {
      std::string l;
      do l = labels[pick(labels.size())];
      while (l == v.get<std::string>());
      v = l;
    } else {
      const std::string l = labels[pick(labels.size())];
      auto it = std::find(v.begin(), v.end(), Json(l));
      if (it != v.end()) {
        v.erase(it);
      } else {
        v.push_back(l);
      }
    }
    return out;
  }
  const auto& ring = subj.ring();
  if (v.is_array()) {
    const std::size_t i = pick(ring.dim());
    const auto& c = ring.coords()[i];
    std::vector<std::string> vals;
    if (c.is_tag()) {
      for (const auto& q : number_window())
        if (tag_has(c.number_tag(), q)) vals.push_back(srcert::format_rational(q));
    } else {
      vals = c.structure().labels();
    }
    std::string nv;
    do nv = vals[pick(vals.size())];
    while (nv == v[i].get<std::string>());
    v[i] = nv;
    return out;
  }
  // subset: change one coordinate descriptor, or the zero adjunction
  const std::size_t i = pick(ring.dim() + 1);
  if (i == ring.dim()) {
    v["or_zero"] = !v.value("or_zero", false);
    return out;
  }
  const auto pool = descriptor_pool(ring.coords()[i]);
  std::string d;
  do d = pool[pick(pool.size())];
  while (d == v["coords"][i].get<std::string>());
  v["coords"][i] = d;
  return out;
}

// ---- fuzzing positive certificates ----

struct FuzzStats {
  std::size_t certificates = 0;
  std::size_t invalid_tested = 0;  // mutants the oracle rejects
  std::size_t oracle_valid = 0;    // mutants that are another valid witness
  std::size_t unparsable = 0;      // mutants the witness reader refuses
  std::size_t false_accepts = 0;   // verify accepts, oracle rejects
  std::size_t valid_rejected = 0;  // table subjects: oracle accepts, verify rejects
  std::vector<std::string> problems;
};

// For every positive certify claim, draws single-role mutations of its
// witness until `per_cert` oracle-invalid mutants have been verified.
inline FuzzStats fuzz_certificates(const std::vector<srcert::ClaimRecord>& records, std::size_t per_cert,
                                   std::uint64_t seed, std::size_t max_attempts = 600) {
  FuzzStats st;
  std::mt19937_64 rng(seed);
  for (const auto& rec : records) {
    auto pc = srcert::positive_certificate(rec);
    if (!pc) continue;
    const auto& [subj, cert] = *pc;
    ++st.certificates;
    const Json w = srcert::witness_json(subj, cert.parts);
    if (!accepts(subj, cert.property, w)) st.problems.push_back(rec.id + ": oracle rejects the original witness");
    std::size_t invalid = 0, attempts = 0;
    while (invalid < per_cert && attempts++ < max_attempts) {
      const Json mw = mutate(subj, cert.property, w, rng);
      srcert::Certificate mc = cert;
      mc.transcript.clear();
      mc.notes.clear();
      mc.holds = true;
      try {
        mc.parts = srcert::parse_witness(subj, mw);
      } catch (const std::exception&) {
        ++st.unparsable;
        continue;
      }
      const bool ok = srcert::verify(subj, mc).ok;
      const bool good = accepts(subj, cert.property, mw);
      if (good) {
        ++st.oracle_valid;
        if (subj.is_table() && !ok) {
          ++st.valid_rejected;
          st.problems.push_back(rec.id + ": valid mutant rejected " + mw.dump());
        }
        continue;
      }
      ++invalid;
      ++st.invalid_tested;
      if (ok) {
        ++st.false_accepts;
        st.problems.push_back(rec.id + ": false accept " + mw.dump());
      }
    }
    if (invalid < per_cert)
      st.problems.push_back(rec.id + ": only " + std::to_string(invalid) + " invalid mutants found");
  }
  return st;
}

}  // namespace oracle

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

#include "srcert/symbolic.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "srcert/error.hpp"

namespace srcert {

std::string_view to_string(NumberTag t) noexcept {
  switch (t) {
    case NumberTag::Z0: return "Z0";
    case NumberTag::Q0: return "Q0";
    case NumberTag::R0: return "R0";
    case NumberTag::Z: return "Z";
    case NumberTag::Q: return "Q";
    case NumberTag::R: return "R";
  }
  return "?";
}

std::optional<NumberTag> parse_number_tag(std::string_view s) {
  for (NumberTag t : {NumberTag::Z0, NumberTag::Q0, NumberTag::R0, NumberTag::Z, NumberTag::Q, NumberTag::R}) {
    if (s == to_string(t)) return t;
  }
  return std::nullopt;
}

bool tag_contains(NumberTag t, const mpq_class& q) {
  const bool integral = q.get_den() == 1;
  switch (t) {
    case NumberTag::Z0: return integral && sgn(q) >= 0;
    case NumberTag::Z: return integral;
    case NumberTag::Q0:
    case NumberTag::R0: return sgn(q) >= 0;
    case NumberTag::Q:
    case NumberTag::R: return true;
  }
  return false;
}

bool tag_is_group(NumberTag t) noexcept { return t == NumberTag::Z || t == NumberTag::Q || t == NumberTag::R; }

std::string format_rational(const mpq_class& q) { return q.get_str(); }

std::optional<mpq_class> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (; i < s.size(); ++i) {
    if (s[i] >= '0' && s[i] <= '9') {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      return std::nullopt;
    }
  }
  if (!digits) return std::nullopt;
  mpq_class q(std::string(s), 10);
  if (slash && q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

Component Component::tag(NumberTag t) {
  Component c;
  c.tag_ = t;
  c.name_ = std::string(to_string(t));
  return c;
}

Component Component::table(std::shared_ptr<const Structure> s, std::string name) {
  if (!s->zero()) throw Error(ErrorCode::invalid_argument, "table component needs an additive identity");
  Component c;
  c.table_ = std::move(s);
  c.name_ = std::move(name);
  return c;
}

namespace {

Index as_index(const mpq_class& x) { return static_cast<Index>(x.get_num().get_ui()); }

}  // namespace

bool Component::contains(const mpq_class& x) const {
  if (is_tag()) return tag_contains(tag_, x);
  return x.get_den() == 1 && sgn(x) >= 0 && x < static_cast<unsigned long>(table_->size());
}

mpq_class Component::add(const mpq_class& a, const mpq_class& b) const {
  if (is_tag()) return a + b;
  return table_->add(as_index(a), as_index(b));
}

mpq_class Component::mul(const mpq_class& a, const mpq_class& b) const {
  if (is_tag()) return a * b;
  return table_->mul(as_index(a), as_index(b));
}

mpq_class Component::zero() const {
  if (is_tag()) return 0;
  return *table_->zero();
}

std::optional<mpq_class> Component::one() const {
  if (is_tag()) return mpq_class(1);
  if (auto u = table_->one()) return mpq_class(*u);
  return std::nullopt;
}

std::optional<mpq_class> Component::solve_add(const mpq_class& a, const mpq_class& target) const {
  if (is_tag()) {
    mpq_class y = target - a;
    if (contains(y)) return y;
    return std::nullopt;
  }
  for (Index y = 0; y < table_->size(); ++y) {
    if (table_->add(as_index(a), y) == as_index(target)) return mpq_class(y);
  }
  return std::nullopt;
}

std::optional<mpq_class> Component::solve_mul(const mpq_class& a, const mpq_class& target) const {
  if (is_tag()) {
    if (sgn(a) == 0) {
      if (sgn(target) == 0) return mpq_class(0);
      return std::nullopt;
    }
    mpq_class y = target / a;
    if (contains(y)) return y;
    return std::nullopt;
  }
  for (Index y = 0; y < table_->size(); ++y) {
    if (table_->mul(as_index(a), y) == as_index(target)) return mpq_class(y);
  }
  return std::nullopt;
}

bool Component::group_like() const {
  if (is_tag()) return tag_is_group(tag_);
  return table_->has(Flag::ring);
}

std::optional<std::size_t> Component::finite_size() const {
  if (is_tag()) return std::nullopt;
  return table_->size();
}

std::string Component::format(const mpq_class& x) const {
  if (is_tag()) return format_rational(x);
  return table_->label(as_index(x));
}

std::optional<mpq_class> Component::parse(std::string_view text) const {
  if (is_tag()) {
    auto q = parse_rational(text);
    if (q && contains(*q)) return q;
    return std::nullopt;
  }
  if (auto i = table_->find(text)) return mpq_class(*i);
  return std::nullopt;
}

std::vector<mpq_class> Component::samples() const {
  std::vector<mpq_class> out;
  if (!is_tag()) {
    for (Index i = 0; i < table_->size(); ++i) out.emplace_back(i);
    return out;
  }
  for (const char* s : {"0", "1", "2", "3", "5", "12", "-1", "-3", "1/2", "3/4", "7/3", "-1/2", "-5/3"}) {
    mpq_class q(s, 10);
    q.canonicalize();
    if (contains(q)) out.push_back(q);
  }
  return out;
}

std::optional<Element> SymbolicSemiring::solve_mul(const Element&, const Element&) const { return std::nullopt; }

Element SymbolicSemiring::add(const Element& a, const Element& b) const {
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i].add(a[i], b[i]);
  return out;
}

Element SymbolicSemiring::zero() const {
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i].zero();
  return out;
}

bool SymbolicSemiring::contains(const Element& x) const {
  if (x.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!coords_[i].contains(x[i])) return false;
  }
  return true;
}

std::optional<Element> SymbolicSemiring::solve_add(const Element& a, const Element& target) const {
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    auto y = coords_[i].solve_add(a[i], target[i]);
    if (!y) return std::nullopt;
    out[i] = *y;
  }
  return out;
}

bool SymbolicSemiring::group_like() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Component& c) { return c.group_like(); });
}

std::optional<std::size_t> SymbolicSemiring::finite_size() const {
  std::size_t n = 1;
  for (const auto& c : coords_) {
    auto k = c.finite_size();
    if (!k) return std::nullopt;
    if (*k != 0 && n > (std::size_t{1} << 40) / *k) throw Error(ErrorCode::cap_exceeded, "carrier too large to count");
    n *= *k;
  }
  return n;
}

Element SymbolicSemiring::element_at(std::size_t i) const {
  Element out(dim());
  for (std::size_t c = dim(); c-- > 0;) {
    const std::size_t k = *coords_[c].finite_size();
    out[c] = static_cast<unsigned long>(i % k);
    i /= k;
  }
  return out;
}

std::size_t SymbolicSemiring::index_of(const Element& x) const {
  std::size_t i = 0;
  for (std::size_t c = 0; c < dim(); ++c) i = i * *coords_[c].finite_size() + as_index(x[c]);
  return i;
}

TupleSemiring::TupleSemiring(std::vector<Component> factors) : SymbolicSemiring(std::move(factors)) {
  if (dim() == 0) throw Error(ErrorCode::invalid_argument, "empty product");
}

std::string TupleSemiring::describe() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) out += (i ? " x " : "") + coords()[i].name();
  return out;
}

Element TupleSemiring::mul(const Element& a, const Element& b) const {
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords()[i].mul(a[i], b[i]);
  return out;
}

std::optional<Element> TupleSemiring::one() const {
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    auto u = coords()[i].one();
    if (!u) return std::nullopt;
    out[i] = *u;
  }
  return out;
}

std::string TupleSemiring::format(const Element& x) const {
  std::string out = "(";
  for (std::size_t i = 0; i < dim(); ++i) out += (i ? "," : "") + coords()[i].format(x[i]);
  return out + ")";
}

bool TupleSemiring::known_commutative() const {
  return std::all_of(coords().begin(), coords().end(),
                     [](const Component& c) { return c.is_tag() || c.structure().has(Flag::commutative_mul); });
}

std::optional<Element> TupleSemiring::solve_mul(const Element& a, const Element& target) const {
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    auto y = coords()[i].solve_mul(a[i], target[i]);
    if (!y) return std::nullopt;
    out[i] = *y;
  }
  return out;
}

MatrixSemiring::MatrixSemiring(Component base, std::size_t k)
    : SymbolicSemiring(std::vector<Component>(k * k, base)), k_(k) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "matrix dimension must be positive");
}

std::string MatrixSemiring::describe() const {
  return "M" + std::to_string(k_) + "x" + std::to_string(k_) + "(" + base().name() + ")";
}

Element MatrixSemiring::mul(const Element& a, const Element& b) const {
  const Component& c = base();
  Element out(k_ * k_);
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) {
      mpq_class acc = c.mul(a[i * k_], b[j]);
      for (std::size_t t = 1; t < k_; ++t) acc = c.add(acc, c.mul(a[i * k_ + t], b[t * k_ + j]));
      out[i * k_ + j] = acc;
    }
  }
  return out;
}

std::optional<Element> MatrixSemiring::one() const {
  auto u = base().one();
  if (!u) return std::nullopt;
  Element out = zero();
  for (std::size_t i = 0; i < k_; ++i) out[i * k_ + i] = *u;
  return out;
}

std::string MatrixSemiring::format(const Element& x) const {
  std::string out = "[";
  for (std::size_t i = 0; i < k_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < k_; ++j) out += (j ? "," : "") + base().format(x[i * k_ + j]);
    out += "]";
  }
  return out + "]";
}

GroupAlgebra::GroupAlgebra(Component coeff, FiniteMagma carrier, std::string carrier_name)
    : SymbolicSemiring(std::vector<Component>(carrier.size(), coeff)),
      carrier_(std::move(carrier)),
      carrier_name_(std::move(carrier_name)),
      identity_(identity_element(carrier_)) {
  if (!identity_) throw Error(ErrorCode::invalid_argument, "carrier needs an identity element");
  if (!associativity(carrier_, Exec::serial)) throw Error(ErrorCode::invalid_argument, "carrier is not associative");
}

std::string GroupAlgebra::describe() const { return coeff().name() + carrier_name_; }

Element GroupAlgebra::mul(const Element& a, const Element& b) const {
  const Component& c = coeff();
  const auto n = static_cast<Index>(carrier_.size());
  Element out = zero();
  const mpq_class z = c.zero();
  for (Index g = 0; g < n; ++g) {
    if (a[g] == z) continue;
    for (Index h = 0; h < n; ++h) {
      if (b[h] == z) continue;
      const Index k = carrier_(g, h);
      out[k] = c.add(out[k], c.mul(a[g], b[h]));
    }
  }
  return out;
}

std::optional<Element> GroupAlgebra::one() const {
  auto u = coeff().one();
  if (!u) return std::nullopt;
  Element out = zero();
  out[*identity_] = *u;
  return out;
}

std::string GroupAlgebra::format(const Element& x) const {
  const Component& c = coeff();
  const mpq_class z = c.zero();
  const auto u = c.one();
  std::string out;
  for (Index g = 0; g < carrier_.size(); ++g) {
    if (x[g] == z) continue;
    std::string term;
    if (u && x[g] == *u) {
      term = carrier_.label(g);
    } else if (g == *identity_) {
      term = c.format(x[g]);
    } else {
      term = c.format(x[g]) + "*" + carrier_.label(g);
    }
    out += (out.empty() ? "" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

bool GroupAlgebra::known_commutative() const {
  const bool coeff_comm = coeff().is_tag() || coeff().structure().has(Flag::commutative_mul);
  return coeff_comm && commutativity(carrier_).holds;
}

Structure materialize(const SymbolicSemiring& s, std::size_t cap) {
  const auto n = s.finite_size();
  if (!n) throw Error(ErrorCode::invalid_argument, s.describe() + " has an infinite carrier");
  if (*n > cap) {
    throw Error(ErrorCode::cap_exceeded,
                s.describe() + " has " + std::to_string(*n) + " elements, above the cap " + std::to_string(cap));
  }
  std::vector<Element> elems;
  elems.reserve(*n);
  RawTables raw;
  for (std::size_t i = 0; i < *n; ++i) {
    elems.push_back(s.element_at(i));
    raw.labels.push_back(s.format(elems.back()));
  }
  raw.add.resize(*n * *n);
  raw.mul.resize(*n * *n);
  for (std::size_t i = 0; i < *n; ++i) {
    for (std::size_t j = 0; j < *n; ++j) {
      raw.add[i * *n + j] = static_cast<Index>(s.index_of(s.add(elems[i], elems[j])));
      raw.mul[i * *n + j] = static_cast<Index>(s.index_of(s.mul(elems[i], elems[j])));
    }
  }
  return validate_semiring(std::move(raw));
}

bool CoordSet::contains(const Component& c, const mpq_class& x) const {
  if (!c.contains(x)) return false;
  switch (kind) {
    case Kind::zero: return x == c.zero();
    case Kind::all: return true;
    case Kind::positive: return c.is_tag() ? sgn(x) > 0 : x != c.zero();
    case Kind::multiples: {
      if (!c.is_tag()) return false;
      if (sgn(step) == 0) return sgn(x) == 0;
      mpq_class r = x / step;
      return r.get_den() == 1;
    }
    case Kind::values: return std::find(values.begin(), values.end(), x) != values.end();
    case Kind::within: return tag_contains(tag, x);
  }
  return false;
}

std::vector<mpq_class> CoordSet::samples(const Component& c) const {
  std::vector<mpq_class> raw;
  switch (kind) {
    case Kind::zero: raw.push_back(c.zero()); break;
    case Kind::all:
    case Kind::positive: raw = c.samples(); break;
    case Kind::multiples:
      for (int m : {0, 1, 2, 3, 7, -1, -2}) raw.push_back(step * m);
      break;
    case Kind::values: raw = values; break;
    case Kind::within: {
      raw = c.samples();
      for (const auto& q : Component::tag(tag).samples()) raw.push_back(q);
      break;
    }
  }
  std::vector<mpq_class> out;
  for (auto& q : raw) {
    if (contains(c, q) && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

std::string CoordSet::describe(const Component& c) const {
  switch (kind) {
    case Kind::zero: return "{" + c.format(c.zero()) + "}";
    case Kind::all: return c.name();
    case Kind::positive: return c.name() + "\\{0}";
    case Kind::multiples: return format_rational(step) + c.name();
    case Kind::values: {
      std::string out = "{";
      for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + c.format(values[i]);
      return out + "}";
    }
    case Kind::within: return std::string(to_string(tag)) + " in " + c.name();
  }
  return "?";
}

bool SymbolicSubset::contains(const SymbolicSemiring& s, const Element& x) const {
  if (!s.contains(x) || coords.size() != s.dim()) return false;
  if (or_zero && x == s.zero()) return true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].contains(s.coords()[i], x[i])) return false;
  }
  return true;
}

std::string SymbolicSubset::describe(const SymbolicSemiring& s) const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size() && i < s.dim(); ++i) {
    out += (i ? ", " : "") + coords[i].describe(s.coords()[i]);
  }
  out += ")";
  if (or_zero) out += " U {0}";
  return out;
}

std::vector<Element> SymbolicSubset::samples(const SymbolicSemiring& s, std::size_t limit) const {
  std::vector<std::vector<mpq_class>> per;
  std::size_t total = 1;
  bool empty = false;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    per.push_back(coords[i].samples(s.coords()[i]));
    if (per.back().empty()) empty = true;
    total = std::min<std::size_t>(total * std::max<std::size_t>(per.back().size(), 1), limit + 1);
  }
  std::vector<Element> out;
  auto push = [&](Element e) {
    if (contains(s, e) && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
  };
  if (or_zero) push(s.zero());
  if (empty) return out;
  if (total <= limit) {
    std::vector<std::size_t> pos(per.size(), 0);
    while (true) {
      Element e(per.size());
      for (std::size_t i = 0; i < per.size(); ++i) e[i] = per[i][pos[i]];
      push(std::move(e));
      std::size_t i = per.size();
      while (i > 0 && ++pos[i - 1] == per[i - 1].size()) pos[--i] = 0;
      if (i == 0) break;
    }
    return out;
  }
  std::size_t widest = 0;
  for (const auto& p : per) widest = std::max(widest, p.size());
  for (std::size_t j = 0; j < widest; ++j) {
    Element e(per.size());
    for (std::size_t i = 0; i < per.size(); ++i) e[i] = per[i][std::min(j, per[i].size() - 1)];
    push(std::move(e));
  }
  std::mt19937_64 rng(0x5eedULL);
  for (std::size_t tries = 0; out.size() < limit && tries < 8 * limit; ++tries) {
    Element e(per.size());
    for (std::size_t i = 0; i < per.size(); ++i) e[i] = per[i][rng() % per[i].size()];
    push(std::move(e));
  }
  return out;
}

SymbolicSubset whole(const SymbolicSemiring& s) {
  return {std::vector<CoordSet>(s.dim(), CoordSet::everything()), false};
}

}  // namespace srcert

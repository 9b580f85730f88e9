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

#include "srcert/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "srcert/error.hpp"
#include "srcert/kernels.hpp"

namespace srcert {

Structure lattice_semiring(const FiniteLattice& l) { return validate_semiring(l.join_table(), l.meet_table()); }

Structure chain_lattice(std::size_t n) { return lattice_semiring(lattices::chain(n)); }

Structure power_set_semiring(std::size_t k) { return lattice_semiring(lattices::power_set(k)); }

Structure zmod_ring(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  const auto m = static_cast<Index>(n);
  auto add = FiniteMagma::tabulate(labels, [m](Index a, Index b) { return (a + b) % m; });
  auto mul = FiniteMagma::tabulate(labels, [m](Index a, Index b) {
    return static_cast<Index>((std::uint64_t{a} * b) % m);
  });
  return validate_semiring(std::move(add), std::move(mul));
}

namespace {

constexpr std::size_t kProductLimit = 4096;

struct Radix {
  std::vector<std::size_t> sizes;
  std::size_t total = 1;
  std::vector<Index> digits(std::size_t i) const {
    std::vector<Index> d(sizes.size());
    for (std::size_t c = sizes.size(); c-- > 0;) {
      d[c] = static_cast<Index>(i % sizes[c]);
      i /= sizes[c];
    }
    return d;
  }
  std::size_t index(const std::vector<Index>& d) const {
    std::size_t i = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c) i = i * sizes[c] + d[c];
    return i;
  }
};

}  // namespace

Structure direct_product(std::span<const Structure> factors) {
  if (factors.empty()) throw Error(ErrorCode::invalid_argument, "direct product needs a factor");
  Radix rx;
  for (const auto& f : factors) {
    rx.sizes.push_back(f.size());
    rx.total *= f.size();
    if (rx.total > kProductLimit) throw Error(ErrorCode::cap_exceeded, "direct product above 4096 elements");
  }
  std::vector<std::string> labels;
  std::vector<std::vector<Index>> digits;
  for (std::size_t i = 0; i < rx.total; ++i) {
    digits.push_back(rx.digits(i));
    std::string s = "(";
    for (std::size_t c = 0; c < factors.size(); ++c) s += (c ? "," : "") + factors[c].label(digits[i][c]);
    labels.push_back(s + ")");
  }
  auto op = [&](bool mul) {
    return [&, mul](Index a, Index b) {
      std::vector<Index> d(factors.size());
      for (std::size_t c = 0; c < factors.size(); ++c) {
        d[c] = mul ? factors[c].mul(digits[a][c], digits[b][c]) : factors[c].add(digits[a][c], digits[b][c]);
      }
      return static_cast<Index>(rx.index(d));
    };
  };
  AxiomOptions opts;
  opts.require_zero = std::all_of(factors.begin(), factors.end(), [](const Structure& f) { return f.zero(); });
  return validate_semiring(FiniteMagma::tabulate(labels, op(false)), FiniteMagma::tabulate(labels, op(true)), opts);
}

std::string kind_tag(const Structure& s) {
  if (s.has(Flag::field)) return "field";
  if (s.has(Flag::ring)) return "ring";
  if (s.has(Flag::semifield)) return "semifield";
  if (s.has(Flag::lattice_derived)) return "lattice";
  return "semiring";
}

Structure mixed_direct_product(std::span<const Structure> factors) {
  std::vector<std::string> tags;
  for (const auto& f : factors) tags.push_back(kind_tag(f));
  return direct_product(factors).with_factor_tags(std::move(tags));
}

Structure matrix_semiring(const Structure& base, std::size_t k, std::size_t cap) {
  MatrixSemiring m(Component::table(std::make_shared<const Structure>(base), "base"), k);
  return materialize(m, cap);
}

namespace {

using Perm = std::vector<Index>;

std::string one_line(const Perm& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i] + 1);
  return s + "]";
}

FiniteMagma compose_table(const std::vector<Perm>& maps, std::vector<std::string> labels) {
  std::map<Perm, Index> where;
  for (Index i = 0; i < maps.size(); ++i) where[maps[i]] = i;
  return FiniteMagma::tabulate(std::move(labels), [&](Index a, Index b) {
    Perm c(maps[a].size());
    for (std::size_t x = 0; x < c.size(); ++x) c[x] = maps[a][maps[b][x]];
    return where.at(c);
  });
}

}  // namespace

FiniteMagma symmetric_group(std::size_t n) {
  if (n == 0 || n > 6) throw Error(ErrorCode::invalid_argument, "symmetric group degree must be 1..6");
  std::vector<Perm> perms;
  std::vector<std::string> labels;
  if (n == 3) {
    perms = {{0, 1, 2}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}};
    labels = {"1", "p1", "p2", "p3", "p4", "p5"};
  } else {
    Perm p(n);
    std::iota(p.begin(), p.end(), Index{0});
    do {
      perms.push_back(p);
      labels.push_back(one_line(p));
    } while (std::next_permutation(p.begin(), p.end()));
    labels[0] = "1";
  }
  return compose_table(perms, std::move(labels));
}

FiniteMagma full_transformation(std::size_t n) {
  if (n == 0 || n > 5) throw Error(ErrorCode::invalid_argument, "full transformation degree must be 1..5");
  std::vector<Perm> maps;
  std::vector<std::string> labels;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    Perm f(n);
    std::size_t c = code;
    for (std::size_t x = n; x-- > 0;) {
      f[x] = static_cast<Index>(c % n);
      c /= n;
    }
    maps.push_back(f);
    labels.push_back(one_line(f));
  }
  return compose_table(maps, std::move(labels));
}

namespace {

std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

}  // namespace

FiniteMagma cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "cyclic group order must be positive");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(power_label("g", k));
  const auto m = static_cast<Index>(n);
  return FiniteMagma::tabulate(std::move(labels), [m](Index a, Index b) { return (a + b) % m; });
}

FiniteMagma dihedral_group(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "dihedral order must be positive");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(power_label("r", k));
  for (std::size_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "s" : "s" + power_label("r", k));
  const auto m = static_cast<std::int64_t>(n);
  return FiniteMagma::tabulate(std::move(labels), [m](Index x, Index y) {
    const std::int64_t a = x / m, b = x % m, c = y / m, d = y % m;
    const std::int64_t e = (((c ? -b : b) + d) % m + m) % m;
    return static_cast<Index>(((a + c) % 2) * m + e);
  });
}

Structure v_of(const FiniteMagma& s) {
  if (!associativity(s, Exec::serial)) throw Error(ErrorCode::invalid_argument, "V(S) needs an associative operation");
  auto labels = s.labels();
  std::string inf = "inf";
  while (s.find(inf)) inf += "'";
  labels.push_back(inf);
  const auto n = static_cast<Index>(s.size());
  auto add = FiniteMagma::tabulate(labels, [n](Index a, Index b) { return a == b ? a : n; });
  auto mul = FiniteMagma::tabulate(labels, [&s, n](Index a, Index b) { return (a == n || b == n) ? n : s(a, b); });
  AxiomOptions opts;
  opts.require_zero = false;
  return validate_semiring(std::move(add), std::move(mul), opts);
}

SparsePoly normalize(SparsePoly p, const Component& base) {
  std::sort(p.terms.begin(), p.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparsePoly out;
  for (auto& [e, c] : p.terms) {
    if (!out.terms.empty() && out.terms.back().first == e) {
      out.terms.back().second = base.add(out.terms.back().second, c);
    } else {
      out.terms.emplace_back(e, c);
    }
  }
  const mpq_class z = base.zero();
  std::erase_if(out.terms, [&](const auto& t) { return t.second == z; });
  return out;
}

SparsePoly poly_add(const SparsePoly& p, const SparsePoly& q, const Component& base) {
  SparsePoly all = p;
  all.terms.insert(all.terms.end(), q.terms.begin(), q.terms.end());
  return normalize(std::move(all), base);
}

SparsePoly poly_mul(const SparsePoly& p, const SparsePoly& q, const Component& base) {
  std::map<std::uint64_t, mpq_class> acc;
  for (const auto& [e1, c1] : p.terms) {
    for (const auto& [e2, c2] : q.terms) {
      const mpq_class prod = base.mul(c1, c2);
      auto [it, fresh] = acc.emplace(e1 + e2, prod);
      if (!fresh) it->second = base.add(it->second, prod);
    }
  }
  SparsePoly out;
  for (auto& [e, c] : acc) out.terms.emplace_back(e, c);
  return normalize(std::move(out), base);
}

SparsePoly truncate(const SparsePoly& p, std::uint64_t max_degree) {
  SparsePoly out;
  for (const auto& t : p.terms) {
    if (t.first <= max_degree) out.terms.push_back(t);
  }
  return out;
}

std::string format_poly(const SparsePoly& p, const Component& base) {
  if (p.terms.empty()) return base.format(base.zero());
  const auto one = base.one();
  std::string out;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = e == 0 ? "" : (e == 1 ? "x" : "x^" + std::to_string(e));
    std::string term;
    if (mono.empty()) {
      term = base.format(c);
    } else if (one && c == *one) {
      term = mono;
    } else if (base.is_tag() && one && c == -*one) {
      term = "-" + mono;
    } else {
      term = base.format(c) + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

GroupSemiring::GroupSemiring(std::shared_ptr<const Structure> coeff, FiniteMagma carrier, std::string name, Mode mode)
    : coeff_(std::move(coeff)), carrier_(std::move(carrier)), name_(std::move(name)) {
  auto e = identity_element(carrier_);
  if (!e) throw Error(ErrorCode::invalid_argument, "carrier needs an identity element");
  if (!associativity(carrier_, Exec::serial)) throw Error(ErrorCode::invalid_argument, "carrier is not associative");
  identity_ = *e;
  if (!coeff_->zero()) throw Error(ErrorCode::invalid_argument, "coefficients need an additive identity");
  czero_ = *coeff_->zero();
  cone_ = coeff_->one();
  if (mode == Mode::semiring) {
    if (!cone_) throw Error(ErrorCode::no_unit, "coefficient semiring has no unit");
    if (auto v = is_strict(*coeff_); !v) {
      throw Error(ErrorCode::not_strict, "coefficient semiring is not strict", v.witness);
    }
    if (!coeff_->has(Flag::commutative_mul)) {
      throw Error(ErrorCode::invalid_argument, "coefficient semiring is not commutative");
    }
  } else if (!coeff_->has(Flag::ring)) {
    throw Error(ErrorCode::invalid_argument, "group ring coefficients must form a ring");
  }
}

FormalSum GroupSemiring::add(const FormalSum& a, const FormalSum& b) const {
  FormalSum out = a;
  for (const auto& [g, c] : b.coeffs) {
    auto [it, fresh] = out.coeffs.emplace(g, c);
    if (!fresh) {
      it->second = coeff_->add(it->second, c);
      if (it->second == czero_) out.coeffs.erase(it);
    }
  }
  return out;
}

FormalSum GroupSemiring::mul(const FormalSum& a, const FormalSum& b) const {
  FormalSum out;
  for (const auto& [g, c] : a.coeffs) {
    for (const auto& [h, d] : b.coeffs) {
      const Index k = carrier_(g, h);
      const Index prod = coeff_->mul(c, d);
      auto [it, fresh] = out.coeffs.emplace(k, prod);
      if (!fresh) it->second = coeff_->add(it->second, prod);
    }
  }
  std::erase_if(out.coeffs, [&](const auto& t) { return t.second == czero_; });
  return out;
}

FormalSum GroupSemiring::lift(Index s) const {
  FormalSum out;
  if (s != czero_) out.coeffs[identity_] = s;
  return out;
}

FormalSum GroupSemiring::embed(Index g) const {
  if (!cone_) throw Error(ErrorCode::no_unit, "coefficients have no unit");
  FormalSum out;
  out.coeffs[g] = *cone_;
  return out;
}

FormalSum GroupSemiring::scale(Index s, const FormalSum& a) const {
  FormalSum out;
  for (const auto& [g, c] : a.coeffs) {
    const Index v = coeff_->mul(s, c);
    if (v != czero_) out.coeffs[g] = v;
  }
  return out;
}

bool GroupSemiring::in_carrier(const FormalSum& a) const {
  return cone_ && a.coeffs.size() == 1 && a.coeffs.begin()->second == *cone_;
}

std::string GroupSemiring::format(const FormalSum& a) const {
  if (a.coeffs.empty()) return coeff_->label(czero_);
  std::string out;
  for (const auto& [g, c] : a.coeffs) {
    std::string term;
    if (cone_ && c == *cone_) {
      term = carrier_.label(g);
    } else if (g == identity_) {
      term = coeff_->label(c);
    } else {
      term = coeff_->label(c) + "*" + carrier_.label(g);
    }
    out += (out.empty() ? "" : "+") + term;
  }
  return out;
}

FormalSum GroupSemiring::parse(std::string_view text) const {
  FormalSum out;
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  if (s.empty() || s == coeff_->label(czero_)) return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t plus = s.find('+', start);
    const std::string term = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    FormalSum t;
    if (const auto star = term.find('*'); star != std::string::npos) {
      auto c = coeff_->find(term.substr(0, star));
      auto g = carrier_.find(term.substr(star + 1));
      if (!c || !g) throw Error(ErrorCode::type_mismatch, "bad formal sum term '" + term + "'");
      if (*c != czero_) t.coeffs[*g] = *c;
    } else if (auto g = carrier_.find(term); g && cone_) {
      t.coeffs[*g] = *cone_;
    } else if (auto c = coeff_->find(term)) {
      t = lift(*c);
    } else {
      throw Error(ErrorCode::type_mismatch, "bad formal sum term '" + term + "'");
    }
    out = add(out, t);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

std::uint64_t GroupSemiring::order() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    if (n > (std::uint64_t{1} << 62) / coeff_->size()) return std::uint64_t{1} << 62;
    n *= coeff_->size();
  }
  return n;
}

FormalSum GroupSemiring::from_coordinates(std::span<const Index> coords) const {
  FormalSum out;
  for (Index g = 0; g < coords.size(); ++g) {
    if (coords[g] != czero_) out.coeffs[g] = coords[g];
  }
  return out;
}

Structure GroupSemiring::materialize(std::size_t cap) const {
  const std::uint64_t n = order();
  if (n > cap) {
    throw Error(ErrorCode::cap_exceeded, name_ + " has " + std::to_string(n) + " elements, above the cap " +
                                             std::to_string(cap));
  }
  Radix rx;
  rx.sizes.assign(carrier_.size(), coeff_->size());
  rx.total = n;
  std::vector<FormalSum> elems;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(from_coordinates(rx.digits(i)));
    labels.push_back(format(elems.back()));
  }
  auto index_of = [&](const FormalSum& f) {
    std::vector<Index> d(carrier_.size(), czero_);
    for (const auto& [g, c] : f.coeffs) d[g] = c;
    return static_cast<Index>(rx.index(d));
  };
  auto add_t = FiniteMagma::tabulate(labels, [&](Index a, Index b) { return index_of(add(elems[a], elems[b])); });
  auto mul_t = FiniteMagma::tabulate(labels, [&](Index a, Index b) { return index_of(mul(elems[a], elems[b])); });
  return validate_semiring(std::move(add_t), std::move(mul_t));
}

Characteristic GroupSemiring::characteristic() const { return srcert::characteristic(*coeff_); }

std::optional<std::pair<FormalSum, FormalSum>> GroupSemiring::zero_divisor_support2() const {
  std::vector<FormalSum> cand;
  const auto n = static_cast<Index>(carrier_.size());
  const auto k = static_cast<Index>(coeff_->size());
  for (Index g = 0; g < n; ++g) {
    for (Index c = 0; c < k; ++c) {
      if (c != czero_) cand.push_back(FormalSum{{{g, c}}});
    }
  }
  for (Index g = 0; g < n; ++g) {
    for (Index h = g + 1; h < n; ++h) {
      for (Index c = 0; c < k; ++c) {
        for (Index d = 0; d < k; ++d) {
          if (c != czero_ && d != czero_) cand.push_back(FormalSum{{{g, c}, {h, d}}});
        }
      }
    }
  }
  std::vector<std::size_t> partner(cand.size());
  auto hit = kernels::first_index(
      cand.size(),
      [&](std::size_t i) {
        for (std::size_t j = 0; j < cand.size(); ++j) {
          if (mul(cand[i], cand[j]).coeffs.empty()) {
            partner[i] = j;
            return true;
          }
        }
        return false;
      },
      default_exec());
  if (!hit) return std::nullopt;
  return std::make_pair(cand[*hit], cand[partner[*hit]]);
}

namespace {

// Element generating the carrier, preferring the label "g".
Index cyclic_generator(const FiniteMagma& c, Index identity) {
  const auto n = static_cast<Index>(c.size());
  auto generates = [&](Index x) {
    Index cur = x;
    for (Index k = 1; k < n; ++k) {
      if (cur == identity) return false;
      cur = c(cur, x);
    }
    return cur == identity;
  };
  if (auto g = c.find("g"); g && generates(*g)) return *g;
  for (Index x = 0; x < n; ++x) {
    if (generates(x)) return x;
  }
  throw Error(ErrorCode::invalid_argument, "carrier is not cyclic");
}

Index power(const FiniteMagma& c, Index identity, Index g, std::uint64_t e) {
  Index out = identity;
  for (std::uint64_t i = 0; i < e; ++i) out = c(out, g);
  return out;
}

}  // namespace

AtomFactors atom_factorization(const GroupSemiring& gs, std::uint64_t i) {
  const Structure& b = gs.coeff();
  FiniteLattice l;
  try {
    l = lattice_from_tables(b.add_table(), b.mul_table());
  } catch (const Error&) {
    throw Error(ErrorCode::not_boolean, "coefficients are not a lattice");
  }
  if (!is_boolean(l)) throw Error(ErrorCode::not_boolean, "coefficient lattice is not Boolean");
  const auto at = atoms(l);
  if (at.size() < 2) throw Error(ErrorCode::too_few_atoms, "Boolean coefficients need at least two atoms");
  const Index a = at.front();
  const Index ac = complements(l, a).front();
  const auto n = static_cast<std::uint64_t>(gs.carrier().size());
  const Index g = cyclic_generator(gs.carrier(), gs.identity());
  for (std::uint64_t step = 1; step <= n; ++step) {
    const std::uint64_t k = step % n;
    const std::uint64_t r = ((i % n) + n - k) % n;
    if (k == r) continue;
    AtomFactors f;
    const Index gk = power(gs.carrier(), gs.identity(), g, k);
    const Index gr = power(gs.carrier(), gs.identity(), g, r);
    f.alpha.coeffs = {{gk, a}, {gr, ac}};
    f.beta.coeffs = {{gr, a}, {gk, ac}};
    f.atom = a;
    f.complement = ac;
    f.k = k;
    f.r = r;
    return f;
  }
  throw Error(ErrorCode::invalid_argument, "no exponents k != r with k + r = i in this carrier");
}

bool verify_atom_factorization(const GroupSemiring& gs, const FormalSum& alpha, const FormalSum& beta,
                               std::uint64_t i) {
  const Index g = cyclic_generator(gs.carrier(), gs.identity());
  const Index gi = power(gs.carrier(), gs.identity(), g, i % gs.carrier().size());
  return !gs.in_carrier(alpha) && !gs.in_carrier(beta) && gs.mul(alpha, beta) == gs.embed(gi);
}

}  // namespace srcert

namespace srcert {

PolynomialSemiring::PolynomialSemiring(Component base, std::size_t max_degree)
    : SymbolicSemiring(std::vector<Component>(max_degree + 1, std::move(base))) {}

std::string PolynomialSemiring::describe() const {
  return base().name() + "[x] (degree <= " + std::to_string(max_degree()) + ")";
}

Element PolynomialSemiring::mul(const Element& a, const Element& b) const {
  const Component& c = base();
  Element out(dim(), c.zero());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; i + j < dim(); ++j) out[i + j] = c.add(out[i + j], c.mul(a[i], b[j]));
  }
  return out;
}

std::optional<Element> PolynomialSemiring::one() const {
  auto u = base().one();
  if (!u) return std::nullopt;
  Element out = zero();
  out[0] = *u;
  return out;
}

std::string PolynomialSemiring::format(const Element& x) const {
  SparsePoly p;
  for (std::size_t i = 0; i < dim(); ++i) p.terms.emplace_back(i, x[i]);
  return format_poly(normalize(std::move(p), base()), base());
}

}  // namespace srcert

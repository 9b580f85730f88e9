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

#include "srcert/report.hpp"

#include <cctype>

#include "srcert/certifier.hpp"
#include "srcert/error.hpp"
#include "srcert/substructures.hpp"

namespace srcert {

namespace {

bool is_subset_role(std::string_view role) { return !role.empty() && std::isupper(static_cast<unsigned char>(role[0])); }

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::type_mismatch, path + " must be " + what, {}, path);
}

Json labels_of(const Structure& s, const ElementSet& e) {
  Json out = Json::array();
  for (Index i : e.elements()) out.push_back(s.label(i));
  return out;
}

Json labels_of(const Structure& s, const std::vector<Index>& v) {
  Json out = Json::array();
  for (Index i : v) out.push_back(s.label(i));
  return out;
}

Json verdict_json(const Verdict& v, const std::vector<std::string>& labels) {
  Json out{{"holds", v.holds}};
  if (!v.holds) {
    Json w = Json::array();
    for (Index i : v.witness) w.push_back(labels.at(i));
    out["witness"] = w;
  }
  return out;
}

}  // namespace

std::string coord_descriptor(const CoordSet& c, const Component& comp) {
  switch (c.kind) {
    case CoordSet::Kind::zero: return "0";
    case CoordSet::Kind::all: return "all";
    case CoordSet::Kind::positive: return "positive";
    case CoordSet::Kind::multiples: return "multiples:" + format_rational(c.step);
    case CoordSet::Kind::values: {
      std::string out = "values:";
      for (std::size_t i = 0; i < c.values.size(); ++i) out += (i ? "|" : "") + comp.format(c.values[i]);
      return out;
    }
    case CoordSet::Kind::within: return "within:" + std::string(to_string(c.tag));
  }
  return "all";
}

CoordSet parse_coord_descriptor(std::string_view d, const Component& comp) {
  const std::string text(d);
  if (d == "0") return CoordSet::zero_only();
  if (d == "all") return CoordSet::everything();
  if (d == "positive") return CoordSet::positive_part();
  const auto colon = d.find(':');
  if (colon == std::string_view::npos) bad(text, "a coordinate descriptor");
  const auto head = d.substr(0, colon);
  const auto rest = d.substr(colon + 1);
  if (head == "multiples") {
    auto q = parse_rational(rest);
    if (!q || *q == 0) bad(text, "multiples:<nonzero rational>");
    return CoordSet::multiples_of(*q);
  }
  if (head == "within") {
    auto t = parse_number_tag(rest);
    if (!t) bad(text, "within:<number tag>");
    return CoordSet::inside(*t);
  }
  if (head == "values") {
    std::vector<mpq_class> vs;
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto bar = rest.find('|', start);
      const auto item = rest.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
      auto v = comp.parse(item);
      if (!v) bad(text, "values drawn from " + comp.name());
      vs.push_back(*v);
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    return CoordSet::listed(std::move(vs));
  }
  bad(text, "a coordinate descriptor");
}

Parts parse_witness(const Subject& s, const Json& j) {
  if (!j.is_object()) bad("witness", "an object keyed by role");
  Parts out;
  for (const auto& [role, v] : j.items()) {
    if (role == "side") {
      if (!v.is_string()) bad(role, "left, right or two_sided");
      const auto side = v.get<std::string>();
      if (side != "left" && side != "right" && side != "two_sided") bad(role, "left, right or two_sided");
      set_part(out, role, side);
      continue;
    }
    if (s.is_table()) {
      const Structure& st = s.structure();
      auto index = [&](const Json& e, const std::string& path) {
        if (!e.is_string()) bad(path, "an element label");
        auto i = st.find(e.get<std::string>());
        if (!i) bad(path, "a label of " + s.name());
        return *i;
      };
      if (is_subset_role(role)) {
        if (!v.is_array()) bad(role, "an array of labels");
        ElementSet set(st.size());
        for (std::size_t k = 0; k < v.size(); ++k) set.insert(index(v[k], role + "[" + std::to_string(k) + "]"));
        set_part(out, role, set);
      } else {
        set_part(out, role, s.element(index(v, role)));
      }
      continue;
    }
    const SymbolicSemiring& r = s.ring();
    if (is_subset_role(role)) {
      if (!v.is_object() || !v.contains("coords") || !v.at("coords").is_array()) bad(role, "{\"coords\":[..]}");
      const Json& cs = v.at("coords");
      if (cs.size() != r.dim()) bad(role, std::to_string(r.dim()) + " coordinate descriptors");
      SymbolicSubset sub;
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (!cs[k].is_string()) bad(role + ".coords[" + std::to_string(k) + "]", "a string");
        sub.coords.push_back(parse_coord_descriptor(cs[k].get<std::string>(), r.coords()[k]));
      }
      if (v.contains("or_zero")) {
        if (!v.at("or_zero").is_boolean()) bad(role + ".or_zero", "true or false");
        sub.or_zero = v.at("or_zero").get<bool>();
      }
      set_part(out, role, sub);
    } else {
      if (!v.is_array() || v.size() != r.dim()) bad(role, "an array of " + std::to_string(r.dim()) + " coordinates");
      Element x;
      for (std::size_t k = 0; k < v.size(); ++k) {
        const std::string path = role + "[" + std::to_string(k) + "]";
        std::string text = v[k].is_string() ? v[k].get<std::string>() : v[k].dump();
        auto q = r.coords()[k].parse(text);
        if (!q) bad(path, "a member of " + r.coords()[k].name());
        x.push_back(*q);
      }
      set_part(out, role, x);
    }
  }
  return out;
}

Json witness_json(const Subject& s, const Parts& parts) {
  Json out = Json::object();
  for (const auto& [role, p] : parts) {
    if (const auto* e = std::get_if<ElementSet>(&p)) {
      out[role] = labels_of(s.structure(), *e);
    } else if (const auto* sub = std::get_if<SymbolicSubset>(&p)) {
      Json cs = Json::array();
      for (std::size_t k = 0; k < sub->coords.size(); ++k) {
        cs.push_back(coord_descriptor(sub->coords[k], s.ring().coords()[k]));
      }
      out[role] = Json{{"coords", cs}, {"or_zero", sub->or_zero}};
    } else if (const auto* x = std::get_if<Element>(&p)) {
      if (s.is_table()) {
        out[role] = s.format(*x);
      } else {
        Json cs = Json::array();
        for (std::size_t k = 0; k < x->size(); ++k) cs.push_back(s.ring().coords()[k].format((*x)[k]));
        out[role] = cs;
      }
    } else {
      out[role] = std::get<std::string>(p);
    }
  }
  return out;
}

Json certificate_json(const Subject& s, const Certificate& c) {
  Json t = Json::array();
  for (const auto& cl : c.transcript) t.push_back({{"clause", cl.text}, {"pass", cl.pass}, {"sampled", cl.sampled}});
  return Json{{"property", to_string(c.property)},
              {"subject", c.subject},
              {"holds", c.holds},
              {"complete_search", c.complete_search},
              {"witness", witness_json(s, c.parts)},
              {"transcript", t},
              {"notes", c.notes}};
}

std::string certificate_summary(const Subject& s, const Certificate& c) {
  std::string out = std::string(to_string(c.property)) + " on " + c.subject + ": ";
  if (c.holds) {
    out += "holds";
  } else {
    out += c.complete_search ? "refuted by a complete search" : "not found (search incomplete)";
  }
  for (const auto& [role, p] : c.parts) {
    out += "\n  " + role + " = ";
    if (const auto* e = std::get_if<ElementSet>(&p)) {
      std::string m;
      for (Index i : e->elements()) m += (m.empty() ? "" : ", ") + s.structure().label(i);
      out += "{" + m + "}";
    } else if (const auto* sub = std::get_if<SymbolicSubset>(&p)) {
      out += sub->describe(s.ring());
    } else if (const auto* x = std::get_if<Element>(&p)) {
      out += s.format(*x);
    } else {
      out += std::get<std::string>(p);
    }
  }
  std::size_t failed = 0, sampled = 0;
  for (const auto& cl : c.transcript) {
    failed += !cl.pass;
    sampled += cl.sampled;
  }
  out += "\n  " + std::to_string(c.transcript.size()) + " clauses replayed, " + std::to_string(failed) + " failed";
  if (sampled) out += ", " + std::to_string(sampled) + " on samples";
  return out;
}

Json validate_report(const Built& b) {
  Json out{{"name", b.name}};
  if (b.lattice) {
    const auto d = is_distributive(*b.lattice);
    out["lattice"] = true;
    out["distributive"] = verdict_json(d, b.lattice->labels());
  }
  if (b.table) {
    const Structure& s = *b.table;
    out["ok"] = true;
    out["kind"] = "semiring";
    out["size"] = s.size();
    Json flags = Json::array();
    for (Flag f : s.flags().list()) flags.push_back(to_string(f));
    out["flags"] = flags;
    out["zero"] = s.zero() ? Json(s.label(*s.zero())) : Json();
    out["one"] = s.one() ? Json(s.label(*s.one())) : Json();
  } else if (b.symbolic) {
    const auto f = sampled_law_failure(*b.symbolic);
    out["ok"] = !f.has_value();
    out["kind"] = "symbolic semiring";
    out["describe"] = b.symbolic->describe();
    out["laws"] = "checked on samples";
    if (f) out["failed_law"] = *f;
  } else if (b.magma) {
    const FiniteMagma& m = *b.magma;
    const auto assoc = associativity(m);
    out["ok"] = assoc.holds;
    out["kind"] = is_group(m) ? "group" : "semigroup";
    out["size"] = m.size();
    out["associative"] = verdict_json(assoc, m.labels());
  } else {
    out["ok"] = false;
    out["kind"] = "lattice";
    out["failed_law"] = "distributivity (a lattice is a semiring only when distributive)";
  }
  return out;
}

Json classify_report(const Built& b, std::size_t cap) {
  Json out{{"name", b.name}};
  if (b.lattice) {
    const FiniteLattice& l = *b.lattice;
    out["lattice"] = {{"distributive", verdict_json(is_distributive(l), l.labels())},
                      {"modular", verdict_json(is_modular(l), l.labels())},
                      {"complemented", is_complemented(l)},
                      {"boolean", is_boolean(l)},
                      {"atoms", [&] {
                         Json a = Json::array();
                         for (Index i : atoms(l)) a.push_back(l.labels()[i]);
                         return a;
                       }()}};
  }
  if (b.table) {
    const Structure& s = *b.table;
    Json flags = Json::array();
    for (Flag f : s.flags().list()) flags.push_back(to_string(f));
    out["size"] = s.size();
    out["flags"] = flags;
    out["characteristic"] = characteristic(s).to_string();
    out["strict"] = verdict_json(is_strict(s), s.labels());
    out["semifield"] = verdict_json(is_semifield(s), s.labels());
    const auto ec = classify_elements(s);
    Json pairs = Json::array();
    for (const auto& [x, y] : ec.zero_divisor_pairs) pairs.push_back({s.label(x), s.label(y)});
    out["elements"] = {{"zero_divisors", labels_of(s, ec.zero_divisors)},
                       {"zero_divisor_pairs", pairs},
                       {"idempotents", labels_of(s, ec.idempotents)},
                       {"units", labels_of(s, ec.units)},
                       {"invertibles", labels_of(s, ec.invertibles)}};
    const auto closed = closed_subsets(s, cap);
    std::size_t subsemirings = 0, ideals = 0;
    for (const auto& c : closed.sets) {
      if (!relative_zero(s, c)) continue;
      ++subsemirings;
      if (s.zero() && c.contains(*s.zero()) && is_ideal(s, c, Side::two_sided)) ++ideals;
    }
    out["census"] = {{"closed_subsets", closed.sets.size()},
                     {"subsemirings", subsemirings},
                     {"two_sided_ideals", ideals},
                     {"complete", closed.complete}};
    if (auto w = s_semigroup_witness(s.mul_table())) {
      out["multiplicative_s_semigroup"] = labels_of(s, *w);
    } else {
      out["multiplicative_s_semigroup"] = nullptr;
    }
  } else if (b.symbolic) {
    const SymbolicSemiring& r = *b.symbolic;
    out["describe"] = r.describe();
    out["known_commutative"] = r.known_commutative();
    out["has_one"] = r.one().has_value();
    out["additive_group"] = r.group_like();
    const auto n = r.finite_size();
    out["size"] = n ? Json(*n) : Json("infinite");
    Json coords = Json::array();
    for (const auto& c : r.coords()) coords.push_back(c.name());
    out["coordinates"] = coords;
  } else if (b.magma) {
    const FiniteMagma& m = *b.magma;
    out["size"] = m.size();
    out["group"] = is_group(m);
    out["commutative"] = commutativity(m).holds;
    const auto subs = subgroups_of_semigroup(m);
    out["subgroups"] = subs.size();
    if (auto w = s_semigroup_witness(m)) {
      Json a = Json::array();
      for (Index i : w->elements()) a.push_back(m.label(i));
      out["s_semigroup"] = a;
    } else {
      out["s_semigroup"] = nullptr;
    }
  }
  return out;
}

}  // namespace srcert

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

#include "srcert/claims.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "srcert/certifier.hpp"
#include "srcert/constructions.hpp"
#include "srcert/error.hpp"
#include "srcert/report.hpp"
#include "srcert/semivector.hpp"
#include "srcert/substructures.hpp"

namespace srcert {

namespace {

// What a check observed; compared against the record's expectations.
struct Outcome {
  std::optional<bool> holds;
  std::optional<bool> complete;
  Json value;
  Json witness;
};

[[noreturn]] void bad_record(const std::string& what) { throw Error(ErrorCode::invalid_argument, what); }

const Json& arg(const Json& doc, const char* name) {
  if (!doc.contains("args") || !doc.at("args").contains(name)) bad_record(std::string("missing args.") + name);
  return doc.at("args").at(name);
}

Json label_list(const std::vector<std::string>& labels, const std::vector<Index>& v) {
  Json out = Json::array();
  for (Index i : v) out.push_back(labels.at(i));
  return out;
}

Outcome from_verdict(const Verdict& v, const std::vector<std::string>& labels) {
  Outcome o;
  o.holds = v.holds;
  o.value = v.holds ? Json() : label_list(labels, v.witness);
  return o;
}

const FiniteLattice& lattice_of(const Built& b) {
  if (!b.lattice) bad_record(b.name + " is not a lattice");
  return *b.lattice;
}

const Structure& table_of(const Built& b) {
  if (!b.table) bad_record(b.name + " is not a finite semiring");
  return *b.table;
}

Parts parts_of(const Subject& s, const Json& doc) {
  Json merged = Json::object();
  for (const char* k : {"inputs", "witness"}) {
    if (doc.contains(k)) merged.update(doc.at(k));
  }
  return parse_witness(s, merged);
}

// ---- semivector helpers ----

Element tuple_of(const TupleSpace& sp, const Json& j) {
  if (!j.is_array() || j.size() != sp.dim()) bad_record("vector of wrong length");
  Element v;
  for (const auto& x : j) {
    auto q = parse_rational(x.is_string() ? x.get<std::string>() : x.dump());
    if (!q) bad_record("vector coordinate " + x.dump());
    v.push_back(*q);
  }
  if (!sp.contains(v)) bad_record("vector outside " + sp.describe());
  return v;
}

std::vector<Element> tuples_of(const TupleSpace& sp, const Json& j) {
  std::vector<Element> out;
  for (const auto& x : j) out.push_back(tuple_of(sp, x));
  return out;
}

Index vector_of(const FiniteSpace& sp, const Json& j) {
  auto i = sp.find(j.get<std::string>());
  if (!i) bad_record("unknown vector " + j.dump());
  return *i;
}

std::vector<Index> vectors_of(const FiniteSpace& sp, const Json& j) {
  std::vector<Index> out;
  for (const auto& x : j) out.push_back(vector_of(sp, x));
  return out;
}

SymbolicSubset subset_of(const TupleSpace& sp, const Json& j) {
  Subject s = Subject::symbolic(sp.ring_ptr(), sp.describe());
  Parts p = parse_witness(s, Json{{"W", j}});
  return std::get<SymbolicSubset>(p.front().second);
}

NumberTag tag_arg(const Json& doc, const char* name) {
  auto t = parse_number_tag(arg(doc, name).get<std::string>());
  if (!t) bad_record(std::string("args.") + name + " must be a number tag");
  return *t;
}

Outcome space_check(const std::string& check, const Json& doc) {
  const Space space = build_space(doc.at("space"));
  Outcome o;
  if (const auto* fs = std::get_if<FiniteSpace>(&space)) {
    const FiniteSpace& sp = *fs;
    if (check == "space-axioms") {
      const auto a = check_space_axioms(sp);
      o.holds = a.verdict.holds;
      o.value = a.failed;
    } else if (check == "independent") {
      const auto d = is_independent(sp, vectors_of(sp, arg(doc, "vectors")));
      o.holds = d.independent;
      o.complete = d.complete;
    } else if (check == "in-span") {
      const auto gens = vectors_of(sp, arg(doc, "vectors"));
      o.holds = span(sp, ElementSet::from(sp.size(), gens)).contains(vector_of(sp, arg(doc, "target")));
    } else if (check == "bases") {
      const auto census = bases(sp);
      o.holds = census.unique;
      o.complete = census.complete;
      Json bs = Json::array();
      for (const auto& b : census.bases) {
        Json one = Json::array();
        for (Index v : b) one.push_back(sp.label(v));
        bs.push_back(one);
      }
      o.value = bs;
    } else if (check == "representation-count") {
      o.value = representation_count(sp, vectors_of(sp, arg(doc, "basis")), vector_of(sp, arg(doc, "target")));
    } else if (check == "s-semivector") {
      const auto w = s_semivector_witness(sp);
      o.holds = w.has_value();
      if (w) {
        Json m = Json::array();
        for (Index v : w->elements()) m.push_back(sp.label(v));
        o.value = m;
      }
    } else {
      bad_record("check " + check + " does not apply to finite spaces");
    }
    return o;
  }
  const TupleSpace& sp = std::get<TupleSpace>(space);
  auto as_json = [&](const std::vector<mpq_class>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(format_rational(c));
    return out;
  };
  if (check == "in-span") {
    const auto m = in_span(sp, tuples_of(sp, arg(doc, "vectors")), tuple_of(sp, arg(doc, "target")));
    o.holds = m.member;
    o.complete = m.complete;
    if (m.member) o.value = as_json(m.coefficients);
  } else if (check == "independent") {
    const auto d = is_independent(sp, tuples_of(sp, arg(doc, "vectors")));
    o.holds = d.independent;
    o.complete = d.complete;
  } else if (check == "standard-basis") {
    const auto b = standard_basis(sp);
    o.holds = b.unique;
    o.value = b.dimension ? Json(*b.dimension) : Json();
    o.complete = std::all_of(b.indecomposable.begin(), b.indecomposable.end(), [](const Clause& c) { return c.pass; });
  } else if (check == "scalar-choices") {
    Json out = Json::array();
    for (NumberTag t : valid_scalar_choices(sp.factors())) out.push_back(to_string(t));
    o.value = out;
  } else if (check == "s-semivector") {
    const auto w = s_semivector_witness(sp);
    o.holds = w.has_value();
    if (w) o.value = w->describe(sp.ring());
  } else if (check == "s-subsemivector" || check == "s-pseudo-semivector" || check == "s-anti-semivector") {
    const SymbolicSubset w = subset_of(sp, arg(doc, "W"));
    SpaceCertificate c = check == "s-subsemivector" ? certify_s_subsemivector(sp, w)
                         : check == "s-pseudo-semivector"
                             ? certify_s_pseudo_semivector(sp, w, tag_arg(doc, "semifield"))
                             : certify_s_anti_semivector(sp, w, tag_arg(doc, "semifield"));
    o.holds = c.holds;
    if (c.witness) o.value = c.witness->describe(sp.ring());
  } else if (check == "s-linear-map") {
    // T(v) = M v with M given row by row over the target space
    const auto& rows = arg(doc, "matrix");
    const Space target = build_space(arg(doc, "target"));
    const auto* w = std::get_if<TupleSpace>(&target);
    if (!w) bad_record("target must be a tuple space");
    std::vector<std::vector<mpq_class>> m;
    for (const auto& row : rows) {
      std::vector<mpq_class> r;
      for (const auto& x : row) r.push_back(*parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
      if (r.size() != sp.dim()) bad_record("matrix rows must match the source dimension");
      m.push_back(std::move(r));
    }
    if (m.size() != w->dim()) bad_record("matrix must have one row per target coordinate");
    TupleMap t = [m](const Element& v) {
      Element out;
      for (const auto& row : m) {
        mpq_class acc = 0;
        for (std::size_t k = 0; k < row.size(); ++k) acc += row[k] * v[k];
        out.push_back(acc);
      }
      return out;
    };
    const auto r = check_s_linear_map(t, sp, *w, subset_of(sp, arg(doc, "P")), subset_of(*w, arg(doc, "C")));
    o.holds = r.verdict.holds;
  } else {
    bad_record("check " + check + " does not apply to tuple spaces");
  }
  return o;
}

// ---- structure checks ----

Outcome structure_check(const std::string& check, const Json& doc) {
  const Built b = build(spec_from_json(doc.at("subject")));
  Outcome o;
  if (check == "certify") {
    const Subject s = subject_of(b);
    auto p = parse_property(doc.at("property").get<std::string>());
    if (!p) bad_record("unknown property");
    SearchOptions opts;
    if (doc.contains("args") && doc.at("args").contains("cap")) opts.cap = doc.at("args").at("cap").get<std::size_t>();
    const Certificate c = certify(s, *p, parts_of(s, doc), opts);
    // an incomplete negative answer claims nothing, so there is nothing to verify
    if ((c.holds || c.complete_search) && !verify(s, c, opts.cap).ok) {
      bad_record("certificate failed independent verification");
    }
    o.holds = c.holds;
    o.complete = c.complete_search;
    o.witness = witness_json(s, c.parts);
  } else if (check == "find-all") {
    const Subject s = subject_of(b);
    auto p = parse_property(doc.at("property").get<std::string>());
    if (!p) bad_record("unknown property");
    SearchOptions opts;
    opts.limit = doc.contains("args") ? doc.at("args").value("limit", std::size_t{4096}) : 4096;
    const auto all = find_all(s, *p, opts);
    o.holds = !all.empty();
    o.value = Json::array();
    for (const auto& c : all) {
      if (!verify(s, c).ok) bad_record("listed certificate failed verification");
      o.value.push_back(witness_json(s, c.parts));
    }
  } else if (check == "distributive") {
    o = from_verdict(is_distributive(lattice_of(b)), lattice_of(b).labels());
  } else if (check == "modular") {
    o = from_verdict(is_modular(lattice_of(b)), lattice_of(b).labels());
  } else if (check == "boolean") {
    o.holds = is_boolean(lattice_of(b));
  } else if (check == "complemented") {
    o.holds = is_complemented(lattice_of(b));
  } else if (check == "lattice") {
    // the poset (covers form) has every inf and sup
    o.holds = b.lattice.has_value();
  } else if (check == "hasse") {
    const auto h = hasse(lattice_of(b));
    o.value = Json::array();
    for (const auto& [lo, hi] : h.covers) o.value.push_back({h.nodes[lo], h.nodes[hi]});
  } else if (check == "semiring") {
    o.holds = static_cast<bool>(b.table);
    if (!b.table && b.lattice) o.value = label_list(b.lattice->labels(), is_distributive(*b.lattice).witness);
  } else if (check == "characteristic") {
    o.value = characteristic(table_of(b)).to_string();
  } else if (check == "strict") {
    o = from_verdict(is_strict(table_of(b)), table_of(b).labels());
  } else if (check == "zero-divisor-free") {
    o = from_verdict(zero_divisor_free(table_of(b)), table_of(b).labels());
  } else if (check == "commutative") {
    o = from_verdict(commutativity(table_of(b).mul_table()), table_of(b).labels());
  } else if (check == "semifield") {
    o = from_verdict(is_semifield(table_of(b)), table_of(b).labels());
  } else if (check == "prime-semifield") {
    o = from_verdict(is_prime_semifield(table_of(b)), table_of(b).labels());
  } else if (check == "c-simple") {
    o = from_verdict(is_congruence_simple(table_of(b)), table_of(b).labels());
  } else if (check == "flag") {
    const auto name = arg(doc, "flag").get<std::string>();
    const Structure& s = table_of(b);
    bool found = false;
    for (unsigned f = 0; f < kFlagCount; ++f) {
      if (to_string(static_cast<Flag>(f)) == name) {
        o.holds = s.has(static_cast<Flag>(f));
        found = true;
      }
    }
    if (!found) bad_record("unknown flag " + name);
  } else if (check == "order") {
    if (b.table) {
      o.value = b.table->size();
    } else if (b.magma) {
      o.value = b.magma->size();
    } else if (b.symbolic) {
      const auto n = b.symbolic->finite_size();
      o.value = n ? Json(*n) : Json("infinite");
    } else {
      o.value = lattice_of(b).size();
    }
  } else if (check == "elements") {
    const Structure& s = table_of(b);
    const auto ec = classify_elements(s);
    o.value = {{"zero_divisors", label_list(s.labels(), ec.zero_divisors)},
               {"idempotents", label_list(s.labels(), ec.idempotents)},
               {"units", label_list(s.labels(), ec.units)},
               {"invertibles", label_list(s.labels(), ec.invertibles)}};
  } else if (check == "s-semigroup" || check == "subgroups") {
    const FiniteMagma& m = b.magma ? *b.magma : table_of(b).mul_table();
    if (check == "s-semigroup") {
      const auto w = s_semigroup_witness(m);
      o.holds = w.has_value();
      if (w) o.value = label_list(m.labels(), w->elements());
    } else {
      o.value = Json::array();
      for (const auto& g : subgroups_of_semigroup(m)) o.value.push_back(label_list(m.labels(), g.elements()));
    }
  } else if (check == "subsemiring") {
    const Structure& s = table_of(b);
    Parts p = parse_witness(subject_of(b), Json{{"P", arg(doc, "P")}});
    o.holds = is_subsemiring(s, std::get<ElementSet>(p.front().second));
  } else if (check == "ideal") {
    // args.P, args.side (default two_sided)
    const Structure& s = table_of(b);
    Parts p = parse_witness(subject_of(b), Json{{"P", arg(doc, "P")}});
    const std::string side = doc.at("args").value("side", "two_sided");
    const Side sd = side == "left" ? Side::left : side == "right" ? Side::right : Side::two_sided;
    o.holds = is_ideal(s, std::get<ElementSet>(p.front().second), sd);
  } else if (check == "atom-factorization") {
    const Structure& coeff = table_of(b);
    const auto n = arg(doc, "n").get<std::size_t>();
    GroupSemiring gs(std::make_shared<const Structure>(coeff), cyclic_group(n), b.name + "G");
    const auto i = arg(doc, "i").get<std::uint64_t>();
    const AtomFactors f = atom_factorization(gs, i);
    const bool outside = !gs.in_carrier(f.alpha) && !gs.in_carrier(f.beta);
    o.holds = outside && verify_atom_factorization(gs, f.alpha, f.beta, i) &&
              gs.mul(f.alpha, f.beta) == gs.embed(static_cast<Index>(i % n));
    o.value = {gs.format(f.alpha), gs.format(f.beta), gs.format(gs.mul(f.alpha, f.beta))};
  } else if (check == "product") {
    // args.a * args.b for a table subject, by label
    const Structure& s = table_of(b);
    auto a = s.find(arg(doc, "a").get<std::string>());
    auto c = s.find(arg(doc, "b").get<std::string>());
    if (!a || !c) bad_record("unknown element label");
    o.value = s.label(s.mul(*a, *c));
  } else {
    bad_record("unknown check " + check);
  }
  return o;
}

bool contains_match(const Json& list, const Json& want) {
  for (const auto& item : list) {
    if (!want.is_object()) {
      if (item == want) return true;
      continue;
    }
    bool all = true;
    for (const auto& [k, v] : want.items()) all = all && item.contains(k) && item.at(k) == v;
    if (all) return true;
  }
  return false;
}

std::string compare(const Outcome& o, const Json& expect) {
  std::ostringstream why;
  if (expect.contains("holds") && (!o.holds || *o.holds != expect.at("holds").get<bool>())) {
    why << "holds=" << (o.holds ? (*o.holds ? "true" : "false") : "n/a") << " ";
  }
  if (expect.contains("complete") && (!o.complete || *o.complete != expect.at("complete").get<bool>())) {
    why << "complete=" << (o.complete ? (*o.complete ? "true" : "false") : "n/a") << " ";
  }
  if (expect.contains("value") && o.value != expect.at("value")) why << "value=" << o.value.dump() << " ";
  if (expect.contains("witness")) {
    for (const auto& [k, v] : expect.at("witness").items()) {
      if (!o.witness.contains(k) || o.witness.at(k) != v) {
        why << "witness." << k << "=" << (o.witness.contains(k) ? o.witness.at(k).dump() : "absent") << " ";
      }
    }
  }
  if (expect.contains("contains") && !contains_match(o.value, expect.at("contains"))) why << "missing listed item ";
  return why.str();
}

}  // namespace

std::vector<ClaimRecord> parse_claims(const Json& array) {
  if (!array.is_array()) bad_record("a claims file holds an array of records");
  std::vector<ClaimRecord> out;
  for (const auto& r : array) {
    if (!r.is_object() || !r.contains("id") || !r.at("id").is_string()) bad_record("record without an id");
    for (const char* k : {"check", "expect"}) {
      if (!r.contains(k)) bad_record(r.at("id").get<std::string>() + ": missing " + k);
    }
    out.push_back({r.at("id").get<std::string>(), r});
  }
  return out;
}

std::vector<ClaimRecord> load_claims(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<ClaimRecord> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream text;
    text << in.rdbuf();
    Json j;
    try {
      j = Json::parse(text.str());
    } catch (const Json::parse_error& e) {
      bad_record(f.filename().string() + ": " + e.what());
    }
    auto part = parse_claims(j);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

ClaimResult run_claim(const ClaimRecord& r) {
  ClaimResult res;
  res.id = r.id;
  const auto start = std::chrono::steady_clock::now();
  const Json& expect = r.doc.at("expect");
  try {
    const auto check = r.doc.at("check").get<std::string>();
    const Outcome o = r.doc.contains("space") ? space_check(check, r.doc) : structure_check(check, r.doc);
    if (expect.contains("error")) {
      res.detail = "expected error " + expect.at("error").get<std::string>();
    } else {
      res.detail = compare(o, expect);
      res.pass = res.detail.empty();
      if (res.pass) res.detail = check;
    }
  } catch (const Error& e) {
    if (expect.contains("error") && expect.at("error").get<std::string>() == to_string(e.code())) {
      res.pass = true;
      res.detail = std::string("error ") + std::string(to_string(e.code()));
    } else {
      res.detail = e.what();
    }
  } catch (const std::exception& e) {
    res.detail = e.what();
  }
  res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

bool id_matches(std::string_view glob, std::string_view id) {
  // iterative wildcard match with backtracking on the last '*'
  std::size_t g = 0, i = 0, star = std::string_view::npos, mark = 0;
  while (i < id.size()) {
    if (g < glob.size() && (glob[g] == '?' || glob[g] == id[i])) {
      ++g;
      ++i;
    } else if (g < glob.size() && glob[g] == '*') {
      star = g++;
      mark = i;
    } else if (star != std::string_view::npos) {
      g = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (g < glob.size() && glob[g] == '*') ++g;
  return g == glob.size();
}

std::vector<ClaimResult> run_claims(const std::vector<ClaimRecord>& records, std::size_t workers) {
  std::vector<ClaimResult> out(records.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < records.size(); k = next++) out[k] = run_claim(records[k]);
  };
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(records.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
  return out;
}

std::string ledger_text(const std::vector<ClaimResult>& results, bool timing) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : results) {
    failed += !r.pass;
    out << (r.pass ? "PASS " : "FAIL ") << r.id;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.1fms", r.millis);
      out << buf;
    }
    out << "  " << r.detail << "\n";
  }
  out << results.size() - failed << "/" << results.size() << " claims pass\n";
  return out.str();
}

std::optional<std::pair<Subject, Certificate>> positive_certificate(const ClaimRecord& r) {
  const Json& d = r.doc;
  if (d.value("check", "") != "certify" || !d.at("expect").value("holds", false)) return std::nullopt;
  const Built b = build(spec_from_json(d.at("subject")));
  Subject s = subject_of(b);
  Certificate c = certify(s, *parse_property(d.at("property").get<std::string>()), parts_of(s, d));
  if (!c.holds) return std::nullopt;
  return std::make_pair(std::move(s), std::move(c));
}

}  // namespace srcert

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

#include "srcert/spec.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "srcert/constructions.hpp"
#include "srcert/error.hpp"

namespace srcert {

namespace {

enum class FieldType { count, boolean, labels, table, pairs, spec, specs, tags, tag_or_spec, tags_or_spec };

struct Field {
  const char* name;
  FieldType type;
  bool required;
};

const std::map<std::string, std::vector<Field>, std::less<>>& kinds() {
  using F = FieldType;
  static const std::map<std::string, std::vector<Field>, std::less<>> k = {
      {"chain_lattice", {{"n", F::count, true}}},
      {"power_set", {{"k", F::count, true}}},
      {"lattice_tables",
       {{"labels", F::labels, true}, {"join", F::table, false}, {"meet", F::table, false}, {"covers", F::pairs, false}}},
      {"table",
       {{"labels", F::labels, true}, {"add", F::table, true}, {"mul", F::table, true}, {"require_zero", F::boolean, false}}},
      {"zmod", {{"n", F::count, true}}},
      {"symmetric_group", {{"n", F::count, true}}},
      {"full_transformation", {{"n", F::count, true}}},
      {"cyclic_group", {{"n", F::count, true}}},
      {"dihedral", {{"n", F::count, true}}},
      {"direct_product", {{"factors", F::specs, true}}},
      {"mixed_product", {{"factors", F::specs, true}}},
      {"matrix", {{"base", F::spec, true}, {"dim", F::count, true}}},
      {"polynomial", {{"base", F::spec, true}, {"max_degree", F::count, true}}},
      {"group_semiring", {{"coeff", F::spec, true}, {"carrier", F::spec, true}}},
      {"semigroup_semiring", {{"coeff", F::spec, true}, {"carrier", F::spec, true}}},
      {"group_ring", {{"coeff", F::spec, true}, {"carrier", F::spec, true}}},
      {"v_of", {{"carrier", F::spec, true}}},
      {"archetype", {{"tags", F::tags, true}}},
  };
  return k;
}

[[noreturn]] void mismatch(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::type_mismatch, path + " must be " + what, {}, path);
}

std::string join_path(const std::string& base, const std::string& field) {
  return base.empty() ? field : base + "." + field;
}

bool is_count(const Json& j) { return j.is_number_integer() && j.get<long long>() >= 0; }

void check_entry(const Json& e, const std::string& path) {
  if (!e.is_string() && !is_count(e)) mismatch(path, "a label or an index");
}

void validate(const Json& j, const std::string& path);

void check_field(const Json& v, FieldType t, const std::string& path) {
  switch (t) {
    case FieldType::count:
      if (!is_count(v)) mismatch(path, "a nonnegative integer");
      break;
    case FieldType::boolean:
      if (!v.is_boolean()) mismatch(path, "true or false");
      break;
    case FieldType::labels:
    case FieldType::tags:
      if (!v.is_array()) mismatch(path, "an array of strings");
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string()) mismatch(path + "[" + std::to_string(i) + "]", "a string");
      }
      break;
    case FieldType::table:
      if (!v.is_array()) mismatch(path, "an array of rows");
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string row = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array()) mismatch(row, "an array");
        for (std::size_t k = 0; k < v[i].size(); ++k) check_entry(v[i][k], row + "[" + std::to_string(k) + "]");
      }
      break;
    case FieldType::pairs:
      if (!v.is_array()) mismatch(path, "an array of pairs");
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != 2 || !v[i][0].is_string() || !v[i][1].is_string()) {
          mismatch(p, "a pair of labels");
        }
      }
      break;
    case FieldType::spec:
      validate(v, path);
      break;
    case FieldType::specs:
      if (!v.is_array() || v.empty()) mismatch(path, "a nonempty array of specs");
      for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], path + "[" + std::to_string(i) + "]");
      break;
    case FieldType::tag_or_spec:
      if (!v.is_string()) validate(v, path);
      break;
    case FieldType::tags_or_spec:
      if (v.is_array()) {
        check_field(v, FieldType::tags, path);
      } else {
        validate(v, path);
      }
      break;
  }
}

void validate(const Json& j, const std::string& path) {
  if (!j.is_object()) mismatch(path.empty() ? "spec" : path, "an object");
  const auto kit = j.find("kind");
  if (kit == j.end()) throw Error(ErrorCode::missing_param, "missing field kind", {}, join_path(path, "kind"));
  if (!kit->is_string()) mismatch(join_path(path, "kind"), "a string");
  const auto& name = kit->get_ref<const std::string&>();
  const auto k = kinds().find(name);
  if (k == kinds().end()) throw Error(ErrorCode::unknown_kind, "unknown kind " + name, {}, join_path(path, "kind"));
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") continue;
    if (key == "name") {
      if (!value.is_string()) mismatch(join_path(path, key), "a string");
      continue;
    }
    const auto f = std::find_if(k->second.begin(), k->second.end(), [&](const Field& x) { return key == x.name; });
    if (f == k->second.end()) {
      throw Error(ErrorCode::invalid_argument, "unknown field " + key + " for kind " + name, {}, join_path(path, key));
    }
    check_field(value, f->type, join_path(path, key));
  }
  for (const auto& f : k->second) {
    if (f.required && !j.contains(f.name)) {
      throw Error(ErrorCode::missing_param, "missing field " + std::string(f.name), {}, join_path(path, f.name));
    }
  }
  if (name == "lattice_tables") {
    const bool tables = j.contains("join") || j.contains("meet");
    if (tables && !(j.contains("join") && j.contains("meet"))) {
      throw Error(ErrorCode::missing_param, "join and meet come together", {},
                  join_path(path, j.contains("join") ? "meet" : "join"));
    }
    if (tables == j.contains("covers")) {
      throw Error(ErrorCode::missing_param, "lattice_tables needs join and meet, or covers", {},
                  join_path(path, "covers"));
    }
  }
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + " column " + std::to_string(col);
}

std::size_t count(const Json& j, const char* f) { return j.at(f).get<std::size_t>(); }

FiniteMagma table_from(const Json& rows, const std::vector<std::string>& labels, const std::string& path) {
  const std::size_t n = labels.size();
  if (rows.size() != n) mismatch(path, "a " + std::to_string(n) + " x " + std::to_string(n) + " table");
  std::vector<Index> t;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) mismatch(path + "[" + std::to_string(i) + "]", "a row of " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      const Json& e = rows[i][k];
      const std::string at = path + "[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      if (e.is_string()) {
        const auto it = std::find(labels.begin(), labels.end(), e.get<std::string>());
        if (it == labels.end()) mismatch(at, "one of the labels");
        t.push_back(static_cast<Index>(it - labels.begin()));
      } else {
        const auto v = e.get<std::size_t>();
        if (v >= n) mismatch(at, "an index below " + std::to_string(n));
        t.push_back(static_cast<Index>(v));
      }
    }
  }
  return FiniteMagma(labels, std::move(t));
}

std::string default_name(const Json& j) {
  if (j.contains("name")) return j.at("name").get<std::string>();
  const auto& k = j.at("kind").get_ref<const std::string&>();
  auto sub = [&](const char* f) { return default_name(j.at(f)); };
  if (k == "chain_lattice") return "C" + std::to_string(count(j, "n"));
  if (k == "power_set") return "P(" + std::to_string(count(j, "k")) + ")";
  if (k == "zmod") return "Z" + std::to_string(count(j, "n"));
  if (k == "symmetric_group") return "S" + std::to_string(count(j, "n"));
  if (k == "full_transformation") return "S(" + std::to_string(count(j, "n")) + ")";
  if (k == "cyclic_group") return "G" + std::to_string(count(j, "n"));
  if (k == "dihedral") return "D" + std::to_string(count(j, "n"));
  if (k == "matrix") return "M" + std::to_string(count(j, "dim")) + "(" + sub("base") + ")";
  if (k == "polynomial") return sub("base") + "[x]";
  if (k == "group_semiring" || k == "semigroup_semiring" || k == "group_ring") return sub("coeff") + sub("carrier");
  if (k == "v_of") return "V(" + sub("carrier") + ")";
  if (k == "direct_product" || k == "mixed_product") {
    std::string out;
    for (const auto& f : j.at("factors")) out += (out.empty() ? "" : " x ") + default_name(f);
    return out;
  }
  if (k == "archetype") {
    std::string out;
    for (const auto& t : j.at("tags")) out += (out.empty() ? "" : " x ") + t.get<std::string>();
    return out;
  }
  return k;
}

std::optional<std::size_t> zn_tag(const std::string& t) {
  if (t.size() < 2 || t[0] != 'Z' || t == "Z0") return std::nullopt;
  std::size_t n = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] < '0' || t[i] > '9') return std::nullopt;
    n = n * 10 + static_cast<std::size_t>(t[i] - '0');
  }
  if (n < 1) return std::nullopt;
  return n;
}

Component component_of(const Built& b, const std::string& path) {
  if (b.table) return Component::table(b.table, b.name);
  if (b.symbolic) {
    const auto* t = dynamic_cast<const TupleSemiring*>(b.symbolic.get());
    if (t && t->dim() == 1) return t->coords()[0];
  }
  mismatch(path, "a finite semiring or a single archetype tag");
}

std::uint64_t power_saturating(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > (std::uint64_t{1} << 62) / std::max<std::uint64_t>(base, 1)) return std::uint64_t{1} << 62;
    out *= base;
  }
  return out;
}

Built build_at(const Json& j, const std::string& path, const BuildOptions& opts);

const FiniteMagma& magma_of(const Built& b, const std::string& path) {
  if (!b.magma) mismatch(path, "a group or semigroup spec");
  return *b.magma;
}

Built build_at(const Json& j, const std::string& path, const BuildOptions& opts) {
  Built out;
  out.name = default_name(j);
  const auto& k = j.at("kind").get_ref<const std::string&>();
  auto child = [&](const char* f) { return build_at(j.at(f), join_path(path, f), opts); };
  auto table = [&](Structure s) { out.table = std::make_shared<const Structure>(std::move(s)); };
  auto magma = [&](FiniteMagma m) { out.magma = std::make_shared<const FiniteMagma>(std::move(m)); };
  auto lattice_table = [&]() {
    try {
      table(lattice_semiring(*out.lattice));
    } catch (const Error& e) {
      // non-distributive lattices stay lattices only
      if (e.code() != ErrorCode::axiom_violation) throw;
    }
  };

  if (k == "chain_lattice") {
    out.lattice = lattices::chain(count(j, "n"));
    lattice_table();
  } else if (k == "power_set") {
    out.lattice = lattices::power_set(count(j, "k"));
    lattice_table();
  } else if (k == "lattice_tables") {
    const auto labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("covers")) {
      out.lattice = as_lattice(poset_from_leq(labels, j.at("covers").get<std::vector<std::pair<std::string, std::string>>>()));
    } else {
      out.lattice = lattice_from_tables(table_from(j.at("join"), labels, join_path(path, "join")),
                                        table_from(j.at("meet"), labels, join_path(path, "meet")));
    }
    lattice_table();
  } else if (k == "table") {
    const auto labels = j.at("labels").get<std::vector<std::string>>();
    AxiomOptions ao;
    if (j.contains("require_zero")) ao.require_zero = j.at("require_zero").get<bool>();
    table(validate_semiring(table_from(j.at("add"), labels, join_path(path, "add")),
                            table_from(j.at("mul"), labels, join_path(path, "mul")), ao));
  } else if (k == "zmod") {
    table(zmod_ring(count(j, "n")));
  } else if (k == "symmetric_group") {
    magma(symmetric_group(count(j, "n")));
  } else if (k == "full_transformation") {
    magma(full_transformation(count(j, "n")));
  } else if (k == "cyclic_group") {
    magma(cyclic_group(count(j, "n")));
  } else if (k == "dihedral") {
    magma(dihedral_group(count(j, "n")));
  } else if (k == "direct_product" || k == "mixed_product") {
    std::vector<Built> parts;
    const auto& arr = j.at("factors");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      parts.push_back(build_at(arr[i], join_path(path, "factors") + "[" + std::to_string(i) + "]", opts));
    }
    if (std::all_of(parts.begin(), parts.end(), [](const Built& b) { return static_cast<bool>(b.table); })) {
      std::vector<Structure> fs;
      for (const auto& b : parts) fs.push_back(*b.table);
      table(k == "direct_product" ? direct_product(fs) : mixed_direct_product(fs));
    } else {
      // archetype factors: exact tuples
      std::vector<Component> cs;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        cs.push_back(component_of(parts[i], join_path(path, "factors") + "[" + std::to_string(i) + "]"));
      }
      out.symbolic = std::make_shared<TupleSemiring>(std::move(cs));
    }
  } else if (k == "matrix") {
    const Built base = child("base");
    const std::size_t dim = count(j, "dim");
    if (base.table && power_saturating(base.table->size(), dim * dim) <= opts.materialize_cap) {
      table(matrix_semiring(*base.table, dim, opts.materialize_cap));
    } else {
      out.symbolic = std::make_shared<MatrixSemiring>(component_of(base, join_path(path, "base")), dim);
    }
  } else if (k == "polynomial") {
    const Built base = child("base");
    const std::size_t d = count(j, "max_degree");
    auto poly = std::make_shared<PolynomialSemiring>(component_of(base, join_path(path, "base")), d);
    if (base.table && power_saturating(base.table->size(), d + 1) <= opts.materialize_cap) {
      table(materialize(*poly, opts.materialize_cap));
    } else {
      out.symbolic = std::move(poly);
      out.sampled_laws = true;
    }
  } else if (k == "group_semiring" || k == "semigroup_semiring" || k == "group_ring") {
    const Built coeff = child("coeff");
    const Built carrier = child("carrier");
    const FiniteMagma& g = magma_of(carrier, join_path(path, "carrier"));
    if (k != "semigroup_semiring" && !is_group(g)) {
      throw Error(ErrorCode::invalid_argument, carrier.name + " is not a group", {}, join_path(path, "carrier"));
    }
    if (coeff.table) {
      const auto mode = k == "group_ring" ? GroupSemiring::Mode::ring : GroupSemiring::Mode::semiring;
      GroupSemiring gs(coeff.table, g, out.name, mode);
      if (gs.order() <= opts.materialize_cap) {
        table(gs.materialize(opts.materialize_cap));
      } else {
        out.symbolic = std::make_shared<GroupAlgebra>(Component::table(coeff.table, coeff.name), g, carrier.name);
      }
    } else {
      const Component c = component_of(coeff, join_path(path, "coeff"));
      if (k == "group_ring" && !tag_is_group(c.number_tag())) {
        throw Error(ErrorCode::invalid_argument, "group ring coefficients must form a ring", {}, join_path(path, "coeff"));
      }
      out.symbolic = std::make_shared<GroupAlgebra>(c, g, carrier.name);
    }
  } else if (k == "v_of") {
    const Built carrier = child("carrier");
    table(v_of(magma_of(carrier, join_path(path, "carrier"))));
  } else if (k == "archetype") {
    std::vector<Component> cs;
    bool finite = true;
    std::uint64_t order = 1;
    const auto& tags = j.at("tags");
    if (tags.empty()) mismatch(join_path(path, "tags"), "a nonempty array of tags");
    for (std::size_t i = 0; i < tags.size(); ++i) {
      const auto t = tags[i].get<std::string>();
      if (auto nt = parse_number_tag(t)) {
        cs.push_back(Component::tag(*nt));
        finite = false;
      } else if (auto n = zn_tag(t)) {
        cs.push_back(Component::table(std::make_shared<const Structure>(zmod_ring(*n)), t));
        order = std::min<std::uint64_t>(order * *n, std::uint64_t{1} << 40);
      } else {
        mismatch(join_path(path, "tags") + "[" + std::to_string(i) + "]", "one of Z0, Q0, R0, Z, Q, R or Zn");
      }
    }
    auto tuple = std::make_shared<TupleSemiring>(std::move(cs));
    if (finite && order <= opts.materialize_cap) {
      table(materialize(*tuple, opts.materialize_cap));
    } else {
      out.symbolic = std::move(tuple);
    }
  }
  return out;
}

}  // namespace

const std::string& StructureSpec::kind() const { return doc.at("kind").get_ref<const std::string&>(); }
std::string StructureSpec::name() const { return default_name(doc); }

StructureSpec spec_from_json(const Json& j) {
  validate(j, "");
  return StructureSpec{j};
}

StructureSpec parse_spec(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::invalid_argument, line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  return spec_from_json(j);
}

std::string serialize(const StructureSpec& s) { return s.doc.dump(); }

Built build(const StructureSpec& s, const BuildOptions& opts) { return build_at(s.doc, "", opts); }

Subject subject_of(const Built& b) {
  if (b.table) return Subject::table(b.table, b.name);
  if (b.symbolic) return Subject::symbolic(b.symbolic, b.name);
  throw Error(ErrorCode::type_mismatch, b.name + " is not a semiring");
}

Space build_space(const Json& j) {
  if (!j.is_object()) mismatch("space", "an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "scalars" && key != "vectors" && key != "name") {
      throw Error(ErrorCode::invalid_argument, "unknown field " + key, {}, key);
    }
  }
  if (!j.contains("scalars")) throw Error(ErrorCode::missing_param, "missing field scalars", {}, "scalars");
  if (!j.contains("vectors")) throw Error(ErrorCode::missing_param, "missing field vectors", {}, "vectors");
  check_field(j.at("scalars"), FieldType::tag_or_spec, "scalars");
  check_field(j.at("vectors"), FieldType::tags_or_spec, "vectors");
  const Json& v = j.at("vectors");
  const Json& s = j.at("scalars");
  if (v.is_array()) {
    if (!s.is_string()) mismatch("scalars", "a number tag for tuple vectors");
    const auto st = parse_number_tag(s.get<std::string>());
    if (!st) mismatch("scalars", "one of Z0, Q0, R0, Z, Q, R");
    std::vector<NumberTag> fs;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto t = parse_number_tag(v[i].get<std::string>());
      if (!t) mismatch("vectors[" + std::to_string(i) + "]", "one of Z0, Q0, R0, Z, Q, R");
      fs.push_back(*t);
    }
    return TupleSpace(std::move(fs), *st);
  }
  const Built lat = build(spec_from_json(v));
  if (!lat.lattice) mismatch("vectors", "a lattice spec or a tag list");
  const bool c2 = s.is_object() && s.value("kind", "") == "chain_lattice" && s.value("n", 0) == 2;
  if (!c2) mismatch("scalars", "the chain lattice C2 for lattice vectors");
  return lattice_space(*lat.lattice);
}

std::optional<std::string> sampled_law_failure(const SymbolicSemiring& s) {
  const auto pts = whole(s).samples(s, 12);
  const Element z = s.zero();
  for (const auto& a : pts) {
    if (s.add(a, z) != a) return "0 is an additive identity";
    for (const auto& b : pts) {
      if (s.add(a, b) != s.add(b, a)) return "addition is commutative";
      for (const auto& c : pts) {
        if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) return "addition is associative";
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) return "multiplication is associative";
        if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))) return "left distributivity";
        if (s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c))) return "right distributivity";
      }
    }
  }
  return std::nullopt;
}

}  // namespace srcert

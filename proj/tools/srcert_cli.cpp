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

// srcert: command-line driver.
//
//   srcert validate <spec>
//   srcert classify <spec>
//   srcert certify <spec> --property <name> [--witness <file>] [--cap N]
//   srcert hasse <spec> [-o out.dot]
//   srcert claims [--filter glob] [--workers N] [--dir path]
//
// Exit codes: 0 ok, 1 property false with a complete search, 2 incomplete
// search, 3 input error. SRCERT_CAP sets the default subset cap.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "srcert/certifier.hpp"
#include "srcert/claims.hpp"
#include "srcert/error.hpp"
#include "srcert/report.hpp"
#include "srcert/spec.hpp"

using namespace srcert;

namespace {

constexpr int kInputError = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Built load(const std::string& path) { return build(parse_spec(slurp(path))); }

// Order of a lattice-derived semiring from its join (a <= b iff a + b = b).
FinitePoset derived_order(const Structure& s) {
  std::vector<std::pair<Index, Index>> le;
  for (Index a = 0; a < s.size(); ++a) {
    for (Index b = 0; b < s.size(); ++b) {
      if (s.add(a, b) == b) le.emplace_back(a, b);
    }
  }
  return poset_from_leq(s.labels(), le);
}

int cmd_validate(const std::string& path) {
  const Json r = validate_report(load(path));
  std::cout << r.dump(2) << "\n";
  return r.value("ok", false) ? 0 : 1;
}

int cmd_classify(const std::string& path, std::size_t cap) {
  std::cout << classify_report(load(path), cap).dump(2) << "\n";
  return 0;
}

int cmd_certify(const std::string& path, const std::string& property, const std::string& witness, std::size_t cap) {
  const auto p = parse_property(property);
  if (!p) {
    std::string names;
    for (Property q : all_properties()) names += " " + std::string(to_string(q));
    throw Error(ErrorCode::invalid_argument, "unknown property " + property + "; one of" + names);
  }
  const Built b = load(path);
  const Subject s = subject_of(b);
  Parts given;
  if (!witness.empty()) {
    Json j;
    try {
      j = Json::parse(slurp(witness));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::invalid_argument, witness + ": " + e.what());
    }
    given = parse_witness(s, j);
  }
  SearchOptions opts;
  opts.cap = cap;
  const Certificate c = certify(s, *p, given, opts);
  std::cout << certificate_json(s, c).dump(2) << "\n";
  std::cerr << certificate_summary(s, c) << "\n";
  return exit_code(c);
}

int cmd_hasse(const std::string& path, const std::string& out) {
  const Built b = load(path);
  HasseDiagram h;
  if (b.lattice) {
    h = hasse(*b.lattice);
  } else if (b.table && b.table->has(Flag::lattice_derived)) {
    h = hasse(derived_order(*b.table));
  } else {
    throw Error(ErrorCode::type_mismatch, b.name + " has no lattice order");
  }
  const std::string dot = to_dot(h, b.name);
  if (out.empty()) {
    std::cout << dot;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error(ErrorCode::invalid_argument, "cannot write " + out);
    f << dot;
  }
  return 0;
}

int cmd_claims(const std::string& dir, const std::string& filter, std::size_t workers) {
  auto records = load_claims(dir);
  std::erase_if(records, [&](const ClaimRecord& r) { return !id_matches(filter, r.id); });
  const auto results = run_claims(records, workers);
  std::cout << ledger_text(results, true);
  const bool all = std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.pass; });
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semiring and semifield certifier"};
  app.require_subcommand(1);

  std::string spec, property, witness, out, filter = "*", dir = std::string(SRCERT_DATA_DIR) + "/claims";
  std::size_t cap = default_cap();
  std::size_t workers = 1;

  auto* validate = app.add_subcommand("validate", "check the axioms of a structure spec");
  validate->add_option("spec", spec, "spec file, or - for stdin")->required();
  auto* classify = app.add_subcommand("classify", "flags, characteristic, element classes, substructure census");
  classify->add_option("spec", spec)->required();
  classify->add_option("--cap", cap, "subset cap");
  auto* certify = app.add_subcommand("certify", "certify a property and print the certificate");
  certify->add_option("spec", spec)->required();
  certify->add_option("--property", property)->required();
  certify->add_option("--witness", witness, "witness file (inputs and, optionally, a full witness)");
  certify->add_option("--cap", cap, "subset cap");
  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram as DOT");
  hasse_cmd->add_option("spec", spec)->required();
  hasse_cmd->add_option("-o,--output", out);
  auto* claims = app.add_subcommand("claims", "replay the claims corpus");
  claims->add_option("--filter", filter, "id glob");
  claims->add_option("--workers", workers)->check(CLI::PositiveNumber);
  claims->add_option("--dir", dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*validate) return cmd_validate(spec);
    if (*classify) return cmd_classify(spec, cap);
    if (*certify) return cmd_certify(spec, property, witness, cap);
    if (*hasse_cmd) return cmd_hasse(spec, out);
    if (*claims) return cmd_claims(dir, filter, workers);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!e.detail().empty()) std::cerr << " [" << e.detail() << "]";
    std::cerr << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

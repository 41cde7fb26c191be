// Copyright 2026 The quasialg Authors
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

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quasialg/io.hpp"
#include "quasialg/quasialg.hpp"

namespace quasialg::cli {

enum ExitCode : int { kOk = 0, kExpectFailed = 1, kInputError = 2 };

struct Options {
  std::string algebra;
  long paley = 0;
  int delta = 0;
  bool h4sym = false;
  std::string cochain;
  std::string format = "json";
  std::string out;
  std::vector<std::string> expect;
  std::string variant = "M1";
  bool quasicommutative = false;
  std::string action;
  std::size_t level = 10;
  std::size_t reps = 1;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

inline Quasialgebra select_algebra(const Options& o) {
  int selectors = !o.algebra.empty() + (o.paley != 0) + (o.delta != 0) + o.h4sym + !o.cochain.empty();
  if (selectors != 1)
    throw InputError("give exactly one of --algebra, --paley, --delta, --h4sym, --cochain");
  if (!o.algebra.empty()) return algebra_by_name(o.algebra);
  if (o.paley != 0) return paley_algebra(o.paley);
  if (o.delta != 0) return delta_algebra(o.delta);
  if (o.h4sym) return h4_algebra();
  return Quasialgebra("cochain:" + o.cochain, parse_cochain_file(o.cochain));
}

/// Property flags and witnesses. Every flag is a boolean except "simple",
/// which is one of "certified", "not_simple", "unknown".
inline json property_report(const Quasialgebra& A) {
  json flags, witnesses, notes = json::object();
  BasicFlags basic = classify_basic(A);
  flags["assoc"] = basic.associative;
  flags["comm"] = basic.commutative;
  flags["alter"] = basic.altercommutative;
  flags["braided_commutative"] = basic.braided_commutative_verified;
  if (!basic.associative) witnesses["assoc"] = basic.nonassociative_witness;
  if (!basic.commutative) witnesses["comm"] = basic.noncommutative_witness;

  CheckResult cocycle = check_cocycle(A.phi());
  CheckResult bichar = check_bicharacter(A.braiding(), A.phi());
  flags["cocycle"] = cocycle.holds;
  flags["bicharacter"] = bichar.holds;

  AlternativeReport alt = check_alternative(A);
  flags["alternative"] = alt.holds();
  flags["alternative_methods_agree"] = alt.methods_agree();
  if (!alt.phi_form.holds) witnesses["alternative"] = witness_to_json(alt.phi_form);

  Involution canonical = canonical_involution(A);
  CheckResult strong = check_strong_involution(A, canonical);
  flags["strong_involution"] = strong.holds;
  if (!strong.holds) witnesses["strong_involution"] = witness_to_json(strong);

  if (A.group().is_elementary_two()) {
    CompositionReport comp = check_composition_euclidean(A);
    flags["composition"] = comp.holds();
    if (!comp.conditions.holds) witnesses["composition"] = witness_to_json(comp.conditions);
  } else {
    flags["composition"] = false;
    notes["composition"] = "Euclidean test needs G = (Z_2)^n";
  }
  if (strong.holds) {
    CompositionReport gen = check_composition_general(A, canonical);
    flags["composition_general"] = gen.holds();
    if (!gen.conditions.holds) witnesses["composition_general"] = witness_to_json(gen.conditions);
  } else {
    flags["composition_general"] = false;
    notes["composition_general"] = "canonical involution is not strong";
  }

  SimplicityReport simple = simplicity_report(A);
  flags["simple"] = to_string(simple.verdict);
  if (simple.verdict == SimplicityVerdict::not_simple) {
    json basis = json::array();
    for (const auto& row : simple.ideal.basis()) {
      json r = json::array();
      for (const auto& c : row) r.push_back(to_string(c));
      basis.push_back(std::move(r));
    }
    witnesses["simple"] = {{"ideal_basis", std::move(basis)}};
  }

  json report;
  report["algebra"] = A.name();
  report["dim"] = A.dim();
  report["group"] = A.group().orders();
  report["flags"] = std::move(flags);
  report["witnesses"] = witnesses.is_null() ? json::object() : std::move(witnesses);
  report["notes"] = std::move(notes);
  return report;
}

/// Each expectation names a flag, optionally prefixed with "not_". Boolean
/// flags must be true; "simple" means certified. Returns the unmet ones.
inline std::vector<std::string> unmet_expectations(const json& flags, const std::vector<std::string>& expect) {
  std::vector<std::string> unmet;
  for (const auto& e : expect) {
    bool negate = e.rfind("not_", 0) == 0 && !flags.contains(e);
    std::string key = negate ? e.substr(4) : e;
    if (!flags.contains(key)) throw InputError("unknown property '" + e + "'");
    const json& v = flags[key];
    bool value = v.is_boolean() ? v.get<bool>() : v == "certified";
    if (value == negate) unmet.push_back(e);
  }
  return unmet;
}

inline std::string text_report(const json& report) {
  std::ostringstream ss;
  ss << "algebra " << report["algebra"].get<std::string>() << "\n";
  for (const auto& [k, v] : report["flags"].items()) ss << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& [k, v] : report["witnesses"].items()) ss << "  witness " << k << ": " << v.dump() << "\n";
  return ss.str();
}

inline std::string format_json(const json& j) { return j.dump(2) + "\n"; }

inline json phi_json(const Quasialgebra& A) {
  std::size_t n = A.dim();
  json table = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    json plane = json::array();
    for (std::size_t y = 0; y < n; ++y) {
      json row = json::array();
      for (std::size_t z = 0; z < n; ++z) row.push_back(to_string(A.phi()(x, y, z)));
      plane.push_back(std::move(row));
    }
    table.push_back(std::move(plane));
  }
  return {{"algebra", A.name()}, {"dim", n}, {"phi", std::move(table)}, {"trivial", A.phi().is_trivial()}};
}

inline std::string phi_text(const Quasialgebra& A) {
  std::ostringstream ss;
  std::size_t n = A.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) ss << (z ? " " : "") << to_display(A.phi()(x, y, z));
      ss << "\n";
    }
  return ss.str();
}

inline json table_json(const Quasialgebra& A) {
  std::size_t n = A.dim();
  json rows = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < n; ++y) row.push_back({{"coeff", to_string(A.cochain()(x, y))}, {"basis", A.group().mul(x, y)}});
    rows.push_back(std::move(row));
  }
  return {{"algebra", A.name()}, {"dim", n}, {"products", std::move(rows)}};
}

inline json rep_check(const Quasialgebra& A, const Options& o) {
  ActionTable act = o.action.empty() ? regular_action(A) : parse_action_file(o.action);
  json flags, witnesses = json::object();
  CheckResult action = check_action(A, act);
  flags["action"] = action.holds;
  if (!action.holds) {
    witnesses["action"] = witness_to_json(action);
    flags["algebra_map"] = false;
    flags["algebra_map_ordinary"] = false;
  } else {
    auto rho = rho_from_action(A, act);
    CheckResult mn = check_algebra_map(A, rho, A.phi(), act.space, MatrixProduct::mnphi);
    CheckResult plain = check_algebra_map(A, rho, A.phi(), act.space, MatrixProduct::ordinary);
    flags["algebra_map"] = mn.holds;
    flags["algebra_map_ordinary"] = plain.holds;
    if (!mn.holds) witnesses["algebra_map"] = witness_to_json(mn);
    if (!plain.holds) witnesses["algebra_map_ordinary"] = witness_to_json(plain);
    ActionTable back = action_from_rho(A, rho, act.space);
    flags["round_trip"] = back.v == act.v;
  }
  if (act.space_dim() <= 16) {
    CheckResult qa = check_mnphi_quasiassociative(A.phi(), act.space);
    flags["mnphi_quasiassociative"] = qa.holds;
    if (!qa.holds) witnesses["mnphi_quasiassociative"] = witness_to_json(qa);
  }
  bool coev = true;
  for (std::size_t i = 0; i < act.space_dim(); ++i) coev = coev && coev_factor(A.phi(), act.space, i) == 1;
  flags["coev_trivial"] = coev;
  return {{"algebra", A.name()}, {"space_dim", act.space_dim()}, {"flags", std::move(flags)}, {"witnesses", std::move(witnesses)}};
}

inline std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  std::vector<Rational> v(n);
  for (auto& c : v) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return v;
}

/// FNV-1a over the canonical text of every coefficient.
inline std::uint64_t checksum(const std::vector<Rational>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& c : v) {
    for (char ch : to_string(c) + ";") {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
  }
  return h;
}

inline json bench(const Options& o) {
  if (o.level > kMaxSignLevel) throw ResourceError("bench level limited to 13");
  if (o.reps == 0) throw InputError("--reps must be positive");
  CompiledSign cs = compile_sign(o.level);
  std::mt19937_64 rng(o.seed);
  auto a = random_vector(rng, cs.dim());
  auto b = random_vector(rng, cs.dim());
  std::vector<Rational> r;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < o.reps; ++k) r = fast_multiply(cs, a, b, o.workers);
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  std::ostringstream hex;
  hex << std::hex << checksum(r);
  return {{"level", o.level},  {"dim", cs.dim()},       {"reps", o.reps},
          {"seed", o.seed},    {"workers", o.workers}, {"seconds", secs},
          {"seconds_per_rep", secs / static_cast<double>(o.reps)}, {"checksum", hex.str()}};
}

inline void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f || !(f << text)) throw InputError("cannot write '" + o.out + "'");
}

/// Runs one command line. Exit codes: 0 success, 1 an --expect property
/// did not hold, 2 bad input (usage, parse, file, precondition, resource).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded quasialgebra toolkit"};
  app.require_subcommand(1);
  Options o;

  auto selectors = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "named algebra (real, complex, quaternion, octonion, sedenion, onion:<dim>, h4sym, paley:<p>, delta:<n>, z3-table-i, z3-table-ii, z5-excess)");
    sub->add_option("--paley", o.paley, "Paley algebra for a prime p = 3 mod 4 with p + 1 a power of two");
    sub->add_option("--delta", o.delta, "F(x,y) = (-1)^delta(x,y) on Z_n");
    sub->add_flag("--h4sym", o.h4sym, "symmetric 4x4 Hadamard cochain on Z2xZ2");
    sub->add_option("--cochain", o.cochain, "cochain JSON file");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* build = app.add_subcommand("build", "write the cochain as JSON");
  selectors(build);
  auto* props = app.add_subcommand("props", "structural property report");
  selectors(props);
  props->add_option("--expect", o.expect, "property that must hold; prefix not_ to require failure");
  auto* table = app.add_subcommand("table", "multiplication table of basis elements");
  selectors(table);
  auto* phi = app.add_subcommand("phi", "associator table phi(x,y,z)");
  selectors(phi);
  auto* relations = app.add_subcommand("relations", "comeasuring relation presentation");
  selectors(relations);
  relations->add_option("--variant", o.variant, "M1, M0, MD or MD0")->check(CLI::IsMember({"M1", "M0", "MD", "MD0"}));
  relations->add_flag("--quasicommutative", o.quasicommutative, "add quasicommutativity relations");
  auto* rep = app.add_subcommand("rep-check", "quasi-matrix representation checks");
  selectors(rep);
  rep->add_option("--action", o.action, "action table JSON (default: regular action)");
  rep->add_option("--expect", o.expect, "property that must hold; prefix not_ to require failure");
  auto* bench_cmd = app.add_subcommand("bench", "time the dense onion product");
  bench_cmd->add_option("--level", o.level, "tower level (dimension 2^level)");
  bench_cmd->add_option("--reps", o.reps, "repetitions");
  bench_cmd->add_option("--seed", o.seed, "seed for the random operands");
  bench_cmd->add_option("--workers", o.workers, "worker threads");
  bench_cmd->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*bench_cmd) {
      json r = bench(o);
      std::ostringstream ss;
      ss << "level " << r["level"].get<std::size_t>() << " dim " << r["dim"].get<std::size_t>() << " reps "
         << o.reps << " seconds " << r["seconds"].get<double>() << " checksum " << r["checksum"].get<std::string>() << "\n";
      write_output(o, ss.str(), out);
      return kOk;
    }
    Quasialgebra A = select_algebra(o);
    bool text = o.format == "text";
    if (*build) {
      write_output(o, format_json(cochain_to_json(A.cochain())), out);
      return kOk;
    }
    if (*table) {
      write_output(o, text ? render_table(A) : format_json(table_json(A)), out);
      return kOk;
    }
    if (*phi) {
      write_output(o, text ? phi_text(A) : format_json(phi_json(A)), out);
      return kOk;
    }
    if (*relations) {
      StructureConstants sc = structure_constants_of(A);
      RelationSet rels = generate_relations(sc, parse_variant(o.variant), o.quasicommutative);
      json j = {{"algebra", A.name()},
                {"variant", o.variant},
                {"quasicommutative", o.quasicommutative},
                {"count", rels.size()},
                {"relations", relations_to_json(rels)}};
      write_output(o, text ? rels.to_text() : format_json(j), out);
      return kOk;
    }
    json report = *props ? property_report(A) : rep_check(A, o);
    write_output(o, text ? text_report(report) : format_json(report), out);
    auto unmet = unmet_expectations(report["flags"], o.expect);
    for (const auto& u : unmet) err << "expectation failed: " << u << "\n";
    return unmet.empty() ? kOk : kExpectFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace quasialg::cli

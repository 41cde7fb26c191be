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

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "quasialg/cochain.hpp"
#include "quasialg/comeasuring.hpp"
#include "quasialg/error.hpp"
#include "quasialg/group.hpp"
#include "quasialg/hadamard.hpp"
#include "quasialg/quasimatrix.hpp"
#include "quasialg/rational.hpp"

namespace quasialg {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return to_string(r); }

namespace detail {

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational as \"num/den\" or an integer");
}

inline std::size_t index_from_json(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound)
    throw InputError(std::string(what) + " index out of range");
  return static_cast<std::size_t>(j.get<long long>());
}

inline GroupSpec group_from_json(const json& j) {
  if (!j.contains("orders") || !j["orders"].is_array()) throw InputError("missing \"orders\" array");
  std::vector<int> orders;
  for (const auto& o : j["orders"]) {
    if (!o.is_number_integer()) throw InputError("group orders must be integers");
    orders.push_back(o.get<int>());
  }
  return GroupSpec(orders);
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// {"orders": [...], "entries": [[x, y, "num/den"], ...]}; entries equal to
/// 1 are omitted.
inline json cochain_to_json(const Cochain& F) {
  json j;
  j["orders"] = F.group().orders();
  json entries = json::array();
  std::size_t n = F.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (F(x, y) != 1) entries.push_back(json::array({x, y, to_string(F(x, y))}));
  j["entries"] = std::move(entries);
  return j;
}

/// Accepts "entries" ([x, y, value]) or "sign_exponents" ([x, y, bit]);
/// omitted pairs are 1. The result must be normalized and nonzero.
inline Cochain cochain_from_json(const json& j) {
  if (!j.is_object()) throw InputError("cochain file must hold a JSON object");
  GroupSpec g = detail::group_from_json(j);
  std::size_t n = g.size();
  std::vector<Rational> values(n * n, Rational(1));
  bool any = false;
  if (j.contains("entries")) {
    any = true;
    if (!j["entries"].is_array()) throw InputError("\"entries\" must be an array");
    for (const auto& e : j["entries"]) {
      if (!e.is_array() || e.size() != 3) throw InputError("each entry must be [x, y, value]");
      std::size_t x = detail::index_from_json(e[0], n, "x");
      std::size_t y = detail::index_from_json(e[1], n, "y");
      values[x * n + y] = detail::rational_from_json(e[2]);
    }
  }
  if (j.contains("sign_exponents")) {
    if (any) throw InputError("give either \"entries\" or \"sign_exponents\", not both");
    if (!j["sign_exponents"].is_array()) throw InputError("\"sign_exponents\" must be an array");
    for (const auto& e : j["sign_exponents"]) {
      if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer()) throw InputError("each sign exponent must be [x, y, bit]");
      std::size_t x = detail::index_from_json(e[0], n, "x");
      std::size_t y = detail::index_from_json(e[1], n, "y");
      long bit = e[2].get<long>();
      if (bit != 0 && bit != 1) throw InputError("sign exponent must be 0 or 1");
      values[x * n + y] = bit ? -1 : 1;
    }
  }
  return Cochain::from_values(std::move(g), std::move(values));
}

inline Cochain parse_cochain_file(const std::string& path) {
  return cochain_from_json(detail::parse_json_text(read_file(path)));
}

inline json sign_matrix_to_json(const SignMatrix& H) { return {{"n", H.order()}, {"rows", H.rows()}}; }

inline json witness_to_json(const CheckResult& r) {
  if (r.holds) return nullptr;
  return {{"tuple", r.witness}, {"detail", r.detail}};
}

inline json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [w, c] : p.terms()) {
    json word = json::array();
    for (const auto& g : w) word.push_back(json::array({g.row, g.col}));
    terms.push_back({{"coeff", to_string(c)}, {"word", std::move(word)}});
  }
  return {{"terms", std::move(terms)}, {"text", to_string(p)}};
}

inline json relations_to_json(const RelationSet& rels) {
  json arr = json::array();
  for (const auto& p : rels) arr.push_back(polynomial_to_json(p));
  return arr;
}

/// {"algebra": ..., "orders": [...], "algebra_degrees": [...],
///  "space_degrees": [...], "v": [[[...]]]} with v[alpha][i][j].
inline json action_table_to_json(const ActionTable& act) {
  json v = json::array();
  for (std::size_t a = 0; a < act.algebra_dim(); ++a) {
    json rows = json::array();
    for (std::size_t i = 0; i < act.space_dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < act.space_dim(); ++j) row.push_back(to_string(act(a, i, j)));
      rows.push_back(std::move(row));
    }
    v.push_back(std::move(rows));
  }
  return {{"algebra", act.algebra},
          {"orders", act.space.group.orders()},
          {"algebra_degrees", act.algebra_degrees},
          {"space_degrees", act.space.degree},
          {"v", std::move(v)}};
}

inline ActionTable action_table_from_json(const json& j) {
  if (!j.is_object()) throw InputError("action table must be a JSON object");
  GroupSpec g = detail::group_from_json(j);
  ActionTable act;
  act.algebra = j.value("algebra", std::string{});
  act.space.group = g;
  if (!j.contains("space_degrees") || !j["space_degrees"].is_array()) throw InputError("missing \"space_degrees\"");
  for (const auto& d : j["space_degrees"]) act.space.degree.push_back(detail::index_from_json(d, g.size(), "degree"));
  if (j.contains("algebra_degrees")) {
    for (const auto& d : j["algebra_degrees"]) act.algebra_degrees.push_back(detail::index_from_json(d, g.size(), "degree"));
  } else {
    for (std::size_t a = 0; a < g.size(); ++a) act.algebra_degrees.push_back(a);
  }
  std::size_t m = act.algebra_dim(), n = act.space_dim();
  if (!j.contains("v") || !j["v"].is_array() || j["v"].size() != m) throw InputError("\"v\" must have one block per algebra basis element");
  act.v.assign(m * n * n, Rational(0));
  for (std::size_t a = 0; a < m; ++a) {
    const auto& block = j["v"][a];
    if (!block.is_array() || block.size() != n) throw InputError("\"v\" block has the wrong number of rows");
    for (std::size_t i = 0; i < n; ++i) {
      if (!block[i].is_array() || block[i].size() != n) throw InputError("\"v\" row has the wrong length");
      for (std::size_t k = 0; k < n; ++k) act.at(a, i, k) = detail::rational_from_json(block[i][k]);
    }
  }
  return act;
}

inline ActionTable parse_action_file(const std::string& path) {
  return action_table_from_json(detail::parse_json_text(read_file(path)));
}

}  // namespace quasialg

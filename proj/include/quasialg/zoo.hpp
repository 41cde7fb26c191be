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

#include <string>
#include <vector>

#include "quasialg/cayley_dickson.hpp"
#include "quasialg/error.hpp"
#include "quasialg/hadamard.hpp"
#include "quasialg/quasialgebra.hpp"

namespace quasialg {

namespace detail {

inline long parse_suffix(const std::string& name, const std::string& prefix) {
  std::string digits = name.substr(prefix.size());
  if (digits.empty() || digits.size() > 9) throw InputError("bad numeric suffix in '" + name + "'");
  for (char c : digits)
    if (c < '0' || c > '9') throw InputError("bad numeric suffix in '" + name + "'");
  return std::stol(digits);
}

}  // namespace detail

/// Named algebras: tower levels ("real" .. "sedenion", "onion:<dim>"),
/// "h4sym", "paley:<p>", "delta:<n>", "z3-table-i", "z3-table-ii",
/// "z5-excess".
inline Quasialgebra algebra_by_name(const std::string& name) {
  if (int level = tower_level_from_name(name); level >= 0) return cd_algebra(static_cast<std::size_t>(level));
  if (name == "h4sym") return h4_algebra();
  if (name == "z3-table-i") return z3_table_i();
  if (name == "z3-table-ii") return z3_table_ii();
  if (name == "z5-excess") return z5_excess();
  if (name.rfind("paley:", 0) == 0) return paley_algebra(detail::parse_suffix(name, "paley:"));
  if (name.rfind("delta:", 0) == 0) {
    long n = detail::parse_suffix(name, "delta:");
    if (n > 4096) throw ResourceError("delta algebra too large");
    return delta_algebra(static_cast<int>(n));
  }
  throw InputError("unknown algebra '" + name + "'");
}

/// Every fixed algebra the library constructs, smallest first.
inline std::vector<Quasialgebra> algebra_zoo() {
  std::vector<Quasialgebra> zoo = cd_tower(4);
  for (const char* name : {"h4sym", "paley:3", "paley:7", "z3-table-i", "z3-table-ii", "z5-excess", "delta:4",
                           "delta:5", "delta:6"})
    zoo.push_back(algebra_by_name(name));
  return zoo;
}

}  // namespace quasialg

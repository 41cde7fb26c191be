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

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "quasialg/error.hpp"

namespace quasialg {

/// Exact arbitrary-precision rational. Always kept in canonical (reduced) form.
using Rational = mpq_class;

inline bool is_sign(const Rational& r) { return r == 1 || r == -1; }

/// Canonical "num/den" text; the denominator is always written, so 2 is "2/1".
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Short human form used in tables and relation text: "2", "-1/3".
inline std::string to_display(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

/// Accepts "n", "n/d" and optional surrounding blanks; rejects d == 0.
inline Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw InputError("empty rational");
  std::string s(text.substr(first, last - first + 1));
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational '" + s + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace quasialg

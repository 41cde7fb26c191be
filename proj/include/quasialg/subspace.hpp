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

#include <algorithm>
#include <cstddef>
#include <vector>

#include "quasialg/error.hpp"
#include "quasialg/rational.hpp"

namespace quasialg {

/// Subspace of Q^n kept as a fully reduced row echelon basis, so two
/// subspaces are equal iff their bases are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& basis() const { return rows_; }

  /// Remainder of v after elimination against the basis; zero iff v lies in the span.
  std::vector<Rational> reduce(std::vector<Rational> v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational c = v[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t k = pivots_[r]; k < ambient_; ++k)
        if (rows_[r][k] != 0) v[k] -= c * rows_[r][k];
    }
    return v;
  }

  bool contains(const std::vector<Rational>& v) const {
    auto rem = reduce(v);
    return std::all_of(rem.begin(), rem.end(), [](const Rational& c) { return c == 0; });
  }

  /// Adds v to the span. Returns true iff the dimension grew.
  bool insert(std::vector<Rational> v) {
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
    if (it == v.end()) return false;
    std::size_t p = static_cast<std::size_t>(it - v.begin());
    const Rational lead = v[p];
    for (auto& c : v) c /= lead;
    for (auto& row : rows_) {
      const Rational c = row[p];
      if (c == 0) continue;
      for (std::size_t k = p; k < ambient_; ++k)
        if (v[k] != 0) row[k] -= c * v[k];
    }
    auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  void check(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw InputError("vector length does not match subspace ambient dimension");
  }

  std::size_t ambient_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace quasialg

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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quasialg/error.hpp"
#include "quasialg/group.hpp"
#include "quasialg/rational.hpp"

namespace quasialg {

namespace detail {

/// Brings every entry to lowest terms; mpq_class(num, den) does not.
inline void canonicalize_all(std::vector<Rational>& values) {
  for (auto& v : values) {
    if (v.get_den() == 0) throw InputError("rational with zero denominator");
    v.canonicalize();
  }
}

}  // namespace detail

/// Outcome of an exhaustive check. On failure `witness` is the
/// lexicographically first failing tuple of group/basis indices.
struct CheckResult {
  bool holds = true;
  std::vector<std::size_t> witness;
  std::string detail;

  explicit operator bool() const { return holds; }

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::vector<std::size_t> w, std::string detail = {}) {
    return {false, std::move(w), std::move(detail)};
  }
};

/// Normalized 2-cochain F : G x G -> Q^*, F(x,e) = F(e,x) = 1.
///
/// When every value is +-1 the cochain is flagged sign-only and additionally
/// keeps the exponent table f with F = (-1)^f, packed one bit per pair.
class Cochain {
 public:
  /// The trivial cochain F == 1.
  explicit Cochain(GroupSpec g) : group_(std::move(g)) {
    values_.assign(group_.size() * group_.size(), Rational(1));
    pack_signs();
  }

  static Cochain from_values(GroupSpec g, std::vector<Rational> values) {
    std::size_t n = g.size();
    if (values.size() != n * n) throw InputError("cochain table has wrong size");
    detail::canonicalize_all(values);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Rational& v = values[x * n + y];
        if (v == 0) throw InputError("cochain value F(" + std::to_string(x) + "," + std::to_string(y) + ") is zero");
        if ((x == 0 || y == 0) && v != 1)
          throw InputError("cochain not normalized at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
    Cochain c(std::move(g), std::move(values), 0);
    return c;
  }

  template <class Fn>
  static Cochain from_function(GroupSpec g, Fn&& fn) {
    std::size_t n = g.size();
    std::vector<Rational> values(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) values[x * n + y] = Rational(fn(x, y));
    return from_values(std::move(g), std::move(values));
  }

  /// F(x,y) = (-1)^bits[x*n + y].
  static Cochain from_sign_exponents(GroupSpec g, std::span<const std::uint8_t> bits) {
    std::size_t n = g.size();
    if (bits.size() != n * n) throw InputError("sign exponent table has wrong size");
    return from_function(std::move(g), [&](std::size_t x, std::size_t y) { return (bits[x * n + y] & 1) ? -1 : 1; });
  }

  const GroupSpec& group() const { return group_; }
  std::size_t size() const { return group_.size(); }

  const Rational& operator()(std::size_t x, std::size_t y) const { return values_[x * group_.size() + y]; }
  const std::vector<Rational>& values() const { return values_; }

  bool sign_only() const { return sign_only_; }

  /// Exponent f(x,y) of a sign-only cochain.
  int sign_exponent(std::size_t x, std::size_t y) const {
    if (!sign_only_) throw PreconditionError("cochain is not sign-only");
    std::size_t k = x * group_.size() + y;
    return static_cast<int>((bits_[k / 64] >> (k % 64)) & 1u);
  }

  bool is_symmetric() const {
    std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if ((*this)(x, y) != (*this)(y, x)) return false;
    return true;
  }

  /// F^2 == 1 pointwise.
  bool squares_to_one() const { return sign_only_; }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  Cochain(GroupSpec g, std::vector<Rational> values, int) : group_(std::move(g)), values_(std::move(values)) {
    pack_signs();
  }

  void pack_signs() {
    sign_only_ = true;
    for (const auto& v : values_)
      if (!is_sign(v)) {
        sign_only_ = false;
        break;
      }
    bits_.clear();
    if (!sign_only_) return;
    bits_.assign((values_.size() + 63) / 64, 0);
    for (std::size_t k = 0; k < values_.size(); ++k)
      if (values_[k] == -1) bits_[k / 64] |= std::uint64_t{1} << (k % 64);
  }

  GroupSpec group_;
  std::vector<Rational> values_;
  bool sign_only_ = true;
  std::vector<std::uint64_t> bits_;
};

/// Normalized 3-cochain phi : G^3 -> Q^*, usually the associator of a cochain.
class Cocycle3 {
 public:
  explicit Cocycle3(GroupSpec g) : group_(std::move(g)) {
    std::size_t n = group_.size();
    values_.assign(n * n * n, Rational(1));
  }

  static Cocycle3 from_values(GroupSpec g, std::vector<Rational> values) {
    std::size_t n = g.size();
    if (values.size() != n * n * n) throw InputError("3-cochain table has wrong size");
    detail::canonicalize_all(values);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const Rational& v = values[(x * n + y) * n + z];
          if (v == 0) throw InputError("3-cochain value is zero");
          if ((x == 0 || y == 0 || z == 0) && v != 1) throw InputError("3-cochain not normalized");
        }
    Cocycle3 c(std::move(g));
    c.values_ = std::move(values);
    return c;
  }

  const GroupSpec& group() const { return group_; }
  const Rational& operator()(std::size_t x, std::size_t y, std::size_t z) const {
    std::size_t n = group_.size();
    return values_[(x * n + y) * n + z];
  }
  const std::vector<Rational>& values() const { return values_; }

  bool is_trivial() const {
    for (const auto& v : values_)
      if (v != 1) return false;
    return true;
  }

  friend bool operator==(const Cocycle3& a, const Cocycle3& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  GroupSpec group_;
  std::vector<Rational> values_;
};

/// Braiding coefficients R : G x G -> Q^*, with x.y = R(x,y) y.x in k_F G.
class Braiding {
 public:
  explicit Braiding(GroupSpec g) : group_(std::move(g)) { values_.assign(group_.size() * group_.size(), Rational(1)); }

  static Braiding from_values(GroupSpec g, std::vector<Rational> values) {
    if (values.size() != g.size() * g.size()) throw InputError("braiding table has wrong size");
    detail::canonicalize_all(values);
    for (const auto& v : values)
      if (v == 0) throw InputError("braiding value is zero");
    Braiding b(std::move(g));
    b.values_ = std::move(values);
    return b;
  }

  const GroupSpec& group() const { return group_; }
  const Rational& operator()(std::size_t x, std::size_t y) const { return values_[x * group_.size() + y]; }
  const std::vector<Rational>& values() const { return values_; }

  bool is_trivial() const {
    for (const auto& v : values_)
      if (v != 1) return false;
    return true;
  }

 private:
  GroupSpec group_;
  std::vector<Rational> values_;
};

/// phi(x,y,z) = F(x,y) F(xy,z) / (F(y,z) F(x,yz)).
inline Cocycle3 derive_phi(const Cochain& F) {
  const GroupSpec& g = F.group();
  std::size_t n = g.size();
  std::vector<Rational> values(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xy = g.mul(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t yz = g.mul(y, z);
        Rational& out = values[(x * n + y) * n + z];
        if (F.sign_only()) {
          int e = F.sign_exponent(x, y) ^ F.sign_exponent(xy, z) ^ F.sign_exponent(y, z) ^ F.sign_exponent(x, yz);
          out = e ? -1 : 1;
        } else {
          out = F(x, y) * F(xy, z) / (F(y, z) * F(x, yz));
        }
      }
    }
  return Cocycle3::from_values(g, std::move(values));
}

/// R(x,y) = F(x,y) / F(y,x).
inline Braiding derive_R(const Cochain& F) {
  std::size_t n = F.size();
  std::vector<Rational> values(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) values[x * n + y] = F(x, y) / F(y, x);
  return Braiding::from_values(F.group(), std::move(values));
}

/// The 3-cocycle identity
///   phi(y,z,w) phi(x,yz,w) phi(x,y,z) = phi(x,y,zw) phi(xy,z,w)
/// over all quadruples.
inline CheckResult check_cocycle(const Cocycle3& phi) {
  const GroupSpec& g = phi.group();
  std::size_t n = g.size();
  Rational lhs, rhs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xy = g.mul(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t yz = g.mul(y, z);
        for (std::size_t w = 0; w < n; ++w) {
          std::size_t zw = g.mul(z, w);
          lhs = phi(y, z, w) * phi(x, yz, w) * phi(x, y, z);
          rhs = phi(x, y, zw) * phi(xy, z, w);
          if (lhs != rhs) return CheckResult::fail({x, y, z, w}, "pentagon");
        }
      }
    }
  return CheckResult::pass();
}

/// Both quasi-bicharacter identities
///   R(xy,z) = R(x,z) R(y,z) phi(z,x,y) phi(x,y,z) / phi(x,z,y)
///   R(x,yz) = R(x,z) R(x,y) phi(y,x,z) / (phi(y,z,x) phi(x,y,z))
/// over all triples. The witness is (x,y,z); `detail` names the identity.
inline CheckResult check_bicharacter(const Braiding& R, const Cocycle3& phi) {
  if (!(R.group() == phi.group())) throw InputError("braiding and cocycle live on different groups");
  const GroupSpec& g = R.group();
  std::size_t n = g.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (R(g.mul(x, y), z) != R(x, z) * R(y, z) * phi(z, x, y) * phi(x, y, z) / phi(x, z, y))
          return CheckResult::fail({x, y, z}, "left");
        if (R(x, g.mul(y, z)) != R(x, z) * R(x, y) * phi(y, x, z) / (phi(y, z, x) * phi(x, y, z)))
          return CheckResult::fail({x, y, z}, "right");
      }
  return CheckResult::pass();
}

/// R(x,y) = 1 when x = e, y = e or x = y, and -1 otherwise.
inline bool check_altercommutative(const Braiding& R) {
  std::size_t n = R.group().size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      int expected = (x == 0 || y == 0 || x == y) ? 1 : -1;
      if (R(x, y) != expected) return false;
    }
  return true;
}

/// Searches q : G -> {+1,-1} with q(e) = 1 and F^2(x,y) = q(x) q(y) / q(xy).
/// Returns q == 1 immediately when F^2 == 1. Otherwise enumerates the
/// 2^(|G|-1) candidates, refusing more than 2^16 of them.
inline std::optional<std::vector<int>> quadratic_coboundary_search(const Cochain& F) {
  const GroupSpec& g = F.group();
  std::size_t n = g.size();
  if (F.squares_to_one()) return std::vector<int>(n, 1);
  if (n - 1 > 16) throw ResourceError("quadratic coboundary search limited to 2^16 candidates");
  std::vector<Rational> square(n * n);
  for (std::size_t k = 0; k < n * n; ++k) square[k] = F.values()[k] * F.values()[k];
  std::vector<int> q(n, 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    for (std::size_t x = 1; x < n; ++x) q[x] = ((mask >> (x - 1)) & 1) ? -1 : 1;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        ok = square[x * n + y] == q[x] * q[y] * q[g.mul(x, y)];
    if (ok) return q;
  }
  return std::nullopt;
}

}  // namespace quasialg

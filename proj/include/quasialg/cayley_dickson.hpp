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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quasialg/cochain.hpp"
#include "quasialg/error.hpp"
#include "quasialg/group.hpp"
#include "quasialg/quasialgebra.hpp"
#include "quasialg/rational.hpp"

namespace quasialg {

/// f : (Z_2)^n x (Z_2)^n -> Z_2 as a GF(2) sum of multilinear monomials.
///
/// A monomial is a pair (x-mask, y-mask) where bit i-1 of a mask stands for
/// variable x_i (resp. y_i). Monomials are kept sorted by (x-mask, y-mask)
/// and each appears at most once, so equal functions have equal
/// representations.
class SignPolynomial {
 public:
  using Monomial = std::pair<std::uint64_t, std::uint64_t>;

  static constexpr std::size_t kMaxVariables = 63;

  SignPolynomial() = default;
  explicit SignPolynomial(std::size_t n, std::vector<Monomial> monomials = {}) : n_(n) {
    if (n > kMaxVariables) throw ResourceError("sign polynomial limited to 63 variables");
    std::set<Monomial> acc;
    std::uint64_t limit = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    for (const auto& m : monomials) {
      if ((m.first & ~limit) || (m.second & ~limit)) throw InputError("monomial uses a variable beyond n");
      if (m.first == 0 || m.second == 0) throw InputError("monomial must contain an x and a y variable");
      if (!acc.erase(m)) acc.insert(m);
    }
    monomials_.assign(acc.begin(), acc.end());
  }

  std::size_t variables() const { return n_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }

  /// f at variable masks (bit i-1 = value of x_i).
  int evaluate_masks(std::uint64_t x, std::uint64_t y) const {
    int parity = 0;
    for (const auto& [mx, my] : monomials_) parity ^= ((x & mx) == mx && (y & my) == my) ? 1 : 0;
    return parity;
  }

  /// f at group indices of (Z_2)^n, whose most significant bit is x_1.
  int evaluate(std::size_t x_index, std::size_t y_index) const {
    return evaluate_masks(index_to_mask(x_index), index_to_mask(y_index));
  }

  std::uint64_t index_to_mask(std::size_t index) const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if ((index >> (n_ - 1 - i)) & 1u) m |= std::uint64_t{1} << i;
    return m;
  }

  /// Monomials sharing the total degree `d`.
  std::vector<Monomial> part_of_degree(int d) const {
    std::vector<Monomial> out;
    for (const auto& m : monomials_)
      if (std::popcount(m.first) + std::popcount(m.second) == d) out.push_back(m);
    return out;
  }

  /// "x1y1 + x1y2 + x2y2"; "0" for the zero polynomial.
  std::string to_string() const {
    if (monomials_.empty()) return "0";
    std::string s;
    for (const auto& [mx, my] : monomials_) {
      if (!s.empty()) s += " + ";
      s += monomial_string(mx, my);
    }
    return s;
  }

  static std::string monomial_string(std::uint64_t mx, std::uint64_t my) {
    std::string s;
    for (std::size_t i = 0; i < 64; ++i)
      if ((mx >> i) & 1u) s += "x" + std::to_string(i + 1);
    for (std::size_t i = 0; i < 64; ++i)
      if ((my >> i) & 1u) s += "y" + std::to_string(i + 1);
    return s;
  }

  friend bool operator==(const SignPolynomial&, const SignPolynomial&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> monomials_;
};

/// One step of the GF(2) doubling recursion
///   fbar((x,a),(y,b)) = f(x,y)(1 + a) + f(y,x) a + b f(x,x) + a b
/// where a = x_{n+1}, b = y_{n+1}.
inline SignPolynomial fbar_step(const SignPolynomial& f) {
  std::size_t n = f.variables();
  std::uint64_t top = std::uint64_t{1} << n;
  std::vector<SignPolynomial::Monomial> terms;
  for (const auto& [mx, my] : f.monomials()) {
    terms.emplace_back(mx, my);
    terms.emplace_back(mx | top, my);
    terms.emplace_back(my | top, mx);
    terms.emplace_back(mx | my, top);
  }
  terms.emplace_back(top, top);
  return SignPolynomial(n + 1, std::move(terms));
}

/// f for the standard tower at `level` (0 = the zero polynomial).
inline SignPolynomial sign_polynomial_for_level(std::size_t level) {
  SignPolynomial f(0);
  for (std::size_t i = 0; i < level; ++i) f = fbar_step(f);
  return f;
}

inline GroupSpec elementary_two_group(std::size_t n) { return GroupSpec(std::vector<int>(n, 2)); }

/// F = (-1)^f on (Z_2)^n.
inline Cochain cochain_from_sign_polynomial(const SignPolynomial& f) {
  GroupSpec g = elementary_two_group(f.variables());
  return Cochain::from_function(g, [&](std::size_t x, std::size_t y) { return f.evaluate(x, y) ? -1 : 1; });
}

struct CDParams {
  Rational alpha = -1;
  Involution s;
};

struct CDExtension {
  Cochain F;
  Involution s;
};

/// Index of (x, bit) in G x Z_2; bit 1 is the new generator v.
inline std::size_t cd_index(std::size_t x, unsigned bit) { return 2 * x + bit; }

/// The doubled cochain on G x Z_2:
///   Fbar(x,y) = F(x,y)            Fbar(x,vy) = s(x) F(x,y)
///   Fbar(vx,y) = F(y,x)           Fbar(vx,vy) = alpha s(x) F(y,x)
/// with sbar(x) = s(x) and sbar(vx) = -1.
inline CDExtension cd_extend(const Cochain& F, const CDParams& params) {
  const GroupSpec& g = F.group();
  std::size_t n = g.size();
  if (params.s.dim() != n) throw InputError("involution does not match the cochain's group");
  if (params.alpha == 0) throw InputError("alpha must be nonzero");
  const auto& s = params.s;
  std::vector<Rational> values(4 * n * n);
  std::size_t m = 2 * n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      values[cd_index(x, 0) * m + cd_index(y, 0)] = F(x, y);
      values[cd_index(x, 0) * m + cd_index(y, 1)] = s(x) * F(x, y);
      values[cd_index(x, 1) * m + cd_index(y, 0)] = F(y, x);
      values[cd_index(x, 1) * m + cd_index(y, 1)] = params.alpha * s(x) * F(y, x);
    }
  std::vector<Rational> sbar(m);
  for (std::size_t x = 0; x < n; ++x) {
    sbar[cd_index(x, 0)] = s(x);
    sbar[cd_index(x, 1)] = -1;
  }
  return {Cochain::from_values(g.doubled(), std::move(values)), Involution(std::move(sbar))};
}

/// cd_extend with s(x) = F(x,x) and alpha = -1.
inline CDExtension cd_standard(const Cochain& F) {
  if (!F.group().is_elementary_two()) throw PreconditionError("standard doubling requires G = (Z_2)^n");
  std::vector<Rational> s(F.size());
  for (std::size_t x = 0; x < F.size(); ++x) s[x] = F(x, x);
  return cd_extend(F, {Rational(-1), Involution(std::move(s))});
}

inline std::string tower_name(std::size_t level) {
  static const char* names[] = {"real", "complex", "quaternion", "octonion", "sedenion"};
  if (level < 5) return names[level];
  return "onion:" + std::to_string(std::size_t{1} << level);
}

/// Inverse of tower_name; accepts "onion:<dim>" for any power-of-two dim.
/// Returns -1 for unknown names.
inline int tower_level_from_name(const std::string& name) {
  for (int level = 0; level < 5; ++level)
    if (name == tower_name(static_cast<std::size_t>(level))) return level;
  const std::string prefix = "onion:";
  if (name.rfind(prefix, 0) != 0) return -1;
  std::string digits = name.substr(prefix.size());
  if (digits.empty() || digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return -1;
  unsigned long dim = std::stoul(digits);
  if (dim == 0 || !std::has_single_bit(dim)) return -1;
  return std::countr_zero(dim);
}

/// Largest level materialized as a table-backed Quasialgebra. Above this the
/// cached associator alone would hold 2^(3 level) exact rationals.
inline constexpr std::size_t kMaxTableLevel = 6;
inline constexpr std::size_t kMaxSignLevel = 13;

/// Cochain of the standard tower at `level`.
inline Cochain cd_cochain(std::size_t level) {
  if (level > kMaxTableLevel) throw ResourceError("table form limited to level 6; use the sign polynomial");
  Cochain F{GroupSpec{}};
  for (std::size_t i = 0; i < level; ++i) F = cd_standard(F).F;
  return F;
}

/// Algebras of dimension 2^0 .. 2^levels from iterated standard doubling.
inline std::vector<Quasialgebra> cd_tower(std::size_t levels) {
  if (levels > kMaxSignLevel) throw ResourceError("tower limited to 13 levels");
  if (levels > kMaxTableLevel) throw ResourceError("table form limited to level 6; use the sign polynomial");
  std::vector<Quasialgebra> tower;
  Cochain F{GroupSpec{}};
  tower.emplace_back(tower_name(0), F);
  for (std::size_t level = 1; level <= levels; ++level) {
    F = cd_standard(F).F;
    tower.emplace_back(tower_name(level), F);
  }
  return tower;
}

inline Quasialgebra cd_algebra(std::size_t level) { return Quasialgebra(tower_name(level), cd_cochain(level)); }

/// Checks the relations between phi = dF and phibar = dFbar when Fbar is a
/// doubling of F by a diagonal involution s. The involution and alpha are
/// read back from Fbar(x,v) = s(x) and Fbar(v,v) = alpha. Witness is
/// (case, x, y, z) where case bits (a,b,c) = which arguments carry v.
inline CheckResult check_phibar(const Cochain& F, const Cochain& Fbar) {
  const GroupSpec& g = F.group();
  std::size_t n = g.size();
  if (!(Fbar.group() == g.doubled())) throw PreconditionError("Fbar does not live on G x Z_2");
  std::vector<Rational> s(n);
  for (std::size_t x = 0; x < n; ++x) s[x] = Fbar(cd_index(x, 0), cd_index(0, 1));
  Rational alpha = Fbar(cd_index(0, 1), cd_index(0, 1));
  Involution inv(s);
  if (!(cd_extend(F, {alpha, inv}).F == Fbar)) throw PreconditionError("Fbar is not a doubling of F");
  Braiding R = derive_R(F);
  for (std::size_t x = 0; x < n; ++x) {
    if (s[x] * s[x] != 1) throw PreconditionError("s does not square to 1");
    for (std::size_t y = 0; y < n; ++y)
      if (s[x] * s[y] / s[g.mul(x, y)] != R(x, y)) throw PreconditionError("s is not a diagonal involution");
  }
  Cocycle3 phi = derive_phi(F);
  Cocycle3 phibar = derive_phi(Fbar);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t xy = g.mul(x, y), yz = g.mul(y, z);
        const Rational base = phi(x, y, z);
        const Rational expected[8] = {
            base,                            // (x, y, z)
            R(x, y) * base,                  // (x, y, vz)
            R(y, z) * R(xy, z) * base,       // (x, vy, z)
            R(x, yz) * base,                 // (x, vy, vz)
            R(y, z) * base,                  // (vx, y, z)
            R(y, z) * R(x, y) * base,        // (vx, y, vz)
            R(xy, z) * base,                 // (vx, vy, z)
            R(xy, z) * R(x, y) * base,       // (vx, vy, vz)
        };
        for (unsigned c = 0; c < 8; ++c) {
          unsigned a = (c >> 2) & 1u, b = (c >> 1) & 1u, d = c & 1u;
          if (phibar(cd_index(x, a), cd_index(y, b), cd_index(z, d)) != expected[c])
            return CheckResult::fail({c, x, y, z}, "case " + std::to_string(c));
        }
      }
  return CheckResult::pass();
}

}  // namespace quasialg

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
#include <string>
#include <utility>
#include <vector>

#include "quasialg/cochain.hpp"
#include "quasialg/error.hpp"
#include "quasialg/group.hpp"
#include "quasialg/quasialgebra.hpp"
#include "quasialg/rational.hpp"

namespace quasialg {

/// Square matrix with entries in {+1, -1}.
class SignMatrix {
 public:
  SignMatrix() = default;
  explicit SignMatrix(std::size_t n) : n_(n), entries_(n * n, 1) {}

  static SignMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    SignMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw InputError("sign matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::size_t order() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, int v) {
    if (v != 1 && v != -1) throw InputError("sign matrix entries must be +1 or -1");
    entries_[i * n_ + j] = static_cast<std::int8_t>(v);
  }

  /// First row and first column all +1.
  bool is_normalized() const {
    for (std::size_t i = 0; i < n_; ++i)
      if ((*this)(0, i) != 1 || (*this)(i, 0) != 1) return false;
    return true;
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> r(n_, std::vector<int>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
    return r;
  }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> entries_;
};

/// H^T H == n I.
inline bool is_hadamard(const SignMatrix& H) {
  std::size_t n = H.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      long dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += H(k, i) * H(k, j);
      if (dot != (i == j ? static_cast<long>(n) : 0)) return false;
    }
  return true;
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Quadratic character of F_p: 0 at 0, +1 on nonzero squares, -1 otherwise.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(long p) : p_(p) {
    if (p % 2 == 0 || !is_prime(p)) throw InputError("quadratic character needs an odd prime, got " + std::to_string(p));
    values_.assign(static_cast<std::size_t>(p), -1);
    values_[0] = 0;
    for (long a = 1; a < p; ++a) values_[static_cast<std::size_t>(a * a % p)] = 1;
  }

  long modulus() const { return p_; }

  int operator()(long a) const { return values_[static_cast<std::size_t>(((a % p_) + p_) % p_)]; }

 private:
  long p_;
  std::vector<int> values_;
};

inline QuadraticCharacter qr_character(long p) { return QuadraticCharacter(p); }

struct PaleyMatrices {
  SignMatrix skew;        // first row +1, first column -1 below the corner, inner Q + I
  SignMatrix normalized;  // rows 1..p negated: first row and column +1, inner -Q - I
};

/// The (p+1) x (p+1) Paley matrices from Q_ij = chi(i - j), p = 3 mod 4.
/// Field element i sits in row and column i + 1.
inline PaleyMatrices paley_matrix(long p) {
  QuadraticCharacter chi(p);
  if (p % 4 != 3) throw PreconditionError("Paley construction needs p = 3 mod 4, got " + std::to_string(p));
  auto n = static_cast<std::size_t>(p + 1);
  PaleyMatrices out{SignMatrix(n), SignMatrix(n)};
  for (std::size_t i = 1; i < n; ++i) {
    out.skew.set(i, 0, -1);
    for (std::size_t j = 1; j < n; ++j) {
      int q = chi(static_cast<long>(i) - static_cast<long>(j)) + (i == j ? 1 : 0);
      out.skew.set(i, j, q);
      out.normalized.set(i, j, -q);
    }
  }
  return out;
}

/// F(x,y) = H[x][y], group index x <-> row x (the identity is row 0).
inline Cochain cochain_from_hadamard(const SignMatrix& H, const GroupSpec& g) {
  if (H.order() != g.size()) throw InputError("matrix order does not match group size");
  if (!H.is_normalized()) throw PreconditionError("Hadamard cochain needs a normalized matrix");
  return Cochain::from_function(g, [&](std::size_t x, std::size_t y) { return H(x, y); });
}

/// F with first row and column +1 and inner block H: F(x,y) = H[x-1][y-1].
inline Cochain bordered_cochain(const SignMatrix& H, const GroupSpec& g) {
  if (H.order() + 1 != g.size()) throw InputError("bordered cochain needs |G| = order(H) + 1");
  return Cochain::from_function(g, [&](std::size_t x, std::size_t y) { return (x == 0 || y == 0) ? 1 : H(x - 1, y - 1); });
}

/// F(x,y) = -1 iff x = y != e, on Z_n.
inline Cochain delta_cochain(int n) {
  if (n < 4) throw InputError("delta cochain needs n >= 4");
  return Cochain::from_function(GroupSpec({n}), [](std::size_t x, std::size_t y) { return (x == y && x != 0) ? -1 : 1; });
}

/// The symmetric normalized 4x4 Hadamard matrix.
inline SignMatrix h4_symmetric() {
  return SignMatrix::from_rows({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}});
}

/// J - 2I of order n: -1 on the diagonal, +1 elsewhere.
inline SignMatrix maximal_excess(std::size_t n) {
  SignMatrix H(n);
  for (std::size_t i = 0; i < n; ++i) H.set(i, i, -1);
  return H;
}

inline Quasialgebra h4_algebra() {
  return Quasialgebra("h4sym", cochain_from_hadamard(h4_symmetric(), GroupSpec({2, 2})));
}

/// Paley algebra on (Z_2)^m from the normalized matrix; p + 1 must be 2^m.
inline Quasialgebra paley_algebra(long p) {
  auto pm = paley_matrix(p);
  std::size_t n = pm.normalized.order();
  if ((n & (n - 1)) != 0) throw PreconditionError("p + 1 must be a power of two to grade by (Z_2)^m");
  int m = 0;
  while ((std::size_t{1} << m) < n) ++m;
  return Quasialgebra("paley:" + std::to_string(p), cochain_from_hadamard(pm.normalized, GroupSpec(std::vector<int>(static_cast<std::size_t>(m), 2))));
}

/// The two algebras on Z_3 bordered by an order-2 Hadamard matrix.
inline Quasialgebra z3_table_i() {
  return Quasialgebra("z3-table-i", bordered_cochain(SignMatrix::from_rows({{-1, 1}, {1, 1}}), GroupSpec({3})));
}
inline Quasialgebra z3_table_ii() {
  return Quasialgebra("z3-table-ii", bordered_cochain(SignMatrix::from_rows({{1, -1}, {1, 1}}), GroupSpec({3})));
}

/// Z_5 bordered by J - 2I of order 4.
inline Quasialgebra z5_excess() {
  return Quasialgebra("z5-excess", bordered_cochain(maximal_excess(4), GroupSpec({5})));
}

inline Quasialgebra delta_algebra(int n) { return Quasialgebra("delta:" + std::to_string(n), delta_cochain(n)); }

/// Basis names: e, x, y, z up to dimension 4, else e, e1, e2, ...
inline std::string basis_name(std::size_t dim, std::size_t i) {
  static const char* small[] = {"e", "x", "y", "z"};
  if (dim <= 4) return small[i];
  return i == 0 ? "e" : "e" + std::to_string(i);
}

/// Multiplication table of basis products, one row per left factor,
/// entries separated by a space: "e x y\nx -y e\ny e x\n".
inline std::string render_table(const Quasialgebra& A) {
  std::string out;
  std::size_t n = A.dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out += ' ';
      const Rational& c = A.cochain()(x, y);
      std::string name = basis_name(n, A.group().mul(x, y));
      if (c == 1)
        out += name;
      else if (c == -1)
        out += "-" + name;
      else
        out += to_display(c) + name;
    }
    out += '\n';
  }
  return out;
}

}  // namespace quasialg

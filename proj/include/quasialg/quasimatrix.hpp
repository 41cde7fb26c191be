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
#include <string>
#include <utility>
#include <vector>

#include "quasialg/cochain.hpp"
#include "quasialg/error.hpp"
#include "quasialg/group.hpp"
#include "quasialg/quasialgebra.hpp"
#include "quasialg/rational.hpp"

namespace quasialg {

/// V with basis e_1..e_n of degrees |i| (group indices).
struct GradedSpace {
  GroupSpec group;
  std::vector<std::size_t> degree;

  std::size_t dim() const { return degree.size(); }

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;
};

/// The regular grading: basis of k_F G with |x| = x.
inline GradedSpace regular_space(const Quasialgebra& A) {
  GradedSpace s{A.group(), std::vector<std::size_t>(A.dim())};
  for (std::size_t x = 0; x < A.dim(); ++x) s.degree[x] = x;
  return s;
}

/// n x n rational matrix; entry (i,j) is the coefficient of E_i^j, whose
/// degree is |i||j|^-1.
class QuasiMatrix {
 public:
  QuasiMatrix() = default;
  explicit QuasiMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static QuasiMatrix identity(std::size_t n) {
    QuasiMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static QuasiMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    QuasiMatrix m(n);
    m(i, j) = 1;
    return m;
  }

  std::size_t dim() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  QuasiMatrix& operator+=(const QuasiMatrix& o) {
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  QuasiMatrix scaled(const Rational& s) const {
    QuasiMatrix m = *this;
    for (auto& e : m.entries_) e *= s;
    return m;
  }
  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  friend bool operator==(const QuasiMatrix&, const QuasiMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

/// Degree of E_i^j.
inline std::size_t unit_degree(const GradedSpace& s, std::size_t i, std::size_t j) {
  return s.group.mul(s.degree[i], s.group.inverse(s.degree[j]));
}

/// (a.b)^i_j = sum_k a^i_k b^k_j phi(|i|,|k|^-1,|k||j|^-1) / phi(|k|^-1,|k|,|j|^-1)
inline QuasiMatrix mnphi_multiply(const Cocycle3& phi, const GradedSpace& s, const QuasiMatrix& a,
                                  const QuasiMatrix& b) {
  std::size_t n = s.dim();
  if (a.dim() != n || b.dim() != n) throw InputError("quasi-matrix does not match the graded space");
  if (!(phi.group() == s.group)) throw InputError("cocycle and graded space use different groups");
  const GroupSpec& g = s.group;
  QuasiMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      std::size_t ki = g.inverse(s.degree[k]);
      for (std::size_t j = 0; j < n; ++j) {
        if (b(k, j) == 0) continue;
        std::size_t ji = g.inverse(s.degree[j]);
        out(i, j) += a(i, k) * b(k, j) * phi(s.degree[i], ki, g.mul(s.degree[k], ji)) / phi(ki, s.degree[k], ji);
      }
    }
  return out;
}

inline QuasiMatrix ordinary_multiply(const QuasiMatrix& a, const QuasiMatrix& b) {
  std::size_t n = a.dim();
  if (b.dim() != n) throw InputError("matrix dimension mismatch");
  QuasiMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

/// x_alpha |> e_i = sum_j v[alpha][i][j] e_j for a basis x_alpha of the
/// algebra (x_0 = 1) acting on a graded space.
struct ActionTable {
  std::string algebra;
  GradedSpace space;
  std::vector<std::size_t> algebra_degrees;
  std::vector<Rational> v;  // (alpha * n + i) * n + j

  std::size_t algebra_dim() const { return algebra_degrees.size(); }
  std::size_t space_dim() const { return space.dim(); }

  const Rational& operator()(std::size_t alpha, std::size_t i, std::size_t j) const {
    return v[(alpha * space_dim() + i) * space_dim() + j];
  }
  Rational& at(std::size_t alpha, std::size_t i, std::size_t j) { return v[(alpha * space_dim() + i) * space_dim() + j]; }
};

/// k_F G acting on itself: x |> y = F(x,y) xy.
inline ActionTable regular_action(const Quasialgebra& A) {
  std::size_t n = A.dim();
  ActionTable act{A.name(), regular_space(A), std::vector<std::size_t>(n), std::vector<Rational>(n * n * n)};
  for (std::size_t x = 0; x < n; ++x) {
    act.algebra_degrees[x] = x;
    for (std::size_t y = 0; y < n; ++y) act.at(x, y, A.group().mul(x, y)) = A.cochain()(x, y);
  }
  return act;
}

/// Verifies (x_a x_b) |> e_i = phi(|a|,|b|,|i|) x_a |> (x_b |> e_i),
/// 1 |> e_i = e_i and that the action preserves degree. Witness (a, b, i);
/// the unit and degree clauses report (alpha, i, j).
inline CheckResult check_action(const Quasialgebra& A, const ActionTable& act) {
  std::size_t m = A.dim(), n = act.space_dim();
  if (act.algebra_dim() != m || act.v.size() != m * n * n) throw InputError("action table does not match the algebra");
  if (!(act.space.group == A.group())) throw InputError("action table graded by a different group");
  const GroupSpec& g = A.group();
  for (std::size_t a = 0; a < m; ++a)
    if (act.algebra_degrees[a] != a) throw InputError("algebra degrees must follow the group basis");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (act(a, i, j) != 0 && g.mul(a, act.space.degree[i]) != act.space.degree[j])
          return CheckResult::fail({a, i, j}, "degree");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (act(0, i, j) != (i == j ? 1 : 0)) return CheckResult::fail({0, i, j}, "unit");
  std::vector<Rational> lhs(n), rhs(n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::size_t ab = g.mul(a, b);
      const Rational& F = A.cochain()(a, b);
      for (std::size_t i = 0; i < n; ++i) {
        const Rational& ph = A.phi()(a, b, act.space.degree[i]);
        for (std::size_t j = 0; j < n; ++j) {
          lhs[j] = F * act(ab, i, j);
          rhs[j] = 0;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (act(b, i, k) == 0) continue;
          for (std::size_t j = 0; j < n; ++j)
            if (act(a, k, j) != 0) rhs[j] += ph * act(b, i, k) * act(a, k, j);
        }
        if (lhs != rhs) return CheckResult::fail({a, b, i}, "quasiassociativity");
      }
    }
  return CheckResult::pass();
}

/// Normalization phi(|j|,|j|^-1,|j|) phi(|i||j|^-1,|j|,|j|^-1) relating
/// action coefficients to quasi-matrix entries.
inline Rational rho_normalization(const Cocycle3& phi, const GradedSpace& s, std::size_t i, std::size_t j) {
  const GroupSpec& g = s.group;
  std::size_t dj = s.degree[j], dji = g.inverse(dj);
  return phi(dj, dji, dj) * phi(unit_degree(s, i, j), dj, dji);
}

/// rho(x_alpha)^i_j = v[alpha][j][i] / normalization(i, j).
inline std::vector<QuasiMatrix> rho_from_action(const Quasialgebra& A, const ActionTable& act) {
  if (auto ok = check_action(A, act); !ok) throw PreconditionError("not an action (" + ok.detail + ")");
  std::size_t m = A.dim(), n = act.space_dim();
  std::vector<QuasiMatrix> rho(m, QuasiMatrix(n));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (act(a, j, i) != 0) rho[a](i, j) = act(a, j, i) / rho_normalization(A.phi(), act.space, i, j);
  return rho;
}

/// Inverse of rho_from_action.
inline ActionTable action_from_rho(const Quasialgebra& A, const std::vector<QuasiMatrix>& rho, const GradedSpace& s) {
  std::size_t m = A.dim(), n = s.dim();
  if (rho.size() != m) throw InputError("one matrix per algebra basis element expected");
  ActionTable act{A.name(), s, std::vector<std::size_t>(m), std::vector<Rational>(m * n * n)};
  for (std::size_t a = 0; a < m; ++a) {
    act.algebra_degrees[a] = a;
    if (rho[a].dim() != n) throw InputError("matrix size does not match the graded space");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rho[a](i, j) != 0) act.at(a, j, i) = rho[a](i, j) * rho_normalization(A.phi(), s, i, j);
  }
  return act;
}

enum class MatrixProduct { mnphi, ordinary };

/// rho(x_a . x_b) == rho(x_a) rho(x_b) for all basis pairs, using the
/// M_{n,phi} product or the plain matrix product. Witness (a, b).
inline CheckResult check_algebra_map(const Quasialgebra& A, const std::vector<QuasiMatrix>& rho, const Cocycle3& phi,
                                     const GradedSpace& s, MatrixProduct product = MatrixProduct::mnphi) {
  std::size_t m = A.dim();
  if (rho.size() != m) throw InputError("one matrix per algebra basis element expected");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      QuasiMatrix lhs = rho[A.group().mul(a, b)].scaled(A.cochain()(a, b));
      QuasiMatrix rhs =
          product == MatrixProduct::mnphi ? mnphi_multiply(phi, s, rho[a], rho[b]) : ordinary_multiply(rho[a], rho[b]);
      if (lhs != rhs) return CheckResult::fail({a, b}, "rho(ab) != rho(a)rho(b)");
    }
  return CheckResult::pass();
}

/// Exhaustive check of (X.Y).Z = phi(|X|,|Y|,|Z|) X.(Y.Z) over all triples
/// of matrix units. Products of units are tabulated once with
/// mnphi_multiply. Witness (i, j, k, l, p, q) for E_i^j, E_k^l, E_p^q.
inline CheckResult check_mnphi_quasiassociative(const Cocycle3& phi, const GradedSpace& s) {
  std::size_t n = s.dim();
  struct Entry {
    std::size_t row = 0, col = 0;
    Rational coeff;  // zero when the product vanishes
  };
  auto unit_of = [&](const QuasiMatrix& m) {
    Entry e;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j) != 0) {
          if (e.coeff != 0) throw Error("product of matrix units is not a multiple of a unit");
          e = {i, j, m(i, j)};
        }
    return e;
  };
  std::vector<Entry> table(n * n * n * n);
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          table[idx(i, j) * n * n + idx(k, l)] =
              unit_of(mnphi_multiply(phi, s, QuasiMatrix::unit(n, i, j), QuasiMatrix::unit(n, k, l)));
  auto mul = [&](const Entry& x, std::size_t k, std::size_t l) {
    if (x.coeff == 0) return Entry{};
    Entry e = table[idx(x.row, x.col) * n * n + idx(k, l)];
    e.coeff *= x.coeff;
    return e;
  };
  auto mul_left = [&](std::size_t i, std::size_t j, const Entry& y) {
    if (y.coeff == 0) return Entry{};
    Entry e = table[idx(i, j) * n * n + idx(y.row, y.col)];
    e.coeff *= y.coeff;
    return e;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Entry& xy = table[idx(i, j) * n * n + idx(k, l)];
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              Entry left = mul(xy, p, q);
              Entry right = mul_left(i, j, table[idx(k, l) * n * n + idx(p, q)]);
              Rational f = phi(unit_degree(s, i, j), unit_degree(s, k, l), unit_degree(s, p, q));
              bool same = left.coeff == f * right.coeff &&
                          (left.coeff == 0 || (left.row == right.row && left.col == right.col));
              if (!same) return CheckResult::fail({i, j, k, l, p, q}, "quasiassociativity of matrix units");
            }
        }
  return CheckResult::pass();
}

/// Factor phi^-1(|i|,|i|^-1,|i|) carried by coev on e_i (x) f^i.
inline Rational coev_factor(const Cocycle3& phi, const GradedSpace& s, std::size_t i) {
  std::size_t d = s.degree[i];
  return 1 / phi(d, s.group.inverse(d), d);
}

}  // namespace quasialg

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


#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "quasialg/cayley_dickson.hpp"
#include "quasialg/hadamard.hpp"
#include "quasialg/quasimatrix.hpp"

using namespace quasialg;

namespace {

QuasiMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  QuasiMatrix m(n);
  auto v = oracle::random_vector(rng, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

QuasiMatrix plain_product(const QuasiMatrix& a, const QuasiMatrix& b) {
  std::size_t n = a.dim();
  QuasiMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

}  // namespace

TEST(QuasiMatrix, TrivialCocycleGivesOrdinaryProduct) {
  std::mt19937_64 rng(17);
  Quasialgebra H = cd_algebra(2);
  GradedSpace s = regular_space(H);
  for (int t = 0; t < 5; ++t) {
    auto a = random_matrix(rng, 4), b = random_matrix(rng, 4);
    EXPECT_EQ(mnphi_multiply(H.phi(), s, a, b), plain_product(a, b));
    EXPECT_EQ(ordinary_multiply(a, b), plain_product(a, b));
  }
}

TEST(QuasiMatrix, RegularActionIsAnAction) {
  for (std::size_t level = 0; level <= 4; ++level) {
    Quasialgebra A = cd_algebra(level);
    EXPECT_TRUE(check_action(A, regular_action(A)).holds) << level;
  }
  Quasialgebra D = delta_algebra(5);
  EXPECT_TRUE(check_action(D, regular_action(D)).holds);
}

TEST(QuasiMatrix, CorruptedActionIsRejected) {
  Quasialgebra O = cd_algebra(3);
  ActionTable act = regular_action(O);
  act.at(3, 5, 6) *= -1;
  auto r = check_action(O, act);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.detail, "quasiassociativity");
  EXPECT_THROW(rho_from_action(O, act), PreconditionError);
  ActionTable bad_unit = regular_action(O);
  bad_unit.at(0, 1, 1) = 2;
  EXPECT_EQ(check_action(O, bad_unit).detail, "unit");
  ActionTable bad_degree = regular_action(O);
  bad_degree.at(2, 1, 4) = 1;
  EXPECT_EQ(check_action(O, bad_degree).detail, "degree");
}

TEST(QuasiMatrix, OctonionRepresentation) {
  Quasialgebra O = cd_algebra(3);
  GradedSpace s = regular_space(O);
  auto rho = rho_from_action(O, regular_action(O));
  EXPECT_TRUE(check_algebra_map(O, rho, O.phi(), s, MatrixProduct::mnphi).holds);
  auto r = check_algebra_map(O, rho, O.phi(), s, MatrixProduct::ordinary);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 2u);
  // The witness pair really breaks the plain product.
  std::size_t a = r.witness[0], b = r.witness[1];
  EXPECT_NE(rho[O.group().mul(a, b)].scaled(O.cochain()(a, b)), plain_product(rho[a], rho[b]));
  EXPECT_EQ(action_from_rho(O, rho, s).v, regular_action(O).v);
}

TEST(QuasiMatrix, AssociativeAlgebrasUseOrdinaryProduct) {
  for (std::size_t level = 0; level <= 2; ++level) {
    Quasialgebra A = cd_algebra(level);
    auto rho = rho_from_action(A, regular_action(A));
    EXPECT_TRUE(check_algebra_map(A, rho, A.phi(), regular_space(A), MatrixProduct::ordinary).holds);
  }
}

TEST(QuasiMatrix, QuasiassociativeOnUnits) {
  Quasialgebra O = cd_algebra(3);
  EXPECT_TRUE(check_mnphi_quasiassociative(O.phi(), regular_space(O)).holds);
  // Non-sign cocycle on Z3 x Z2 with repeated degrees.
  GroupSpec g({3, 2});
  Cochain F = Cochain::from_function(g, [](std::size_t x, std::size_t y) {
    if (x == 0 || y == 0) return Rational(1);
    return Rational(static_cast<long>(2 * x + y), static_cast<long>(x + 3));
  });
  GradedSpace s{g, {0, 1, 1, 3, 5}};
  EXPECT_TRUE(check_mnphi_quasiassociative(derive_phi(F), s).holds);
}

TEST(QuasiMatrix, QuasiassociativeOnRandomMatrices) {
  // Linear extension of the unit identity, checked on homogeneous pieces.
  std::mt19937_64 rng(23);
  Quasialgebra O = cd_algebra(3);
  GradedSpace s = regular_space(O);
  const GroupSpec& g = O.group();
  auto homogeneous = [&](std::size_t d) {
    QuasiMatrix m(8);
    auto v = oracle::random_vector(rng, 8);
    for (std::size_t i = 0; i < 8; ++i) m(i, g.mul(g.inverse(d), i)) = v[i];
    return m;
  };
  for (int t = 0; t < 10; ++t) {
    std::size_t dx = static_cast<std::size_t>(t % 8), dy = static_cast<std::size_t>((3 * t + 1) % 8),
                dz = static_cast<std::size_t>((5 * t + 2) % 8);
    auto x = homogeneous(dx), y = homogeneous(dy), z = homogeneous(dz);
    auto left = mnphi_multiply(O.phi(), s, mnphi_multiply(O.phi(), s, x, y), z);
    auto right = mnphi_multiply(O.phi(), s, x, mnphi_multiply(O.phi(), s, y, z)).scaled(O.phi()(dx, dy, dz));
    EXPECT_EQ(left, right) << t;
  }
}

TEST(QuasiMatrix, CoevFactors) {
  Quasialgebra O = cd_algebra(3);
  GradedSpace s = regular_space(O);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(coev_factor(O.phi(), s, i), 1);
  EXPECT_EQ(unit_degree(s, 3, 5), 6u);
}

TEST(QuasiMatrix, DimensionChecks) {
  Quasialgebra O = cd_algebra(3);
  EXPECT_THROW(mnphi_multiply(O.phi(), regular_space(O), QuasiMatrix(4), QuasiMatrix(8)), InputError);
  EXPECT_THROW(ordinary_multiply(QuasiMatrix(4), QuasiMatrix(8)), InputError);
}

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

#include <set>
#include <string>

#include "oracles.hpp"
#include "quasialg/hadamard.hpp"

using namespace quasialg;

TEST(Hadamard, Primes) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(7));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

TEST(Hadamard, QuadraticCharacterMatchesEulerCriterion) {
  for (long p : {3L, 5L, 7L, 11L, 13L, 19L, 23L, 31L}) {
    auto chi = qr_character(p);
    for (long a = -2 * p; a < 2 * p; ++a) EXPECT_EQ(chi(a), oracle::legendre(a, p)) << p << " " << a;
  }
  EXPECT_THROW(qr_character(9), InputError);
  EXPECT_THROW(qr_character(2), InputError);
}

TEST(Hadamard, PaleyMatrices) {
  for (long p : {3L, 7L, 11L, 19L, 23L}) {
    auto pm = paley_matrix(p);
    EXPECT_TRUE(is_hadamard(pm.skew)) << p;
    EXPECT_TRUE(is_hadamard(pm.normalized)) << p;
    EXPECT_TRUE(pm.normalized.is_normalized());
    EXPECT_FALSE(pm.skew.is_normalized());
  }
  EXPECT_THROW(paley_matrix(5), PreconditionError);
  EXPECT_THROW(paley_matrix(15), InputError);
}

TEST(Hadamard, IsHadamardRejects) {
  EXPECT_FALSE(is_hadamard(SignMatrix(2)));
  EXPECT_TRUE(is_hadamard(h4_symmetric()));
  EXPECT_TRUE(is_hadamard(maximal_excess(4)));
  EXPECT_FALSE(is_hadamard(maximal_excess(3)));
  EXPECT_THROW(SignMatrix::from_rows({{1, 1}, {1}}), InputError);
  EXPECT_THROW(SignMatrix::from_rows({{1, 0}, {1, 1}}), InputError);
}

TEST(Hadamard, SymmetricH4Algebra) {
  Quasialgebra A = h4_algebra();
  EXPECT_EQ(render_table(A), "e x y z\nx e -z -y\ny -z e -x\nz -y -x e\n");
  auto f = classify_basic(A);
  EXPECT_TRUE(f.associative);
  EXPECT_TRUE(f.commutative);
  auto s = simplicity_report(A);
  ASSERT_EQ(s.verdict, SimplicityVerdict::not_simple);
  Subspace expected(4);
  expected.insert({1, 1, 0, 0});
  expected.insert({0, 0, 1, -1});
  EXPECT_EQ(s.ideal, expected);
}

TEST(Hadamard, PaleyAlgebras) {
  for (long p : {3L, 7L}) {
    Quasialgebra A = paley_algebra(p);
    EXPECT_TRUE(classify_basic(A).altercommutative) << p;
    for (std::size_t x = 1; x < A.dim(); ++x) EXPECT_EQ(A.cochain()(x, x), -1) << p;
    EXPECT_EQ(simplicity_report(A).verdict, SimplicityVerdict::simple_certified) << p;
  }
  EXPECT_TRUE(check_alternative(paley_algebra(3)).holds());
  EXPECT_THROW(paley_algebra(11), PreconditionError);
}

TEST(Hadamard, Z3Tables) {
  Quasialgebra I = z3_table_i(), II = z3_table_ii();
  EXPECT_EQ(render_table(I), "e x y\nx -y e\ny e x\n");
  EXPECT_EQ(render_table(II), "e x y\nx y -e\ny e x\n");
  EXPECT_TRUE(classify_basic(I).commutative);
  EXPECT_FALSE(classify_basic(II).commutative);
  EXPECT_TRUE(classify_basic(II).altercommutative);
  EXPECT_EQ(simplicity_report(I).verdict, SimplicityVerdict::unknown);
  EXPECT_EQ(simplicity_report(II).verdict, SimplicityVerdict::unknown);
}

TEST(Hadamard, OrderTwoBlocksGiveExactlyTheTwoTables) {
  // Every normalized-or-not 2x2 Hadamard inner block on Z3 gives table I, table II or neither.
  std::set<std::string> tables;
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1})
        for (int d : {1, -1}) {
          auto H = SignMatrix::from_rows({{a, b}, {c, d}});
          if (!is_hadamard(H)) continue;
          tables.insert(render_table(Quasialgebra("t", bordered_cochain(H, GroupSpec({3})))));
        }
  EXPECT_TRUE(tables.count(render_table(z3_table_i())));
  EXPECT_TRUE(tables.count(render_table(z3_table_ii())));
}

TEST(Hadamard, DeltaAlgebras) {
  for (int n : {4, 5, 6}) {
    Quasialgebra A = delta_algebra(n);
    auto f = classify_basic(A);
    EXPECT_TRUE(f.commutative) << n;
    EXPECT_FALSE(f.associative) << n;
    ASSERT_EQ(f.nonassociative_witness.size(), 3u);
    const auto& w = f.nonassociative_witness;
    EXPECT_NE(A.phi()(w[0], w[1], w[2]), 1);
    EXPECT_EQ(simplicity_report(A).verdict, SimplicityVerdict::unknown) << n;
  }
  EXPECT_THROW(delta_cochain(3), InputError);
}

TEST(Hadamard, Z5Excess) {
  Quasialgebra A = z5_excess();
  EXPECT_EQ(A.dim(), 5u);
  EXPECT_TRUE(classify_basic(A).commutative);
  EXPECT_EQ(simplicity_report(A).verdict, SimplicityVerdict::unknown);
}

TEST(Hadamard, CochainNeedsNormalizedMatrix) {
  EXPECT_THROW(cochain_from_hadamard(paley_matrix(3).skew, GroupSpec({2, 2})), PreconditionError);
  EXPECT_THROW(cochain_from_hadamard(h4_symmetric(), GroupSpec({3})), InputError);
}

TEST(Hadamard, BasisNames) {
  EXPECT_EQ(basis_name(4, 3), "z");
  EXPECT_EQ(basis_name(8, 0), "e");
  EXPECT_EQ(basis_name(8, 3), "e3");
}

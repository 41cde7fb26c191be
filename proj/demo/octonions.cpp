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


// Builds the octonions as a twisted group algebra over (Z_2)^3, prints the
// multiplication table and a nontrivial associator, then compares the
// octonions with the sedenions on a few structural checks.

#include <iostream>

#include "quasialg/quasialg.hpp"

using namespace quasialg;

namespace {

void print_element(const Quasialgebra& A, const AlgebraElement& a) {
  bool first = true;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] == 0) continue;
    std::cout << (first ? "" : " + ") << to_display(a[i]) << " " << basis_name(A.dim(), i);
    first = false;
  }
  if (first) std::cout << "0";
  std::cout << "\n";
}

}  // namespace

int main() {
  Quasialgebra O = cd_algebra(3);
  std::cout << "octonion multiplication table\n" << render_table(O) << "\n";

  auto e1 = O.basis(1), e2 = O.basis(2), e4 = O.basis(4);
  std::cout << "(e1 e2) e4 = ";
  print_element(O, O.multiply(O.multiply(e1, e2), e4));
  std::cout << "e1 (e2 e4) = ";
  print_element(O, O.multiply(e1, O.multiply(e2, e4)));
  std::cout << "phi(e1,e2,e4) = " << to_display(O.phi()(1, 2, 4)) << "\n\n";

  for (std::size_t level : {3u, 4u}) {
    Quasialgebra A = cd_algebra(level);
    auto basic = classify_basic(A);
    std::cout << A.name() << " (dim " << A.dim() << ")\n"
              << "  associative      " << basic.associative << "\n"
              << "  altercommutative " << basic.altercommutative << "\n"
              << "  alternative      " << check_alternative(A).holds() << "\n"
              << "  composition      " << check_composition_euclidean(A).holds() << "\n"
              << "  simple           " << to_string(simplicity_report(A).verdict) << "\n";
  }
  return 0;
}

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
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "quasialg/cochain.hpp"
#include "quasialg/error.hpp"
#include "quasialg/group.hpp"
#include "quasialg/rational.hpp"
#include "quasialg/subspace.hpp"

namespace quasialg {

/// Element of k_F G as its coefficient list over the group basis.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t dim) : coeffs_(dim) {}
  explicit AlgebraElement(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { detail::canonicalize_all(coeffs_); }

  static AlgebraElement basis(std::size_t dim, std::size_t i, Rational c = 1) {
    AlgebraElement a(dim);
    a.coeffs_.at(i) = std::move(c);
    return a;
  }

  std::size_t dim() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// True iff every coefficient off the identity vanishes.
  bool is_scalar() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    same_dim(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    same_dim(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  AlgebraElement& operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void same_dim(const AlgebraElement& o) const {
    if (o.dim() != dim()) throw InputError("algebra element dimension mismatch");
  }

  std::vector<Rational> coeffs_;
};

/// The G-graded quasialgebra k_F G: the group algebra with product
/// x . y = F(x,y) xy. The associator phi = dF and braiding R are cached.
class Quasialgebra {
 public:
  Quasialgebra(std::string name, Cochain F)
      : name_(std::move(name)), F_(std::move(F)), phi_(derive_phi(F_)), R_(derive_R(F_)) {}

  const std::string& name() const { return name_; }
  const GroupSpec& group() const { return F_.group(); }
  std::size_t dim() const { return F_.size(); }
  const Cochain& cochain() const { return F_; }
  const Cocycle3& phi() const { return phi_; }
  const Braiding& braiding() const { return R_; }

  AlgebraElement basis(std::size_t i) const { return AlgebraElement::basis(dim(), i); }
  AlgebraElement one() const { return basis(0); }

  /// Bilinear extension of x . y = F(x,y) xy.
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    std::size_t n = dim();
    if (a.dim() != n || b.dim() != n) throw InputError("element does not belong to " + name_);
    AlgebraElement out(n);
    const GroupSpec& g = group();
    for (std::size_t x = 0; x < n; ++x) {
      if (a[x] == 0) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (b[y] == 0) continue;
        out[g.mul(x, y)] += a[x] * b[y] * F_(x, y);
      }
    }
    return out;
  }

  /// (a.b).c - a.(b.c)
  AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) const {
    return multiply(multiply(a, b), c) - multiply(a, multiply(b, c));
  }

 private:
  std::string name_;
  Cochain F_;
  Cocycle3 phi_;
  Braiding R_;
};

inline AlgebraElement multiply(const Quasialgebra& A, const AlgebraElement& a, const AlgebraElement& b) {
  return A.multiply(a, b);
}

struct BasicFlags {
  bool associative = false;
  bool commutative = false;
  bool altercommutative = false;
  bool braided_commutative_verified = false;
  std::vector<std::size_t> nonassociative_witness;  // first (x,y,z) with phi != 1
  std::vector<std::size_t> noncommutative_witness;  // first (x,y) with F(x,y) != F(y,x)
};

inline BasicFlags classify_basic(const Quasialgebra& A) {
  BasicFlags flags;
  std::size_t n = A.dim();
  const auto& phi = A.phi();
  flags.associative = true;
  for (std::size_t x = 0; x < n && flags.associative; ++x)
    for (std::size_t y = 0; y < n && flags.associative; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (phi(x, y, z) != 1) {
          flags.associative = false;
          flags.nonassociative_witness = {x, y, z};
          break;
        }
  flags.commutative = true;
  for (std::size_t x = 0; x < n && flags.commutative; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (A.cochain()(x, y) != A.cochain()(y, x)) {
        flags.commutative = false;
        flags.noncommutative_witness = {x, y};
        break;
      }
  flags.altercommutative = check_altercommutative(A.braiding());
  flags.braided_commutative_verified = true;
  for (std::size_t x = 0; x < n && flags.braided_commutative_verified; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto xy = A.multiply(A.basis(x), A.basis(y));
      auto yx = A.multiply(A.basis(y), A.basis(x));
      if (xy != A.braiding()(x, y) * yx) {
        flags.braided_commutative_verified = false;
        break;
      }
    }
  return flags;
}

/// Result of the alternativity test, evaluated two independent ways.
struct AlternativeReport {
  CheckResult phi_form;  // the phi/R conditions on basis triples
  CheckResult direct;    // polarized (aa)b = a(ab), (ab)b = a(bb) on basis sums

  bool holds() const { return phi_form.holds && direct.holds; }
  bool methods_agree() const { return phi_form.holds == direct.holds; }
};

inline AlternativeReport check_alternative(const Quasialgebra& A) {
  AlternativeReport report;
  std::size_t n = A.dim();
  const auto& phi = A.phi();
  const auto& R = A.braiding();
  for (std::size_t x = 0; x < n && report.phi_form.holds; ++x)
    for (std::size_t y = 0; y < n && report.phi_form.holds; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        // phi^-1(y,x,z) + R(x,y) phi^-1(x,y,z) = 1 + R(x,y)
        if (1 / phi(y, x, z) + R(x, y) / phi(x, y, z) != 1 + R(x, y)) {
          report.phi_form = CheckResult::fail({x, y, z}, "left alternative");
          break;
        }
        // phi(x,y,z) + R(z,y) phi(x,z,y) = 1 + R(z,y)
        if (phi(x, y, z) + R(z, y) * phi(x, z, y) != 1 + R(z, y)) {
          report.phi_form = CheckResult::fail({x, y, z}, "right alternative");
          break;
        }
      }
  // Polarization: a = x + y, b = z covers the left law; a = x, b = y + z
  // covers the right law.
  auto left = [&](const AlgebraElement& a, const AlgebraElement& b) { return A.associator(a, a, b).is_zero(); };
  auto right = [&](const AlgebraElement& a, const AlgebraElement& b) { return A.associator(a, b, b).is_zero(); };
  for (std::size_t x = 0; x < n && report.direct.holds; ++x)
    for (std::size_t y = x; y < n && report.direct.holds; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto sum = A.basis(x) + A.basis(y);
        if (!left(sum, A.basis(z))) {
          report.direct = CheckResult::fail({x, y, z}, "(aa)b != a(ab) with a = x+y, b = z");
          break;
        }
        auto zsum = A.basis(y) + A.basis(z);
        if (!right(A.basis(x), zsum)) {
          report.direct = CheckResult::fail({x, y, z}, "(ab)b != a(bb) with a = x, b = y+z");
          break;
        }
        if (!right(A.basis(z), sum)) {
          report.direct = CheckResult::fail({z, x, y}, "(ab)b != a(bb) with a = x, b = y+z");
          break;
        }
      }
  return report;
}

/// Diagonal linear map sigma(x) = s(x) x.
class Involution {
 public:
  Involution() = default;
  explicit Involution(std::vector<Rational> s) : s_(std::move(s)) {
    detail::canonicalize_all(s_);
    if (s_.empty() || s_[0] != 1) throw InputError("diagonal involution must have s(e) = 1");
    for (const auto& v : s_)
      if (v == 0) throw InputError("diagonal involution has a zero entry");
  }

  /// s(e) = 1 and s(x) = -1 otherwise.
  static Involution standard(std::size_t dim) {
    std::vector<Rational> s(dim, Rational(-1));
    s.at(0) = 1;
    return Involution(std::move(s));
  }

  std::size_t dim() const { return s_.size(); }
  const Rational& operator()(std::size_t x) const { return s_[x]; }
  const std::vector<Rational>& values() const { return s_; }

  bool squares_to_one() const {
    for (const auto& v : s_)
      if (v * v != 1) return false;
    return true;
  }

  AlgebraElement apply(const AlgebraElement& a) const {
    if (a.dim() != dim()) throw InputError("involution dimension mismatch");
    AlgebraElement out = a;
    for (std::size_t x = 0; x < dim(); ++x) out[x] *= s_[x];
    return out;
  }

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  std::vector<Rational> s_;
};

/// sigma(x) = F(x,x) x.
inline Involution canonical_involution(const Quasialgebra& A) {
  std::vector<Rational> s(A.dim());
  for (std::size_t x = 0; x < A.dim(); ++x) s[x] = A.cochain()(x, x);
  return Involution(std::move(s));
}

/// All s : G -> {+1,-1} with s(e) = 1 and s(x) s(y) / s(xy) = R(x,y),
/// i.e. every diagonal involution of k_F G. Limited to |G| <= 16.
inline std::vector<Involution> find_diagonal_involutions(const Quasialgebra& A) {
  constexpr std::size_t kMaxDim = 16;
  std::size_t n = A.dim();
  if (n > kMaxDim) throw ResourceError("diagonal involution search limited to |G| <= 16");
  const GroupSpec& g = A.group();
  const auto& R = A.braiding();
  std::vector<Involution> found;
  std::vector<int> target(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    if (!is_sign(R.values()[k])) return found;
    target[k] = R.values()[k] == 1 ? 1 : -1;
  }
  // Every constraint is checked once its largest index has been assigned.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> due(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) due[std::max({x, y, g.mul(x, y)})].emplace_back(x, y);
  std::vector<int> s(n, 1);
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == n) {
      found.emplace_back(std::vector<Rational>(s.begin(), s.end()));
      return;
    }
    for (int v : {1, -1}) {
      if (k == 0 && v == -1) break;
      s[k] = v;
      bool ok = true;
      for (auto [x, y] : due[k])
        if (s[x] * s[y] * s[g.mul(x, y)] != target[x * n + y]) {
          ok = false;
          break;
        }
      if (ok) assign(k + 1);
    }
  };
  assign(0);
  return found;
}

/// Whether sigma(x) = s(x) x is a strong involution (a + sigma(a) and
/// a.sigma(a) scalar for all a). `detail` names the first failing clause:
/// "order" (an element of order > 2), "sign" (s is not 1 on e and -1
/// elsewhere), "altercommutative", or "direct" (probe verification).
inline CheckResult check_strong_involution(const Quasialgebra& A, const Involution& s) {
  const GroupSpec& g = A.group();
  std::size_t n = A.dim();
  if (s.dim() != n) throw InputError("involution dimension mismatch");
  for (std::size_t x = 0; x < n; ++x)
    if (g.order_of(x) > 2) return CheckResult::fail({x}, "order");
  if (s(0) != 1) return CheckResult::fail({0}, "sign");
  for (std::size_t x = 1; x < n; ++x)
    if (s(x) != -1) return CheckResult::fail({x}, "sign");
  const auto& R = A.braiding();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      int expected = (x == 0 || y == 0 || x == y) ? 1 : -1;
      if (R(x, y) != expected) return CheckResult::fail({x, y}, "altercommutative");
    }
  auto scalar_pair = [&](const AlgebraElement& a) {
    auto sa = s.apply(a);
    return (a + sa).is_scalar() && A.multiply(a, sa).is_scalar();
  };
  for (std::size_t x = 0; x < n; ++x) {
    if (!scalar_pair(A.basis(x))) return CheckResult::fail({x}, "direct");
    for (std::size_t y = x + 1; y < n; ++y)
      if (!scalar_pair(A.basis(x) + A.basis(y))) return CheckResult::fail({x, y}, "direct");
  }
  return CheckResult::pass();
}

/// Outcome of a composition test: the closed-form cochain conditions and a
/// direct multiplicativity check of the norm on basis probes x and x+y.
struct CompositionReport {
  CheckResult conditions;
  CheckResult direct;

  bool holds() const { return conditions.holds && direct.holds; }
  bool methods_agree() const { return conditions.holds == direct.holds; }
};

namespace detail {

inline std::vector<AlgebraElement> basis_probes(const Quasialgebra& A) {
  std::vector<AlgebraElement> probes;
  for (std::size_t x = 0; x < A.dim(); ++x) probes.push_back(A.basis(x));
  for (std::size_t x = 0; x < A.dim(); ++x)
    for (std::size_t y = x + 1; y < A.dim(); ++y) probes.push_back(A.basis(x) + A.basis(y));
  return probes;
}

inline std::vector<std::size_t> support(const AlgebraElement& a) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] != 0) s.push_back(i);
  return s;
}

template <class Norm>
CheckResult direct_norm_check(const Quasialgebra& A, Norm&& norm) {
  auto probes = basis_probes(A);
  for (const auto& a : probes)
    for (const auto& b : probes)
      if (norm(A.multiply(a, b)) != norm(a) * norm(b)) {
        auto w = support(a);
        auto wb = support(b);
        w.insert(w.end(), wb.begin(), wb.end());
        return CheckResult::fail(std::move(w), "norm not multiplicative on probes");
      }
  return CheckResult::pass();
}

}  // namespace detail

/// Euclidean norm q(x) = 1 on (Z_2)^n: multiplicative iff F^2 == 1 and
/// F(x,xz) F(y,yz) + F(x,yz) F(y,xz) = 0 for x != y.
inline CompositionReport check_composition_euclidean(const Quasialgebra& A) {
  const GroupSpec& g = A.group();
  if (!g.is_elementary_two()) throw PreconditionError("Euclidean composition test requires G = (Z_2)^n");
  const Cochain& F = A.cochain();
  std::size_t n = A.dim();
  CompositionReport report;
  for (std::size_t x = 0; x < n && report.conditions.holds; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (F(x, y) * F(x, y) != 1) {
        report.conditions = CheckResult::fail({x, y}, "F^2 != 1");
        break;
      }
  for (std::size_t x = 0; x < n && report.conditions.holds; ++x)
    for (std::size_t y = 0; y < n && report.conditions.holds; ++y) {
      if (x == y) continue;
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t xz = g.mul(x, z), yz = g.mul(y, z);
        if (F(x, xz) * F(y, yz) + F(x, yz) * F(y, xz) != 0) {
          report.conditions = CheckResult::fail({x, y, z}, "F(x,xz)F(y,yz) + F(x,yz)F(y,xz) != 0");
          break;
        }
      }
    }
  report.direct = detail::direct_norm_check(A, [](const AlgebraElement& a) {
    Rational q = 0;
    for (const auto& c : a.coefficients()) q += c * c;
    return q;
  });
  return report;
}

/// Composition with respect to n(a) = a . sigma(a) for a strong diagonal
/// involution sigma(x) = s(x) x.
inline CompositionReport check_composition_general(const Quasialgebra& A, const Involution& s) {
  if (auto strong = check_strong_involution(A, s); !strong)
    throw PreconditionError("involution is not strong (" + strong.detail + ")");
  const GroupSpec& g = A.group();
  const Cochain& F = A.cochain();
  std::size_t n = A.dim();
  CompositionReport report;
  for (std::size_t x = 0; x < n && report.conditions.holds; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xy = g.mul(x, y);
      if (s(xy) * F(x, y) * F(x, y) * F(xy, xy) != s(x) * s(y) * F(x, x) * F(y, y)) {
        report.conditions = CheckResult::fail({x, y}, "s(xy)F(x,y)^2F(xy,xy) != s(x)s(y)F(x,x)F(y,y)");
        break;
      }
    }
  for (std::size_t x = 0; x < n && report.conditions.holds; ++x)
    for (std::size_t y = 0; y < n && report.conditions.holds; ++y) {
      if (x == y) continue;
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t xz = g.mul(x, z), yz = g.mul(y, z), xyz = g.mul(x, yz);
        if (F(x, xz) * F(y, yz) * F(z, z) * s(z) + F(x, yz) * F(y, xz) * F(xyz, xyz) * s(xyz) != 0) {
          report.conditions = CheckResult::fail({x, y, z}, "cross term does not cancel");
          break;
        }
      }
    }
  report.direct = detail::direct_norm_check(A, [&](const AlgebraElement& a) { return A.multiply(a, s.apply(a))[0]; });
  return report;
}

/// Smallest subspace containing `seed` and closed under left and right
/// multiplication by every basis element.
inline Subspace ideal_closure(const Quasialgebra& A, const std::vector<AlgebraElement>& seed) {
  std::size_t n = A.dim();
  Subspace ideal(n);
  std::vector<AlgebraElement> pending;
  for (const auto& a : seed)
    if (ideal.insert(a.coefficients())) pending.push_back(a);
  while (!pending.empty()) {
    AlgebraElement a = std::move(pending.back());
    pending.pop_back();
    for (std::size_t x = 0; x < n && ideal.dim() < n; ++x) {
      for (auto prod : {A.multiply(A.basis(x), a), A.multiply(a, A.basis(x))})
        if (ideal.insert(prod.coefficients())) pending.push_back(std::move(prod));
    }
  }
  return ideal;
}

enum class SimplicityVerdict { simple_certified, not_simple, unknown };

inline const char* to_string(SimplicityVerdict v) {
  switch (v) {
    case SimplicityVerdict::simple_certified:
      return "certified";
    case SimplicityVerdict::not_simple:
      return "not_simple";
    case SimplicityVerdict::unknown:
      return "unknown";
  }
  return "unknown";
}

struct SimplicityReport {
  SimplicityVerdict verdict = SimplicityVerdict::unknown;
  Subspace ideal;                // proper ideal when not_simple
  std::size_t probes_checked = 0;  // probes whose closure was computed
};

/// Semi-decision for simplicity.
///
/// Certified when the canonical sigma(x) = F(x,x) x is a strong involution
/// and |G| - 2 != 0 (the coefficient field is Q). Otherwise the ideals
/// generated by x, x + y and x - y are computed; a proper one proves the
/// algebra is not simple, and no proper one leaves the verdict unknown.
inline SimplicityReport simplicity_report(const Quasialgebra& A) {
  SimplicityReport report;
  std::size_t n = A.dim();
  if (n != 2 && check_strong_involution(A, canonical_involution(A))) {
    report.verdict = SimplicityVerdict::simple_certified;
    return report;
  }
  auto probe = [&](const AlgebraElement& a) {
    ++report.probes_checked;
    auto ideal = ideal_closure(A, {a});
    if (ideal.dim() > 0 && ideal.dim() < n) {
      report.verdict = SimplicityVerdict::not_simple;
      report.ideal = std::move(ideal);
      return true;
    }
    return false;
  };
  for (std::size_t x = 0; x < n; ++x)
    if (probe(A.basis(x))) return report;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      if (probe(A.basis(x) + A.basis(y))) return report;
      if (probe(A.basis(x) - A.basis(y))) return report;
    }
  report.verdict = SimplicityVerdict::unknown;
  return report;
}

}  // namespace quasialg

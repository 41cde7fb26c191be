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
#include <cstdint>
#include <limits>
#include <thread>
#include <utility>
#include <vector>

#include "quasialg/cayley_dickson.hpp"
#include "quasialg/error.hpp"
#include "quasialg/rational.hpp"

namespace quasialg {

/// Sign of the standard 2^n-onion product, F(x,y) = (-1)^f(x,y), on group
/// indices (bit n-i of an index is the variable x_i).
///
/// Two evaluators are provided. `parity_monomials` sums the compiled
/// monomials. `parity` unrolls the doubling recursion directly and costs
/// O(n) per pair; it is what the multiplication kernel uses, since the
/// monomial count grows roughly like 3^n.
class CompiledSign {
 public:
  using Monomial = std::pair<std::uint32_t, std::uint32_t>;

  CompiledSign() = default;
  CompiledSign(std::size_t level, std::vector<Monomial> monomials) : level_(level), monomials_(std::move(monomials)) {}

  std::size_t level() const { return level_; }
  std::size_t dim() const { return std::size_t{1} << level_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  int parity_monomials(std::uint32_t x, std::uint32_t y) const {
    int p = 0;
    for (const auto& [mx, my] : monomials_) p ^= ((x & mx) == mx && (y & my) == my) ? 1 : 0;
    return p;
  }

  /// f((x,a),(y,b)) = f(x,y)(1+a) + f(y,x) a + b [x != e] + a b, peeled one
  /// level at a time from the least significant bit.
  int parity(std::uint32_t x, std::uint32_t y) const {
    unsigned p = 0;
    for (std::size_t l = 0; l < level_; ++l) {
      unsigned a = x & 1u, b = y & 1u;
      x >>= 1;
      y >>= 1;
      p ^= b & (x != 0 ? 1u : 0u);
      p ^= a & b;
      if (a) std::swap(x, y);
    }
    return static_cast<int>(p);
  }

  int sign(std::uint32_t x, std::uint32_t y) const { return parity(x, y) ? -1 : 1; }

 private:
  std::size_t level_ = 0;
  std::vector<Monomial> monomials_;
};

/// Monomials of the level-n sign polynomial, masks rewritten in index bits.
inline CompiledSign compile_sign(std::size_t level) {
  if (level > kMaxSignLevel) throw ResourceError("compile_sign limited to level 13");
  SignPolynomial f = sign_polynomial_for_level(level);
  auto to_index_bits = [level](std::uint64_t mask) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < level; ++i)
      if ((mask >> i) & 1u) m |= std::uint32_t{1} << (level - 1 - i);
    return m;
  };
  std::vector<CompiledSign::Monomial> monomials;
  monomials.reserve(f.monomials().size());
  for (const auto& [mx, my] : f.monomials()) monomials.emplace_back(to_index_bits(mx), to_index_bits(my));
  return CompiledSign(level, std::move(monomials));
}

namespace detail {

inline mpz_class common_denominator(const std::vector<Rational>& v) {
  mpz_class l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  return l;
}

inline std::vector<mpz_class> scale_to_integers(const std::vector<Rational>& v, const mpz_class& l) {
  std::vector<mpz_class> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return out;
}

inline bool fits_int64(const std::vector<mpz_class>& v, std::uint64_t& max_abs) {
  max_abs = 0;
  for (const auto& x : v) {
    if (!x.fits_slong_p()) return false;
    long s = x.get_si();
    if (s == std::numeric_limits<long>::min()) return false;
    max_abs = std::max<std::uint64_t>(max_abs, static_cast<std::uint64_t>(s < 0 ? -s : s));
  }
  return true;
}

inline void set_from_int128(mpz_class& out, __int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  auto hi = static_cast<std::uint64_t>(u >> 64), lo = static_cast<std::uint64_t>(u);
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &hi);
  out <<= 64;
  mpz_class low;
  mpz_import(low.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &lo);
  out += low;
  if (neg) out = -out;
}

template <class Body>
void parallel_for(std::size_t n, unsigned workers, Body&& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n == 0 ? 1 : n)));
  if (workers == 1) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> threads;
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = std::min(n, w * chunk), hi = std::min(n, lo + chunk);
    threads.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace detail

/// result[z] = sum_x a[x] b[x ^ z] (-1)^f(x, x ^ z).
///
/// Coefficients are brought to a common denominator and accumulated as
/// integers, in 128-bit arithmetic when the magnitudes allow it and in GMP
/// integers otherwise. Each output index is owned by one worker, so the
/// result does not depend on `workers`.
inline std::vector<Rational> fast_multiply(const CompiledSign& cs, const std::vector<Rational>& a,
                                           const std::vector<Rational>& b, unsigned workers = 1) {
  std::size_t n = cs.dim();
  if (a.size() != n || b.size() != n) throw InputError("vector length must be 2^level");
  mpz_class la = detail::common_denominator(a), lb = detail::common_denominator(b);
  auto ia = detail::scale_to_integers(a, la);
  auto ib = detail::scale_to_integers(b, lb);
  std::vector<mpz_class> acc(n);
  std::uint64_t ma = 0, mb = 0;
  bool small = detail::fits_int64(ia, ma) && detail::fits_int64(ib, mb);
  if (small && ma != 0 && mb != 0) {
    // n * ma * mb must stay below 2^126.
    unsigned __int128 bound = static_cast<unsigned __int128>(ma) * mb;
    small = bound <= (static_cast<unsigned __int128>(1) << 126) / n;
  }
  if (small) {
    std::vector<long> sa(n), sb(n);
    for (std::size_t i = 0; i < n; ++i) {
      sa[i] = ia[i].get_si();
      sb[i] = ib[i].get_si();
    }
    detail::parallel_for(n, workers, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t z = lo; z < hi; ++z) {
        __int128 sum = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (sa[x] == 0) continue;
          std::size_t y = x ^ z;
          if (sb[y] == 0) continue;
          __int128 t = static_cast<__int128>(sa[x]) * sb[y];
          sum += cs.parity(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)) ? -t : t;
        }
        detail::set_from_int128(acc[z], sum);
      }
    });
  } else {
    detail::parallel_for(n, workers, [&](std::size_t lo, std::size_t hi) {
      mpz_class t;
      for (std::size_t z = lo; z < hi; ++z) {
        mpz_class sum = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (ia[x] == 0) continue;
          std::size_t y = x ^ z;
          if (ib[y] == 0) continue;
          t = ia[x] * ib[y];
          if (cs.parity(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)))
            sum -= t;
          else
            sum += t;
        }
        acc[z] = std::move(sum);
      }
    });
  }
  mpz_class den = la * lb;
  std::vector<Rational> out(n);
  for (std::size_t z = 0; z < n; ++z) {
    out[z] = Rational(acc[z], den);
    out[z].canonicalize();
  }
  return out;
}

}  // namespace quasialg

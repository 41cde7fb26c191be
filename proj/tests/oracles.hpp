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


// Reference implementations used as test oracles. None of them calls into
// the cochain machinery: products come from the classical pair formula,
// signs from the doubling rule applied to plain integer tables.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "quasialg/rational.hpp"

namespace oracle {

using quasialg::Rational;
using Vec = std::vector<Rational>;

/// Conjugation: (a, b)* = (a*, -b), identity on scalars.
inline Vec conj(const Vec& u) {
  if (u.size() == 1) return u;
  Vec out(u.size());
  Vec a(u.size() / 2), b(u.size() / 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = u[2 * i];
    b[i] = u[2 * i + 1];
  }
  Vec ca = conj(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[2 * i] = ca[i];
    out[2 * i + 1] = -b[i];
  }
  return out;
}

/// Cayley-Dickson product on coefficient vectors of length 2^n. An element
/// is a + v b with a at even and b at odd positions, and
///   (a + v b)(c + v d) = (ac - d b*) + v(a* d + c b).
inline Vec cd_mul(const Vec& u, const Vec& w) {
  std::size_t n = u.size();
  if (n == 1) return {u[0] * w[0]};
  std::size_t h = n / 2;
  Vec a(h), b(h), c(h), d(h);
  for (std::size_t i = 0; i < h; ++i) {
    a[i] = u[2 * i];
    b[i] = u[2 * i + 1];
    c[i] = w[2 * i];
    d[i] = w[2 * i + 1];
  }
  Vec ac = cd_mul(a, c), dbs = cd_mul(d, conj(b)), asd = cd_mul(conj(a), d), cb = cd_mul(c, b);
  Vec out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[2 * i] = ac[i] - dbs[i];
    out[2 * i + 1] = asd[i] + cb[i];
  }
  return out;
}

inline Vec basis(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

/// Sign exponents of the standard tower at `level` as a dense 0/1 table,
/// grown with the doubling rule on exponents:
///   f(x,vy) = f(x,y) + f(x,x), f(vx,y) = f(y,x), f(vx,vy) = 1 + f(x,x) + f(y,x).
inline std::vector<std::uint8_t> sign_table(std::size_t level) {
  std::vector<std::uint8_t> f{0};
  std::size_t n = 1;
  for (std::size_t l = 0; l < level; ++l) {
    std::size_t m = 2 * n;
    std::vector<std::uint8_t> g(m * m);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::uint8_t fxy = f[x * n + y], fyx = f[y * n + x], fxx = f[x * n + x];
        g[(2 * x) * m + 2 * y] = fxy;
        g[(2 * x) * m + 2 * y + 1] = fxy ^ fxx;
        g[(2 * x + 1) * m + 2 * y] = fyx;
        g[(2 * x + 1) * m + 2 * y + 1] = 1 ^ fxx ^ fyx;
      }
    f = std::move(g);
    n = m;
  }
  return f;
}

/// sum_{x,y} a[x] b[y] (-1)^f(x,y) e_{x^y} by a plain double loop.
inline Vec slow_multiply(const std::vector<std::uint8_t>& f, const Vec& a, const Vec& b) {
  std::size_t n = a.size();
  Vec out(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (a[x] == 0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (b[y] == 0) continue;
      Rational t = a[x] * b[y];
      if (f[x * n + y])
        out[x ^ y] -= t;
      else
        out[x ^ y] += t;
    }
  }
  return out;
}

/// Euler's criterion.
inline int legendre(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  long r = 1, base = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

inline Vec random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
  Vec v(n);
  for (auto& c : v) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return v;
}

inline Rational euclidean_norm(const Vec& v) {
  Rational q = 0;
  for (const auto& c : v) q += c * c;
  return q;
}

}  // namespace oracle

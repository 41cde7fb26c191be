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

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
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

/// e_i . e_j = sum_k c[i][j][k] e_k for a G-graded algebra with homogeneous
/// basis; degrees[i] is the group index of |e_i|.
struct StructureConstants {
  GroupSpec group;
  std::size_t dim = 0;
  std::vector<Rational> c;
  std::vector<std::size_t> degrees;
  std::optional<std::size_t> unit_index;
  std::optional<Cocycle3> phi;
  std::optional<Braiding> braiding;

  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim + j) * dim + k]; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim + j) * dim + k]; }

  /// c[i][j][k] == 0 unless |i||j| = |k|.
  bool is_graded() const {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if ((*this)(i, j, k) != 0 && group.mul(degrees[i], degrees[j]) != degrees[k]) return false;
    return true;
  }
};

/// c[x][y][xy] = F(x,y), degrees |x| = x, unit e.
inline StructureConstants structure_constants_of(const Quasialgebra& A) {
  StructureConstants sc;
  sc.group = A.group();
  sc.dim = A.dim();
  sc.c.assign(sc.dim * sc.dim * sc.dim, Rational(0));
  sc.degrees.resize(sc.dim);
  for (std::size_t x = 0; x < sc.dim; ++x) {
    sc.degrees[x] = x;
    for (std::size_t y = 0; y < sc.dim; ++y) sc.at(x, y, A.group().mul(x, y)) = A.cochain()(x, y);
  }
  sc.unit_index = 0;
  sc.phi = A.phi();
  sc.braiding = A.braiding();
  return sc;
}

/// Generator t^row_col of degree (|row|, |col|).
struct Gen {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Gen&, const Gen&) = default;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

/// Product of generators, read with right-nested brackets; empty = 1.
using Word = std::vector<Gen>;

/// Noncommutative polynomial: word -> nonzero coefficient.
class Polynomial {
 public:
  using Terms = std::map<Word, Rational>;

  Polynomial() = default;

  void add(const Word& w, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }

  Polynomial scaled(const Rational& s) const {
    Polynomial p;
    if (s == 0) return p;
    for (const auto& [w, c] : terms_) p.terms_.emplace(w, c * s);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Integer coefficients with gcd 1 and a positive first coefficient.
  Polynomial canonical() const {
    if (terms_.empty()) return {};
    mpz_class l = 1, g = 0;
    for (const auto& [w, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [w, c] : terms_) {
      mpz_class v = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational s(l, g);
    s.canonicalize();
    if (terms_.begin()->second < 0) s = -s;
    return scaled(s);
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend auto operator<=>(const Polynomial& a, const Polynomial& b) {
    return std::lexicographical_compare_three_way(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                                  [](const auto& x, const auto& y) {
                                                    if (auto c = x.first <=> y.first; c != 0) return c;
                                                    if (x.second < y.second) return std::strong_ordering::less;
                                                    if (y.second < x.second) return std::strong_ordering::greater;
                                                    return std::strong_ordering::equal;
                                                  });
  }

 private:
  Terms terms_;
};

inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += "t[" + std::to_string(w[i].row) + "][" + std::to_string(w[i].col) + "]";
  }
  return s;
}

/// "t[0][0]*t[0][0] - t[1][0]*t[1][0] - t[0][0] = 0"
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0 = 0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (w.empty())
      s += to_display(mag);
    else if (mag == 1)
      s += to_string(w);
    else
      s += to_display(mag) + "*" + to_string(w);
  }
  return s + " = 0";
}

enum class RelationVariant { M1, M0, MD, MD0 };

inline const char* to_string(RelationVariant v) {
  switch (v) {
    case RelationVariant::M1:
      return "M1";
    case RelationVariant::M0:
      return "M0";
    case RelationVariant::MD:
      return "MD";
    case RelationVariant::MD0:
      return "MD0";
  }
  return "M1";
}

inline RelationVariant parse_variant(const std::string& s) {
  if (s == "M1") return RelationVariant::M1;
  if (s == "M0") return RelationVariant::M0;
  if (s == "MD") return RelationVariant::MD;
  if (s == "MD0") return RelationVariant::MD0;
  throw InputError("unknown relation variant '" + s + "'");
}

/// A set of relations "p = 0" kept in canonical form without repeats.
class RelationSet {
 public:
  RelationSet() = default;

  /// Canonicalizes p and adds it unless zero or already present.
  bool insert(const Polynomial& p) {
    if (p.is_zero()) return false;
    return set_.insert(p.canonical()).second;
  }

  bool contains(const Polynomial& p) const { return !p.is_zero() && set_.count(p.canonical()) > 0; }
  std::size_t size() const { return set_.size(); }
  bool empty() const { return set_.empty(); }
  auto begin() const { return set_.begin(); }
  auto end() const { return set_.end(); }

  std::string to_text() const {
    std::string s;
    for (const auto& p : set_) s += to_string(p) + "\n";
    return s;
  }

  friend bool operator==(const RelationSet&, const RelationSet&) = default;

 private:
  std::set<Polynomial> set_;
};

/// Extended associator on G x G degrees ((a,g),(b,h),(c,f)) -> phi(g,h,f) / phi(a,b,c).
inline Rational extended_eval_phi(const Cocycle3& phi, std::pair<std::size_t, std::size_t> d1,
                                  std::pair<std::size_t, std::size_t> d2, std::pair<std::size_t, std::size_t> d3) {
  return phi(d1.second, d2.second, d3.second) / phi(d1.first, d2.first, d3.first);
}

/// Extended braiding ((a,g),(b,h)) -> R(g,h) / R(a,b).
inline Rational extended_eval_R(const Braiding& R, std::pair<std::size_t, std::size_t> d1,
                                std::pair<std::size_t, std::size_t> d2) {
  return R(d1.second, d2.second) / R(d1.first, d2.first);
}

/// G x G degree of a word: componentwise product of generator degrees.
inline std::pair<std::size_t, std::size_t> word_degree(const StructureConstants& c, const Word& w) {
  std::size_t a = 0, b = 0;
  for (const auto& g : w) {
    a = c.group.mul(a, c.degrees[g.row]);
    b = c.group.mul(b, c.degrees[g.col]);
  }
  return {a, b};
}

/// Every term of p has the same G x G degree.
inline bool is_homogeneous(const StructureConstants& c, const Polynomial& p) {
  std::optional<std::pair<std::size_t, std::size_t>> deg;
  for (const auto& [w, coeff] : p.terms()) {
    auto d = word_degree(c, w);
    if (deg && *deg != d) return false;
    deg = d;
  }
  return true;
}

namespace detail {

/// sum_a c_ij^a t^k_a - sum_{a,b} c_ab^k t^a_i t^b_j
inline Polynomial m1_relation(const StructureConstants& c, std::size_t i, std::size_t j, std::size_t k) {
  Polynomial p;
  std::size_t n = c.dim;
  for (std::size_t a = 0; a < n; ++a) p.add({Gen{k, a}}, c(i, j, a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p.add({Gen{a, i}, Gen{b, j}}, -c(a, b, k));
  return p;
}

/// Replaces generators by 1 (empty word) or 0 as `rule` dictates.
template <class Rule>
Polynomial substitute(const Polynomial& p, Rule&& rule) {
  Polynomial out;
  for (const auto& [w, coeff] : p.terms()) {
    Word nw;
    bool zero = false;
    for (const auto& g : w) {
      int r = rule(g);  // 0: vanish, 1: unit, 2: keep
      if (r == 0) {
        zero = true;
        break;
      }
      if (r == 2) nw.push_back(g);
    }
    if (!zero) out.add(nw, coeff);
  }
  return out;
}

}  // namespace detail

/// Defining relations of the comeasuring algebra and its quotients.
///
/// M1: one relation per (i,j,k). M0: M1 with t^0_0 = 1, t^i_0 = t^0_i = 0
/// for the unit index 0. MD: diagonal generators t_i = t^i_i with
/// c_ij^k (t_k - t_i t_j). MD0: MD with t_e = 1. With `quasicommutative`
/// every pair of surviving generators adds t1 t2 - R(|t1|,|t2|) t2 t1
/// under the extended braiding.
inline RelationSet generate_relations(const StructureConstants& c, RelationVariant variant, bool quasicommutative) {
  std::size_t n = c.dim;
  bool unital = variant == RelationVariant::M0 || variant == RelationVariant::MD0;
  if (unital && !c.unit_index) throw PreconditionError(std::string(to_string(variant)) + " needs a unit index");
  if (quasicommutative && !c.braiding) throw PreconditionError("quasicommutative relations need a braiding");
  std::size_t u = c.unit_index.value_or(0);
  RelationSet rels;
  std::vector<Gen> gens;
  switch (variant) {
    case RelationVariant::M1:
    case RelationVariant::M0: {
      auto rule = [&](const Gen& g) {
        if (variant == RelationVariant::M1) return 2;
        if (g.row == u && g.col == u) return 1;
        if (g.row == u || g.col == u) return 0;
        return 2;
      };
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) rels.insert(detail::substitute(detail::m1_relation(c, i, j, k), rule));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          if (rule(Gen{r, s}) == 2) gens.push_back(Gen{r, s});
      break;
    }
    case RelationVariant::MD:
    case RelationVariant::MD0: {
      auto rule = [&](const Gen& g) { return (variant == RelationVariant::MD0 && g.row == u) ? 1 : 2; };
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            if (c(i, j, k) == 0) continue;
            Polynomial p;
            p.add({Gen{k, k}}, c(i, j, k));
            p.add({Gen{i, i}, Gen{j, j}}, -c(i, j, k));
            rels.insert(detail::substitute(p, rule));
          }
      for (std::size_t r = 0; r < n; ++r)
        if (rule(Gen{r, r}) == 2) gens.push_back(Gen{r, r});
      break;
    }
  }
  if (quasicommutative) {
    const Braiding& R = *c.braiding;
    for (std::size_t x = 0; x < gens.size(); ++x)
      for (std::size_t y = x + 1; y < gens.size(); ++y) {
        const Gen& g1 = gens[x];
        const Gen& g2 = gens[y];
        Rational r = extended_eval_R(R, {c.degrees[g1.row], c.degrees[g1.col]}, {c.degrees[g2.row], c.degrees[g2.col]});
        Polynomial p;
        p.add({g1, g2}, 1);
        p.add({g2, g1}, -r);
        rels.insert(p);
      }
  }
  return rels;
}

namespace detail {

/// Row echelon span of sparse polynomials; pivot = first word.
class SparseSpan {
 public:
  void insert(Polynomial p) {
    p = reduce(std::move(p));
    if (p.is_zero()) return;
    Word pivot = p.terms().begin()->first;
    rows_.emplace(std::move(pivot), std::move(p));
  }

  Polynomial reduce(Polynomial p) const {
    std::set<Word> stuck;
    while (true) {
      auto it = p.terms().begin();
      while (it != p.terms().end() && stuck.count(it->first)) ++it;
      if (it == p.terms().end()) return p;
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        // A term whose word is no pivot cannot be cleared by any row with a
        // larger pivot, and rows with smaller pivots were already used.
        stuck.insert(it->first);
        continue;
      }
      Rational f = it->second / row->second.terms().begin()->second;
      p += row->second.scaled(-f);
    }
  }

  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }

 private:
  std::map<Word, Polynomial> rows_;
};

}  // namespace detail

/// Checks that beta(e_i) = sum_a e_a (x) t^a_i is multiplicative modulo
/// `rels`: for every (i,j) and every k, the e_k component of
/// beta(e_i . e_j) - beta(e_i) beta(e_j) lies in the span of the relations.
/// Witness (i, j, k).
inline CheckResult check_coaction(const StructureConstants& c, const RelationSet& rels) {
  detail::SparseSpan span;
  for (const auto& r : rels) span.insert(r);
  std::size_t n = c.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Polynomial> component(n);
      // beta(e_i . e_j) = sum_a c_ij^a sum_k e_k (x) t^k_a
      for (std::size_t a = 0; a < n; ++a) {
        if (c(i, j, a) == 0) continue;
        for (std::size_t k = 0; k < n; ++k) component[k].add({Gen{k, a}}, c(i, j, a));
      }
      // beta(e_i) beta(e_j) = sum_{a,b} (e_a . e_b) (x) t^a_i t^b_j
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t k = 0; k < n; ++k)
            if (c(a, b, k) != 0) component[k].add({Gen{a, i}, Gen{b, j}}, -c(a, b, k));
      for (std::size_t k = 0; k < n; ++k)
        if (!span.contains(component[k])) return CheckResult::fail({i, j, k}, "component outside the relation span");
    }
  return CheckResult::pass();
}

struct PresentationDiff {
  bool matches = true;
  std::vector<Polynomial> missing;     // expected but not generated
  std::vector<Polynomial> unexpected;  // generated but not expected
};

/// Set equality of canonical relations (equality up to nonzero scalars).
inline PresentationDiff match_presentation(const RelationSet& rels, const RelationSet& expected) {
  PresentationDiff diff;
  for (const auto& p : expected)
    if (!rels.contains(p)) diff.missing.push_back(p);
  for (const auto& p : rels)
    if (!expected.contains(p)) diff.unexpected.push_back(p);
  diff.matches = diff.missing.empty() && diff.unexpected.empty();
  return diff;
}

}  // namespace quasialg

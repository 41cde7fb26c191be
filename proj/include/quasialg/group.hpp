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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "quasialg/error.hpp"

namespace quasialg {

/// Element of a finite abelian group written as a residue vector.
struct GroupElement {
  std::vector<int> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A finite abelian group Z_{n_1} x ... x Z_{n_k}, written additively.
///
/// Elements are enumerated by mixed-radix counting with the last factor
/// fastest, so index 0 is the identity and for (Z_2)^n the index is the
/// residue vector read as a binary number (first coordinate most
/// significant). Group multiplication on indices is what the rest of the
/// library uses; GroupElement is the readable form.
class GroupSpec {
 public:
  /// Trivial group.
  GroupSpec() : GroupSpec(std::vector<int>{}) {}

  explicit GroupSpec(std::vector<int> orders) : orders_(std::move(orders)) {
    size_ = 1;
    for (int o : orders_) {
      if (o < 2) throw InputError("cyclic factor order must be >= 2, got " + std::to_string(o));
      if (size_ > (std::size_t{1} << 31) / static_cast<std::size_t>(o))
        throw ResourceError("group too large");
      size_ *= static_cast<std::size_t>(o);
    }
    strides_.assign(orders_.size(), 1);
    for (std::size_t i = orders_.size(); i-- > 1;)
      strides_[i - 1] = strides_[i] * static_cast<std::size_t>(orders_[i]);
    elementary_two_ = std::all_of(orders_.begin(), orders_.end(), [](int o) { return o == 2; });
    if (size_ <= kTableLimit) build_tables();
  }

  std::size_t size() const { return size_; }
  std::size_t rank() const { return orders_.size(); }
  const std::vector<int>& orders() const { return orders_; }

  /// True iff every element has order <= 2, i.e. the group is (Z_2)^n.
  bool is_elementary_two() const { return elementary_two_; }

  static constexpr std::size_t identity_index() { return 0; }

  GroupElement element_at(std::size_t index) const {
    check_index(index);
    GroupElement g;
    g.residues.resize(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i)
      g.residues[i] = static_cast<int>((index / strides_[i]) % static_cast<std::size_t>(orders_[i]));
    return g;
  }

  std::size_t index_of(const GroupElement& g) const {
    check_element(g);
    std::size_t index = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i)
      index += static_cast<std::size_t>(g.residues[i]) * strides_[i];
    return index;
  }

  GroupElement identity() const { return element_at(0); }

  GroupElement mul(const GroupElement& a, const GroupElement& b) const {
    check_element(a);
    check_element(b);
    GroupElement c;
    c.residues.resize(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) c.residues[i] = (a.residues[i] + b.residues[i]) % orders_[i];
    return c;
  }

  GroupElement inverse(const GroupElement& a) const {
    check_element(a);
    GroupElement c;
    c.residues.resize(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) c.residues[i] = (orders_[i] - a.residues[i]) % orders_[i];
    return c;
  }

  /// Product of elements given by index.
  std::size_t mul(std::size_t a, std::size_t b) const {
    if (tables_) return tables_->mul[a * size_ + b];
    if (elementary_two_) return a ^ b;
    std::size_t index = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      auto o = static_cast<std::size_t>(orders_[i]);
      std::size_t da = (a / strides_[i]) % o, db = (b / strides_[i]) % o;
      index += ((da + db) % o) * strides_[i];
    }
    return index;
  }

  std::size_t inverse(std::size_t a) const {
    if (tables_) return tables_->inv[a];
    if (elementary_two_) return a;
    std::size_t index = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      auto o = static_cast<std::size_t>(orders_[i]);
      index += ((o - (a / strides_[i]) % o) % o) * strides_[i];
    }
    return index;
  }

  /// Order of the element at `index`.
  std::size_t order_of(std::size_t index) const {
    check_index(index);
    std::size_t result = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      auto o = static_cast<std::size_t>(orders_[i]);
      std::size_t d = (index / strides_[i]) % o;
      if (d != 0) result = std::lcm(result, o / std::gcd(o, d));
    }
    return result;
  }

  /// G x Z_2 with the new factor last: (x, bit) has index 2*index(x) + bit.
  GroupSpec doubled() const {
    auto o = orders_;
    o.push_back(2);
    return GroupSpec(std::move(o));
  }

  std::string to_string() const {
    if (orders_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (i) s += "x";
      s += "Z" + std::to_string(orders_[i]);
    }
    return s;
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.orders_ == b.orders_; }

 private:
  static constexpr std::size_t kTableLimit = 256;

  struct Tables {
    std::vector<std::uint32_t> mul;
    std::vector<std::uint32_t> inv;
  };

  void build_tables() {
    auto t = std::make_shared<Tables>();
    t->mul.resize(size_ * size_);
    t->inv.resize(size_);
    for (std::size_t a = 0; a < size_; ++a) {
      for (std::size_t b = 0; b < size_; ++b) {
        std::size_t index = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
          auto o = static_cast<std::size_t>(orders_[i]);
          index += (((a / strides_[i]) % o + (b / strides_[i]) % o) % o) * strides_[i];
        }
        t->mul[a * size_ + b] = static_cast<std::uint32_t>(index);
        if (index == 0) t->inv[a] = static_cast<std::uint32_t>(b);
      }
    }
    tables_ = std::move(t);
  }

  void check_index(std::size_t index) const {
    if (index >= size_) throw InputError("group index out of range");
  }

  void check_element(const GroupElement& g) const {
    if (g.residues.size() != orders_.size()) throw InputError("group element dimension mismatch");
    for (std::size_t i = 0; i < orders_.size(); ++i)
      if (g.residues[i] < 0 || g.residues[i] >= orders_[i]) throw InputError("residue out of range");
  }

  std::vector<int> orders_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
  bool elementary_two_ = true;
  std::shared_ptr<const Tables> tables_;
};

inline GroupSpec make_group(std::vector<int> orders) { return GroupSpec(std::move(orders)); }

inline GroupElement elem_mul(const GroupSpec& g, const GroupElement& a, const GroupElement& b) { return g.mul(a, b); }

inline GroupElement elem_inverse(const GroupSpec& g, const GroupElement& a) { return g.inverse(a); }

}  // namespace quasialg

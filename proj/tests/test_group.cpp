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

#include "quasialg/group.hpp"

using namespace quasialg;

TEST(Group, SizesAndIdentity) {
  EXPECT_EQ(make_group({2, 2, 2}).size(), 8u);
  EXPECT_EQ(make_group({}).size(), 1u);
  EXPECT_EQ(make_group({3}).size(), 3u);
  GroupSpec g({2, 3});
  EXPECT_EQ(g.identity(), (GroupElement{{0, 0}}));
  EXPECT_EQ(g.index_of(g.identity()), 0u);
}

TEST(Group, RejectsBadOrders) {
  EXPECT_THROW(make_group({1}), InputError);
  EXPECT_THROW(make_group({2, 0}), InputError);
  EXPECT_THROW(make_group({-3}), InputError);
}

TEST(Group, ElementArithmetic) {
  GroupSpec g({2, 2, 2});
  EXPECT_EQ(elem_mul(g, {{1, 0, 0}}, {{0, 1, 0}}), (GroupElement{{1, 1, 0}}));
  EXPECT_EQ(elem_inverse(g, {{1, 1, 0}}), (GroupElement{{1, 1, 0}}));
  GroupSpec z3({3});
  EXPECT_EQ(elem_mul(z3, {{2}}, {{2}}), (GroupElement{{1}}));
  EXPECT_EQ(elem_inverse(z3, {{1}}), (GroupElement{{2}}));
  EXPECT_EQ(elem_inverse(z3, z3.identity()), z3.identity());
  EXPECT_EQ(elem_mul(z3, {{2}}, z3.identity()), (GroupElement{{2}}));
  EXPECT_THROW(elem_mul(g, {{1, 0}}, {{0, 1, 0}}), InputError);
  EXPECT_THROW(elem_inverse(z3, {{3}}), InputError);
}

TEST(Group, EnumerationIsMixedRadixLastFastest) {
  GroupSpec g({2, 3});
  EXPECT_EQ(g.element_at(1), (GroupElement{{0, 1}}));
  EXPECT_EQ(g.element_at(3), (GroupElement{{1, 0}}));
  GroupSpec e({2, 2, 2});
  EXPECT_EQ(e.element_at(4), (GroupElement{{1, 0, 0}}));
}

class GroupLaws : public ::testing::TestWithParam<std::vector<int>> {};

TEST_P(GroupLaws, Exhaustive) {
  GroupSpec g(GetParam());
  std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(g.index_of(g.element_at(i)), i);
    EXPECT_EQ(g.mul(i, g.inverse(i)), 0u);
    EXPECT_EQ(g.index_of(g.inverse(g.element_at(i))), g.inverse(i));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      EXPECT_EQ(g.mul(a, b), g.mul(b, a));
      EXPECT_EQ(g.index_of(g.mul(g.element_at(a), g.element_at(b))), g.mul(a, b));
      for (std::size_t c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    }
}

INSTANTIATE_TEST_SUITE_P(Groups, GroupLaws,
                         ::testing::Values(std::vector<int>{}, std::vector<int>{2}, std::vector<int>{3},
                                           std::vector<int>{2, 2, 2}, std::vector<int>{4, 3},
                                           std::vector<int>{2, 2, 2, 2}, std::vector<int>{5}));

TEST(Group, LargeGroupsSkipTables) {
  GroupSpec big(std::vector<int>(10, 2));
  EXPECT_TRUE(big.is_elementary_two());
  EXPECT_EQ(big.mul(5, 3), 6u);
  GroupSpec cyc({1000});
  EXPECT_EQ(cyc.mul(999, 2), 1u);
  EXPECT_EQ(cyc.inverse(1), 999u);
  EXPECT_EQ(cyc.order_of(250), 4u);
}

TEST(Group, OrdersAndDoubling) {
  GroupSpec g({4, 2});
  EXPECT_EQ(g.order_of(0), 1u);
  EXPECT_EQ(g.order_of(g.index_of({{1, 0}})), 4u);
  EXPECT_EQ(g.order_of(g.index_of({{2, 1}})), 2u);
  EXPECT_FALSE(g.is_elementary_two());
  GroupSpec d = GroupSpec({2, 2}).doubled();
  EXPECT_EQ(d.orders(), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(d.to_string(), "Z2xZ2xZ2");
}

// Copyright 2026 The IESDS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "iesds/hypergraph.h"

#include <gtest/gtest.h>

#include "example_games.h"
#include "iesds/errors.h"

namespace iesds {
namespace {

using ::iesds::testing::H;
using ::iesds::testing::P;

TEST(PlayerSetTest, OrdersLexicographicallyOnMembers) {
  EXPECT_LT(P({1}), P({1, 2}));
  EXPECT_LT(P({1, 2}), P({1, 3}));
  EXPECT_LT(P({1, 3}), P({2}));
  EXPECT_LT(P({1, 2, 3}), P({1, 3}));
  EXPECT_FALSE(P({2}) < P({2}));
}

TEST(PlayerSetTest, SetAlgebra) {
  EXPECT_TRUE(P({1}).IsSubsetOf(P({1, 2})));
  EXPECT_FALSE(P({1, 3}).IsSubsetOf(P({1, 2})));
  EXPECT_EQ(P({1, 2}).Intersection(P({2, 3})), P({2}));
  EXPECT_EQ(P({1}).Union(P({3})), P({1, 3}));
  EXPECT_EQ(P({1, 3}).size(), 2);
  EXPECT_EQ(PlayerSet::All(3), P({1, 2, 3}));
}

TEST(HypergraphTest, DeduplicatesAndSorts) {
  const Hypergraph h = H(3, {{1, 3}, {1, 2}, {2, 1}});
  ASSERT_EQ(h.arcs().size(), 2u);
  EXPECT_EQ(h.arcs()[0], P({1, 2}));
  EXPECT_TRUE(h.HasArc(P({1, 3})));
  EXPECT_FALSE(h.HasArc(P({2, 3})));
}

TEST(HypergraphTest, RejectsEmptyOrOutOfRangeArcs) {
  EXPECT_THROW(Hypergraph(3, {PlayerSet()}), InputError);
  EXPECT_THROW(H(2, {{1, 3}}), InputError);
}

TEST(HypergraphTest, CoversAndArcsContaining) {
  const Hypergraph h = H(3, {{1, 2}, {2, 3}});
  EXPECT_TRUE(h.Covers(P({2})));
  EXPECT_TRUE(h.Covers(P({2, 3})));
  EXPECT_FALSE(h.Covers(P({1, 3})));
  EXPECT_EQ(h.ArcsContaining(1).size(), 2u);
  EXPECT_EQ(h.ArcsContaining(0).size(), 1u);
}

TEST(ClosureTest, HbarMattersAddsPairIntersection) {
  EXPECT_EQ(ClosureUnderIntersection(H(4, {{1, 2, 3}, {1, 2, 4}})),
            H(4, {{1, 2, 3}, {1, 2, 4}, {1, 2}}));
}

TEST(ClosureTest, SingleArcIsClosed) {
  EXPECT_EQ(ClosureUnderIntersection(H(3, {{1, 2, 3}})), H(3, {{1, 2, 3}}));
}

TEST(ClosureTest, PairwiseArcsGainSingletonsOnly) {
  EXPECT_EQ(ClosureUnderIntersection(H(3, {{1, 2}, {2, 3}, {1, 3}})),
            H(3, {{1, 2}, {2, 3}, {1, 3}, {1}, {2}, {3}}));
}

TEST(ClosureTest, IsIdempotentAndExtensive) {
  const Hypergraph h = H(4, {{1, 2, 3}, {2, 3, 4}, {1, 4}, {3, 4}});
  const Hypergraph c = ClosureUnderIntersection(h);
  EXPECT_EQ(ClosureUnderIntersection(c), c);
  for (PlayerSet a : h.arcs()) EXPECT_TRUE(c.HasArc(a));
  for (PlayerSet a : c.arcs()) {
    for (PlayerSet b : c.arcs()) {
      const PlayerSet x = a.Intersection(b);
      if (!x.empty()) EXPECT_TRUE(c.HasArc(x));
    }
  }
}

}  // namespace
}  // namespace iesds

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

#include "iesds/game.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "example_games.h"
#include "iesds/errors.h"

namespace iesds {
namespace {

using ::iesds::testing::Atom;
using ::iesds::testing::CombiningStepGame;
using ::iesds::testing::HbarMattersGame;
using ::iesds::testing::HInfluencesOutcomeGame;
using ::iesds::testing::MakeSkeleton;
using ::iesds::testing::R;

bool HasAtom(const Game& g, const PreferenceAtom& a) {
  return std::find(g.atoms().begin(), g.atoms().end(), a) != g.atoms().end();
}

TEST(SkeletonTest, RejectsDegenerateShapes) {
  EXPECT_THROW(MakeSkeleton({{"a"}}), InputError);
  EXPECT_THROW(MakeSkeleton({{"a"}, {}}), InputError);
  EXPECT_THROW(MakeSkeleton({{"a", "a"}, {"x"}}), InputError);
  EXPECT_THROW(Skeleton({"1", "1"}, {{"a"}, {"b"}}), InputError);
}

TEST(SkeletonTest, ContextsAreMixedRadixLowestOpponentFirst) {
  const Skeleton sk = MakeSkeleton({{"U", "D"}, {"L", "R"}, {"l", "r"}});
  EXPECT_EQ(sk.num_contexts(0), 4);
  EXPECT_EQ(sk.ContextIndex(0, {-1, 1, 0}), 2);
  EXPECT_EQ(sk.OpponentStrategy(0, 2, 1), 1);
  EXPECT_EQ(sk.OpponentStrategy(0, 2, 2), 0);
  EXPECT_EQ(sk.ContextProfile(1, 3), (std::vector<int>{1, -1, 1}));
  EXPECT_EQ(sk.DescribeContext(0, 1), "(L,r)");
  for (std::int64_t i = 0; i < sk.num_profiles(); ++i) {
    EXPECT_EQ(sk.ProfileIndex(sk.Profile(i)), i);
  }
}

TEST(SkeletonTest, FindRejectsUnknownNames) {
  const Skeleton sk = MakeSkeleton({{"U", "D"}, {"L"}});
  EXPECT_EQ(sk.FindPlayer("2"), 1);
  EXPECT_THROW(sk.FindPlayer("9"), InputError);
  EXPECT_THROW(sk.FindStrategy(0, "Z"), InputError);
}

TEST(GameFromPayoffsTest, CombiningStepPlayerTwoPrefersL) {
  const Game g = CombiningStepGame();
  EXPECT_TRUE(HasAtom(g, Atom(g.skeleton(), 2, {"U", "l"}, "L", "R")));
  EXPECT_FALSE(HasAtom(g, Atom(g.skeleton(), 2, {"U", "l"}, "R", "L")));
}

TEST(GameFromPayoffsTest, HbarMattersPlayerOnePrefersDOverAAtR) {
  const Game g = HbarMattersGame();
  EXPECT_TRUE(HasAtom(g, Atom(g.skeleton(), 1, {"R", "X", "Y"}, "D", "A")));
}

TEST(GameFromPayoffsTest, ConstantPayoffsGiveNoAtoms) {
  const Game g = HbarMattersGame();
  EXPECT_TRUE(g.AtomsOf(2).empty());
  EXPECT_TRUE(g.AtomsOf(3).empty());
}

TEST(GameFromPayoffsTest, MissingProfileIsValidationError) {
  const Skeleton sk = MakeSkeleton({{"U", "D"}, {"L"}});
  PayoffTable t;
  t[{0, 0}] = {1, 1};
  try {
    GameFromPayoffs(sk, t);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    ASSERT_EQ(e.details().size(), 1u);
  }
}

TEST(ValidateGameTest, PayoffGamesAreStrictPartialOrders) {
  EXPECT_TRUE(ValidateGame(CombiningStepGame()).empty());
  EXPECT_TRUE(ValidateGame(HInfluencesOutcomeGame()).empty());
  EXPECT_TRUE(ValidateGame(HbarMattersGame()).empty());
}

TEST(ValidateGameTest, ReportsAsymmetry) {
  const Skeleton sk = MakeSkeleton({{"a", "b"}, {"x"}});
  const Game g(sk, {{0, 0, 0, 1}, {0, 0, 1, 0}});
  const auto v = ValidateGame(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, OrderViolation::Kind::kAsymmetry);
}

TEST(ValidateGameTest, ReportsMissingTransitiveAtom) {
  const Skeleton sk = MakeSkeleton({{"a", "b", "d"}, {"x"}});
  const Game g(sk, {{0, 0, 0, 1}, {0, 0, 1, 2}});
  const auto v = ValidateGame(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, OrderViolation::Kind::kTransitivity);
  EXPECT_EQ(v[0].a, 0);
  EXPECT_EQ(v[0].c, 2);
}

TEST(ValidateGameTest, ReportsIrreflexivity) {
  const Skeleton sk = MakeSkeleton({{"a", "b"}, {"x"}});
  const Game g(sk, {{0, 0, 1, 1}});
  const auto v = ValidateGame(g);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, OrderViolation::Kind::kIrreflexivity);
}

TEST(SdCheckTest, CombiningStepRIsGloballyDominated) {
  const Game g = CombiningStepGame();
  const Restriction full = Restriction::Full(g.skeleton());
  EXPECT_FALSE(IsUndominated(g, OptimalityNotion::kGlobal, 1, 1, full));
  EXPECT_TRUE(IsUndominated(g, OptimalityNotion::kGlobal, 1, 0, full));
}

TEST(SdCheckTest, SingleStrategyAlwaysSurvives) {
  const Game g = HbarMattersGame();
  const Restriction full = Restriction::Full(g.skeleton());
  for (auto notion : {OptimalityNotion::kLocal, OptimalityNotion::kGlobal}) {
    EXPECT_TRUE(IsUndominated(g, notion, 2, 0, full));
  }
}

TEST(SdCheckTest, HInfluencesOutcomeUDominatedDNot) {
  const Game g = HInfluencesOutcomeGame();
  const Restriction full = Restriction::Full(g.skeleton());
  EXPECT_FALSE(IsUndominated(g, OptimalityNotion::kLocal, 0, 0, full));
  EXPECT_TRUE(IsUndominated(g, OptimalityNotion::kLocal, 0, 1, full));
}

TEST(SdCheckTest, EmptyOpponentProductMakesAnyAlternativeDominate) {
  const Game g = HInfluencesOutcomeGame();
  Restriction r = Restriction::Full(g.skeleton());
  r.set_mask(1, 0);
  EXPECT_FALSE(IsUndominated(g, OptimalityNotion::kLocal, 0, 1, r));
}

TEST(SdCheckTest, GlobalAlternativesMayLieOutsideRestriction) {
  const Game g = HInfluencesOutcomeGame();
  Restriction r = Restriction::Full(g.skeleton());
  r.Erase(0, 1);
  EXPECT_TRUE(IsUndominated(g, OptimalityNotion::kLocal, 0, 0, r));
  EXPECT_FALSE(IsUndominated(g, OptimalityNotion::kGlobal, 0, 0, r));
}

TEST(RestrictionTest, IntersectMatchesCombinedOutcomes) {
  const Skeleton sk = CombiningStepGame().skeleton();
  const Restriction a = R(sk, "({U,D},{L},{l,r})");
  const Restriction b = R(sk, "({U,D},{L,R},{l})");
  EXPECT_EQ(Intersect(a, b), R(sk, "({U,D},{L},{l})"));
  EXPECT_EQ(Intersect(a, a), a);
  EXPECT_EQ(Intersect(Restriction::Full(sk), a), a);
  EXPECT_TRUE(IsSubset(Intersect(a, b), a));
  EXPECT_FALSE(IsSubset(a, b));
}

TEST(RestrictionTest, MismatchedShapesAreInputErrors) {
  const Restriction a(std::vector<std::uint64_t>{1, 1});
  const Restriction b(std::vector<std::uint64_t>{1, 1, 1});
  EXPECT_THROW(Intersect(a, b), InputError);
  EXPECT_THROW(IsSubset(a, b), InputError);
}

TEST(RestrictionTest, ToStringUsesCanonicalOrder) {
  const Skeleton sk = CombiningStepGame().skeleton();
  EXPECT_EQ(R(sk, "({D,U},{L},{r,l})").ToString(sk), "({U,D},{L},{l,r})");
}

}  // namespace
}  // namespace iesds

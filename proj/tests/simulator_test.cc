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

#include "iesds/simulator.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "example_games.h"
#include "iesds/elimination.h"
#include "iesds/errors.h"
#include "iesds/random.h"

namespace iesds {
namespace {

using ::iesds::testing::CombiningStepGame;
using ::iesds::testing::H;
using ::iesds::testing::HInfluencesOutcomeGame;
using ::iesds::testing::IntermediateStatesMDoublePrime;
using ::iesds::testing::IntermediateStatesMPrime;
using ::iesds::testing::Msg;
using ::iesds::testing::P;
using ::iesds::testing::ProtocolRunScript;
using ::iesds::testing::R;

// Conclude texts and pictures of one round, in trace order.
std::vector<std::string> Summarize(const SimulationResult& result,
                                   const Skeleton& sk, int round) {
  std::vector<std::string> out;
  for (const TraceEvent& e : result.trace) {
    if (e.round != round) continue;
    if (e.kind == TraceEvent::Kind::kConclude) out.push_back(e.text);
    if (e.kind == TraceEvent::Kind::kPicture) {
      out.push_back(sk.label(e.player) + " pictures " + e.picture.ToString(sk));
    }
  }
  return out;
}

class ProtocolRunTest : public ::testing::Test {
 protected:
  ProtocolRunTest()
      : game_(HInfluencesOutcomeGame()),
        h_(H(3, {{1, 2}, {2, 3}, {1, 3}})),
        result_(Simulate(
            game_, h_,
            Schedule::Scripted(ProtocolRunScript(game_.skeleton())))) {}

  Game game_;
  Hypergraph h_;
  SimulationResult result_;
};

TEST_F(ProtocolRunTest, SendsFollowTheScript) {
  EXPECT_EQ(result_.sent, ProtocolRunScript(game_.skeleton()));
  EXPECT_EQ(result_.sent.size(), 16u);
}

TEST_F(ProtocolRunTest, OnlyPlayerOneConcludesBeforeCommunication) {
  EXPECT_EQ(Summarize(result_, game_.skeleton(), 0),
            (std::vector<std::string>{"1 concludes that U is dominated",
                                      "1 pictures ({D},{L,R},{A,B})"}));
}

TEST_F(ProtocolRunTest, LastDominanceMessageTriggersTheCascade) {
  for (int round = 1; round <= 11; ++round) {
    EXPECT_TRUE(Summarize(result_, game_.skeleton(), round).empty())
        << "round " << round;
  }
  EXPECT_EQ(
      Summarize(result_, game_.skeleton(), 12),
      (std::vector<std::string>{
          "1 concludes that 2 knows that 1 knows that U is dominated",
          "1 concludes that 2 knows that L is dominated",
          "1 pictures ({D},{R},{A,B})",
          "2 concludes that 1 knows that U is dominated",
          "2 pictures ({D},{L,R},{A,B})", "2 concludes that L is dominated",
          "2 concludes that 1 knows that 2 knows that L is dominated",
          "2 pictures ({D},{R},{A,B})"}));
  for (int round = 13; round <= 16; ++round) {
    EXPECT_TRUE(Summarize(result_, game_.skeleton(), round).empty())
        << "round " << round;
  }
}

TEST_F(ProtocolRunTest, PlayerThreeNeverLearnsL) {
  for (const TraceEvent& e : result_.trace) {
    if (e.kind == TraceEvent::Kind::kConclude) EXPECT_NE(e.player, 2);
  }
  EXPECT_EQ(result_.final_pictures[2], Restriction::Full(game_.skeleton()));
}

TEST_F(ProtocolRunTest, PrefixesAgreeWithOperators) {
  const VerifyReport report = VerifyRun(result_, game_, h_);
  EXPECT_TRUE(report.ok) << report.first_divergence;
  EXPECT_EQ(report.prefixes_checked, 17);
}

TEST_F(ProtocolRunTest, ExhaustiveContinuationReachesCompleteOutcome) {
  Schedule s = Schedule::Scripted(ProtocolRunScript(game_.skeleton()));
  s.exhaustive = true;
  s.seed = 1;
  const SimulationResult r = Simulate(game_, h_, s);
  EXPECT_EQ(r.messages_sent, AllMessages(h_, game_));
  const Skeleton& sk = game_.skeleton();
  EXPECT_EQ(r.final_pictures[0], R(sk, "({D},{R},{A,B})"));
  EXPECT_EQ(r.final_pictures[1], R(sk, "({D},{R},{A,B})"));
  EXPECT_EQ(r.final_pictures[2], R(sk, "({D},{L,R},{A,B})"));
  const VerifyReport report = VerifyRun(r, game_, h_);
  EXPECT_TRUE(report.ok) << report.first_divergence;
}

TEST(SimulateTest, EmptyScriptOnlyPrivateEliminations) {
  const Game g = CombiningStepGame();
  const Hypergraph h = H(3, {{1, 2}, {1, 3}});
  const SimulationResult r = Simulate(g, h, Schedule::Scripted({}));
  const Skeleton& sk = g.skeleton();
  EXPECT_EQ(r.final_pictures[0], Restriction::Full(sk));
  EXPECT_EQ(r.final_pictures[1], R(sk, "({U,D},{L},{l,r})"));
  EXPECT_EQ(r.final_pictures[2], R(sk, "({U,D},{L,R},{l})"));
  for (const TraceEvent& e : r.trace) {
    EXPECT_NE(e.kind, TraceEvent::Kind::kSend);
  }
  EXPECT_TRUE(VerifyRun(r, g, h).ok);
}

TEST(SimulateTest, ExhaustiveSeededRunsMatchCompleteOutcome) {
  const Game g = CombiningStepGame();
  const Hypergraph h = H(3, {{1, 2}, {1, 3}});
  const Restriction complete = OutcomeComplete(g, h, OptimalityNotion::kGlobal);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const SimulationResult r = Simulate(g, h, Schedule::Seeded(seed));
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(r.final_pictures[i].mask(i), complete.mask(i));
    }
    EXPECT_TRUE(VerifyRun(r, g, h).ok);
  }
}

TEST(SimulateTest, SameSeedSameTrace) {
  const Game g = HInfluencesOutcomeGame();
  const Hypergraph h = H(3, {{1, 2}, {2, 3}, {1, 3}});
  const SimulationResult a = Simulate(g, h, Schedule::Seeded(42));
  const SimulationResult b = Simulate(g, h, Schedule::Seeded(42));
  EXPECT_EQ(a.trace, b.trace);
  const SimulationResult c = Simulate(g, h, Schedule::Seeded(43));
  EXPECT_NE(a.sent, c.sent);
}

TEST(SimulateTest, FinalPicturesAreScheduleIndependent) {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    RandomGameOptions options;
    const Skeleton sk = RandomSkeleton(rng, options);
    const Game g = RandomPayoffGame(rng, sk);
    const Hypergraph h = RandomHypergraph(rng, sk.num_players(), 0.4);
    const SimulationResult a = Simulate(g, h, Schedule::Seeded(rng.Next()));
    const SimulationResult b = Simulate(g, h, Schedule::Seeded(rng.Next()));
    EXPECT_EQ(a.final_pictures, b.final_pictures);
  }
}

TEST(SimulateTest, IntermediatePrefixesMatchOperators) {
  const Game g = CombiningStepGame();
  const Hypergraph h = H(3, {{1, 2}, {1, 3}});
  const Skeleton& sk = g.skeleton();
  const MessageSet mp = IntermediateStatesMPrime(sk);
  const MessageSet mpp = IntermediateStatesMDoublePrime(sk);
  std::vector<Message> script(mp.begin(), mp.end());
  SimulationResult r = Simulate(g, h, Schedule::Scripted(script));
  EXPECT_EQ(r.final_pictures[0].mask(0), R(sk, "({U,D},{L},{l})").mask(0));
  for (const Message& m : mpp) {
    if (!mp.Contains(m)) script.push_back(m);
  }
  r = Simulate(g, h, Schedule::Scripted(script));
  EXPECT_EQ(r.final_pictures[0].mask(0), R(sk, "({U},{L},{l})").mask(0));
  EXPECT_TRUE(VerifyRun(r, g, h).ok);
}

TEST(SimulateTest, RejectsBadScripts) {
  const Game g = HInfluencesOutcomeGame();
  const Skeleton& sk = g.skeleton();
  const Hypergraph h = H(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_THROW(Simulate(g, h,
                        Schedule::Scripted(
                            {Msg(sk, 2, P({1, 2}), {"U", "A"}, "R", "L")})),
               ValidationError);
  EXPECT_THROW(Simulate(g, h,
                        Schedule::Scripted(
                            {Msg(sk, 2, P({1, 3}), {"U", "A"}, "L", "R")})),
               ValidationError);
  const Message ok = Msg(sk, 2, P({1, 2}), {"U", "A"}, "L", "R");
  EXPECT_THROW(Simulate(g, h, Schedule::Scripted({ok, ok})), InputError);
  Schedule bad_order = Schedule::Scripted({});
  bad_order.evaluation_order = {0, 0, 1};
  EXPECT_THROW(Simulate(g, h, bad_order), InputError);
}

TEST(SimulateTest, EvaluationOrderHintReordersConclusions) {
  const Game g = HInfluencesOutcomeGame();
  const Hypergraph h = H(3, {{1, 2}, {2, 3}, {1, 3}});
  Schedule s = Schedule::Scripted(ProtocolRunScript(g.skeleton()));
  s.evaluation_order = {1, 0, 2};
  const SimulationResult r = Simulate(g, h, s);
  const std::vector<std::string> round12 = Summarize(r, g.skeleton(), 12);
  ASSERT_FALSE(round12.empty());
  EXPECT_EQ(round12.front(), "2 concludes that 1 knows that U is dominated");
}

}  // namespace
}  // namespace iesds

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

#include "iesds/messages.h"

#include <gtest/gtest.h>

#include "example_games.h"
#include "iesds/errors.h"

namespace iesds {
namespace {

using ::iesds::testing::Atom;
using ::iesds::testing::CombiningStepGame;
using ::iesds::testing::H;
using ::iesds::testing::HbarMattersGame;
using ::iesds::testing::HbarMattersM;
using ::iesds::testing::Msg;
using ::iesds::testing::P;

TEST(EntailsTest, HbarMattersChainAcrossArcs) {
  const Game g = HbarMattersGame();
  const Skeleton& sk = g.skeleton();
  const MessageSet m = HbarMattersM(sk);
  const PreferenceAtom a_over_c = Atom(sk, 1, {"L", "X", "Y"}, "A", "C");
  EXPECT_TRUE(Entails(m, P({1, 2}), a_over_c));
  EXPECT_FALSE(Entails(m, P({1, 2, 3}), a_over_c));
  const EntailmentIndex index(sk, m);
  EXPECT_TRUE(index.Entails(P({1, 2}), a_over_c));
  EXPECT_FALSE(index.Entails(P({1, 2, 3}), a_over_c));
  EXPECT_TRUE(
      index.Entails(P({1, 2, 3}), Atom(sk, 1, {"L", "X", "Y"}, "A", "B")));
  EXPECT_TRUE(index.Entails(P({1}), a_over_c));
}

TEST(EntailsTest, EmptyMessageSetEntailsNothing) {
  const Game g = CombiningStepGame();
  const EntailmentIndex index(g.skeleton(), MessageSet());
  for (const PreferenceAtom& a : g.atoms()) {
    EXPECT_FALSE(Entails(MessageSet(), P({1, 2}), a));
    EXPECT_FALSE(index.Entails(P({1, 2}), a));
  }
}

TEST(EntailsTest, IndexAgreesWithDirectSearch) {
  const Game g = HbarMattersGame();
  const Skeleton& sk = g.skeleton();
  const MessageSet m = HbarMattersM(sk);
  const EntailmentIndex index(sk, m);
  for (std::uint32_t bits = 1; bits < 16; ++bits) {
    const PlayerSet audience(bits);
    for (std::int64_t c = 0; c < sk.num_contexts(0); ++c) {
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          const PreferenceAtom atom{0, c, a, b};
          EXPECT_EQ(index.Entails(audience, atom), Entails(m, audience, atom));
        }
      }
    }
  }
}

TEST(MessageSetTest, DuplicatesCollapse) {
  const Game g = HbarMattersGame();
  MessageSet m = HbarMattersM(g.skeleton());
  EXPECT_EQ(m.size(), 3u);
  EXPECT_FALSE(m.Insert(*m.begin()));
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m.VisibleTo(3).size(), 1u);
  EXPECT_EQ(m.VisibleTo(2).size(), 2u);
}

TEST(ValidateMessagesTest, RejectsUntruthfulAndMisaddressed) {
  const Game g = CombiningStepGame();
  const Skeleton& sk = g.skeleton();
  const Hypergraph h = H(3, {{1, 2}, {1, 3}});
  EXPECT_NO_THROW(ValidateMessages(
      g, h, MessageSet({Msg(sk, 2, P({1, 2}), {"U", "l"}, "L", "R")})));
  EXPECT_THROW(
      ValidateMessages(
          g, h, MessageSet({Msg(sk, 2, P({1, 2}), {"U", "l"}, "R", "L")})),
      ValidationError);
  EXPECT_THROW(
      ValidateMessages(
          g, h, MessageSet({Msg(sk, 2, P({2, 3}), {"U", "l"}, "L", "R")})),
      ValidationError);
  Message wrong_sender = Msg(sk, 2, P({1, 3}), {"U", "l"}, "L", "R");
  EXPECT_THROW(ValidateMessages(g, h, MessageSet({wrong_sender})),
               ValidationError);
}

TEST(AllMessagesTest, CountMatchesDirectEnumeration) {
  const Game g = CombiningStepGame();
  const Hypergraph h = H(3, {{1, 2}, {1, 3}});
  std::size_t expected = 0;
  for (const PreferenceAtom& a : g.atoms()) {
    for (PlayerSet arc : h.arcs()) {
      if (arc.Contains(a.player)) ++expected;
    }
  }
  const MessageSet all = AllMessages(h, g);
  EXPECT_EQ(all.size(), expected);
  EXPECT_NO_THROW(ValidateMessages(g, h, all));
}

TEST(AllMessagesTest, PlayerInNoArcSendsNothing) {
  const Game g = CombiningStepGame();
  const MessageSet all = AllMessages(H(3, {{1, 2}}), g);
  for (const Message& m : all) EXPECT_NE(m.sender, 2);
}

}  // namespace
}  // namespace iesds

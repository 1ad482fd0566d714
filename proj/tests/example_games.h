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

#ifndef IESDS_TESTS_EXAMPLE_GAMES_H_
#define IESDS_TESTS_EXAMPLE_GAMES_H_

#include <initializer_list>
#include <string>
#include <vector>

#include "iesds/game.h"
#include "iesds/hypergraph.h"
#include "iesds/messages.h"

namespace iesds::testing {

// Player sets are written with 1-based labels in tests.
inline PlayerSet P(std::initializer_list<int> one_based) {
  PlayerSet out;
  for (int p : one_based) out.Insert(p - 1);
  return out;
}

inline Hypergraph H(int num_players,
                    std::initializer_list<std::initializer_list<int>> arcs) {
  std::vector<PlayerSet> out;
  for (auto arc : arcs) out.push_back(P(arc));
  return Hypergraph(num_players, std::move(out));
}

// Parses "({U,D},{L},{l,r})" against the skeleton's strategy names.
inline Restriction R(const Skeleton& sk, const std::string& text) {
  std::vector<std::uint64_t> masks;
  std::size_t pos = 0;
  while ((pos = text.find('{', pos)) != std::string::npos) {
    const std::size_t close = text.find('}', pos);
    const int player = static_cast<int>(masks.size());
    std::uint64_t mask = 0;
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::size_t start = 0;
    while (start < body.size()) {
      std::size_t comma = body.find(',', start);
      if (comma == std::string::npos) comma = body.size();
      mask |= std::uint64_t{1}
              << sk.FindStrategy(player, body.substr(start, comma - start));
      start = comma + 1;
    }
    masks.push_back(mask);
    pos = close;
  }
  return Restriction(std::move(masks));
}

inline Skeleton MakeSkeleton(std::vector<std::vector<std::string>> strategies) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    labels.push_back(std::to_string(i + 1));
  }
  return Skeleton(std::move(labels), std::move(strategies));
}

// Players 1 and 2, and 1 and 3, interact; 2 and 3 are independent.
inline Game CombiningStepGame() {
  const Skeleton sk = MakeSkeleton({{"U", "D"}, {"L", "R"}, {"l", "r"}});
  PayoffTable t;
  t[{0, 0, 0}] = {1, 1, 1};
  t[{0, 0, 1}] = {0, 1, 0};
  t[{0, 1, 0}] = {0, 0, 1};
  t[{0, 1, 1}] = {0, 0, 0};
  t[{1, 0, 0}] = {0, 1, 1};
  t[{1, 0, 1}] = {1, 1, 0};
  t[{1, 1, 0}] = {1, 0, 1};
  t[{1, 1, 1}] = {1, 0, 0};
  return GameFromPayoffs(sk, t);
}

// Players 1 and 2 depend on each other; player 3 depends on player 2.
inline Game HInfluencesOutcomeGame() {
  const Skeleton sk = MakeSkeleton({{"U", "D"}, {"L", "R"}, {"A", "B"}});
  const double u12[2][2][2] = {{{0, 1}, {0, 0}}, {{1, 0}, {1, 1}}};
  const double u3[2][2] = {{0, 1}, {1, 0}};  // [s3][s2]
  PayoffTable t;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        t[{a, b, c}] = {u12[a][b][0], u12[a][b][1], u3[c][b]};
      }
    }
  }
  return GameFromPayoffs(sk, t);
}

// Four players; 3 and 4 are dummies with one strategy each.
inline Game HbarMattersGame() {
  const Skeleton sk =
      MakeSkeleton({{"A", "B", "C", "D"}, {"L", "R"}, {"X"}, {"Y"}});
  const double u[4][2][2] = {
      {{3, 0}, {1, 1}}, {{2, 0}, {1, 1}}, {{1, 1}, {0, 0}}, {{0, 0}, {5, 1}}};
  PayoffTable t;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 2; ++b) {
      t[{a, b, 0, 0}] = {u[a][b][0], u[a][b][1], 0, 0};
    }
  }
  return GameFromPayoffs(sk, t);
}

// An atom of `player` (1-based) with the context given as strategy names
// of the other players in order.
inline PreferenceAtom Atom(const Skeleton& sk, int player,
                           std::vector<std::string> context,
                           const std::string& better,
                           const std::string& worse) {
  const int p = player - 1;
  std::vector<int> profile(sk.num_players(), -1);
  std::size_t k = 0;
  for (int j = 0; j < sk.num_players(); ++j) {
    if (j == p) continue;
    profile[j] = sk.FindStrategy(j, context.at(k++));
  }
  return PreferenceAtom{p, sk.ContextIndex(p, profile),
                        sk.FindStrategy(p, better), sk.FindStrategy(p, worse)};
}

inline Message Msg(const Skeleton& sk, int sender, PlayerSet arc,
                   std::vector<std::string> context, const std::string& better,
                   const std::string& worse) {
  return Message{sender - 1, arc,
                 Atom(sk, sender, std::move(context), better, worse)};
}

// Player 2 tells {1,2} that L beats R in every context.
inline MessageSet IntermediateStatesMPrime(const Skeleton& sk) {
  MessageSet m;
  for (std::string a : {"U", "D"}) {
    for (std::string c : {"l", "r"}) {
      m.Insert(Msg(sk, 2, P({1, 2}), {a, c}, "L", "R"));
    }
  }
  return m;
}

// M' plus player 3 telling {1,3} that l beats r in every context.
inline MessageSet IntermediateStatesMDoublePrime(const Skeleton& sk) {
  MessageSet m = IntermediateStatesMPrime(sk);
  for (std::string a : {"U", "D"}) {
    for (std::string b : {"L", "R"}) {
      m.Insert(Msg(sk, 3, P({1, 3}), {a, b}, "l", "r"));
    }
  }
  return m;
}

inline MessageSet HbarMattersM(const Skeleton& sk) {
  MessageSet m;
  m.Insert(Msg(sk, 1, P({1, 2, 3}), {"L", "X", "Y"}, "A", "B"));
  m.Insert(Msg(sk, 1, P({1, 2, 4}), {"L", "X", "Y"}, "B", "C"));
  m.Insert(Msg(sk, 1, P({1, 2, 3}), {"R", "X", "Y"}, "A", "C"));
  return m;
}

inline MessageSet HbarMattersMPrime(const Skeleton& sk) {
  MessageSet m = HbarMattersM(sk);
  for (std::string alpha : {"A", "B", "D"}) {
    m.Insert(Msg(sk, 2, P({1, 2, 3}), {alpha, "X", "Y"}, "R", "L"));
  }
  return m;
}

// The message sequence of the published protocol run on the
// HInfluencesOutcomeGame with pairwise arcs; 16 messages.
inline std::vector<Message> ProtocolRunScript(const Skeleton& sk) {
  std::vector<Message> out;
  for (auto arc : {P({1, 2}), P({2, 3})}) {
    for (std::string c : {"A", "B"}) {
      out.push_back(Msg(sk, 2, arc, {"U", c}, "L", "R"));
    }
  }
  for (auto arc : {P({1, 2}), P({2, 3})}) {
    for (std::string c : {"A", "B"}) {
      out.push_back(Msg(sk, 2, arc, {"D", c}, "R", "L"));
    }
  }
  for (std::string b : {"L", "R"}) {
    for (std::string c : {"A", "B"}) {
      out.push_back(Msg(sk, 1, P({1, 2}), {b, c}, "D", "U"));
    }
  }
  for (std::string a : {"U", "D"}) {
    out.push_back(Msg(sk, 3, P({2, 3}), {a, "L"}, "B", "A"));
  }
  for (std::string a : {"U", "D"}) {
    out.push_back(Msg(sk, 3, P({2, 3}), {a, "R"}, "A", "B"));
  }
  return out;
}

}  // namespace iesds::testing

#endif  // IESDS_TESTS_EXAMPLE_GAMES_H_

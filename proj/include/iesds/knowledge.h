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

#ifndef IESDS_KNOWLEDGE_H_
#define IESDS_KNOWLEDGE_H_

#include <cstdint>
#include <map>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iesds/formula.h"
#include "iesds/game.h"
#include "iesds/hypergraph.h"
#include "iesds/messages.h"

namespace iesds {

// C(M): the least superset of `observed` such that msg(j, A, a > b) and
// msg(j, A', b > c) about the same player and context yield
// msg(j, A n A', a > c).
MessageSet ClosureObserved(const MessageSet& observed);

// What one player knows locally: the strategy sets, the interaction
// structure, its own preferences and the messages it has observed. Answers
// knowledge queries without looking at anyone else's preferences.
class PlayerKnowledge {
 public:
  PlayerKnowledge(const Game& game, const Hypergraph& hypergraph, int player);

  int player() const { return player_; }
  const Skeleton& skeleton() const { return skeleton_; }
  const Hypergraph& hypergraph() const { return hypergraph_; }
  const MessageSet& observed() const { return observed_; }

  // Adds `message` and extends the closure. Returns false for a message
  // already observed. Throws InputError when the message is not addressed
  // to this player, its arc is not in the hypergraph, or its sender is not
  // the player the atom is about.
  bool Observe(const Message& message);

  MessageSet Closure() const;

  // eval(w, formula): true iff K_w formula holds at the true state, as far
  // as this player can tell. An empty `w` stands for the player itself.
  // Throws UnsupportedQueryError on group common knowledge.
  bool Eval(const std::vector<int>& w, const FormulaArena& arena,
            FormulaId formula);
  bool Knows(const FormulaArena& arena, FormulaId formula) {
    return Eval({}, arena, formula);
  }

  // eval(w, dom^level(strategy of target)) by structural recursion, without
  // building the formula.
  bool KnownDominated(int level, int target, int strategy,
                      const std::vector<int>& w = {});

  // Per player j, the strategies not known to be dominated at dom^infinity.
  Restriction CurrentPicture();

 private:
  bool EvalAtom(PlayerSet w, const PreferenceAtom& atom) const;
  bool KnowsVia(PlayerSet w, int j) const;
  bool EvalNode(PlayerSet w, const FormulaArena& arena, FormulaId formula);
  bool DomBody(PlayerSet w, int level, int target, int strategy);
  bool DomKnown(PlayerSet w, int level, int target, int strategy);
  PlayerSet Normalize(const std::vector<int>& w) const;
  void AddFact(int player, std::int64_t context, int better, int worse,
               std::uint32_t arc);

  Skeleton skeleton_;
  Hypergraph hypergraph_;
  int player_;
  // own_better_[context * |S_i| + worse]: own strategies preferred to worse.
  std::vector<std::uint64_t> own_better_;
  MessageSet observed_;

  struct Slice {
    int player = 0;
    std::int64_t context = 0;
    // (better, worse) -> audiences of messages carrying that atom.
    std::map<std::pair<int, int>, std::vector<std::uint32_t>> arcs;
  };
  std::unordered_map<std::uint64_t, Slice> closure_;

  const FormulaArena* memo_arena_ = nullptr;
  std::unordered_map<std::uint64_t, bool> eval_memo_;
  std::map<std::tuple<std::uint32_t, int, int, int>, bool> dom_memo_;
};

}  // namespace iesds

#endif  // IESDS_KNOWLEDGE_H_

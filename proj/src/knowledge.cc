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

#include "iesds/knowledge.h"

#include <algorithm>
#include <deque>
#include <set>

#include "iesds/errors.h"

namespace iesds {
namespace {

std::uint64_t SliceKey(int player, std::int64_t context) {
  return (static_cast<std::uint64_t>(context) << 5) |
         static_cast<std::uint64_t>(player);
}

struct Fact {
  std::uint64_t slice;
  int player;
  std::int64_t context;
  int better;
  int worse;
  std::uint32_t arc;

  auto Key() const { return std::tie(slice, better, worse, arc); }
  friend bool operator<(const Fact& a, const Fact& b) {
    return a.Key() < b.Key();
  }
};

}  // namespace

MessageSet ClosureObserved(const MessageSet& observed) {
  std::set<Fact> facts;
  std::deque<Fact> work;
  auto add = [&](const Fact& f) {
    if (f.better != f.worse && facts.insert(f).second) work.push_back(f);
  };
  for (const Message& m : observed) {
    add(Fact{SliceKey(m.atom.player, m.atom.context), m.atom.player,
             m.atom.context, m.atom.better, m.atom.worse, m.arc.bits()});
  }
  while (!work.empty()) {
    const Fact f = work.front();
    work.pop_front();
    std::vector<Fact> derived;
    for (const Fact& g : facts) {
      if (g.slice != f.slice || (g.arc & f.arc) == 0) continue;
      if (g.better == f.worse) {
        derived.push_back(Fact{f.slice, f.player, f.context, f.better, g.worse,
                               f.arc & g.arc});
      }
      if (g.worse == f.better) {
        derived.push_back(Fact{f.slice, f.player, f.context, g.better, f.worse,
                               f.arc & g.arc});
      }
    }
    for (const Fact& d : derived) add(d);
  }
  std::vector<Message> out;
  for (const Fact& f : facts) {
    out.push_back(
        Message{f.player, PlayerSet(f.arc),
                PreferenceAtom{f.player, f.context, f.better, f.worse}});
  }
  return MessageSet(std::move(out));
}

PlayerKnowledge::PlayerKnowledge(const Game& game, const Hypergraph& hypergraph,
                                 int player)
    : skeleton_(game.skeleton()), hypergraph_(hypergraph), player_(player) {
  skeleton_.CheckPlayer(player);
  const int k = skeleton_.num_strategies(player);
  own_better_.assign(skeleton_.num_contexts(player) * k, 0);
  for (const PreferenceAtom& a : game.AtomsOf(player)) {
    own_better_[a.context * k + a.worse] |= std::uint64_t{1} << a.better;
  }
}

bool PlayerKnowledge::Observe(const Message& message) {
  if (!message.arc.Contains(player_)) {
    throw InputError("player " + skeleton_.label(player_) + " cannot observe " +
                     DescribeMessage(skeleton_, message));
  }
  if (!hypergraph_.HasArc(message.arc) ||
      message.sender != message.atom.player ||
      !message.arc.Contains(message.sender)) {
    throw InputError("malformed message " +
                     DescribeMessage(skeleton_, message));
  }
  skeleton_.CheckAtom(message.atom);
  if (!observed_.Insert(message)) return false;
  AddFact(message.atom.player, message.atom.context, message.atom.better,
          message.atom.worse, message.arc.bits());
  eval_memo_.clear();
  dom_memo_.clear();
  return true;
}

void PlayerKnowledge::AddFact(int player, std::int64_t context, int better,
                              int worse, std::uint32_t arc) {
  Slice& slice = closure_[SliceKey(player, context)];
  slice.player = player;
  slice.context = context;
  std::deque<std::tuple<int, int, std::uint32_t>> work{{better, worse, arc}};
  while (!work.empty()) {
    const auto [b, w, a] = work.front();
    work.pop_front();
    if (b == w) continue;
    std::vector<std::uint32_t>& arcs = slice.arcs[{b, w}];
    if (std::find(arcs.begin(), arcs.end(), a) != arcs.end()) continue;
    arcs.push_back(a);
    // Compose with every fact already present on either side.
    for (const auto& [pair, others] : slice.arcs) {
      for (std::uint32_t other : others) {
        if ((other & a) == 0) continue;
        if (pair.first == w) work.emplace_back(b, pair.second, a & other);
        if (pair.second == b) work.emplace_back(pair.first, w, a & other);
      }
    }
  }
}

MessageSet PlayerKnowledge::Closure() const {
  std::vector<Message> out;
  for (const auto& [key, slice] : closure_) {
    for (const auto& [pair, arcs] : slice.arcs) {
      for (std::uint32_t arc : arcs) {
        out.push_back(Message{slice.player, PlayerSet(arc),
                              PreferenceAtom{slice.player, slice.context,
                                             pair.first, pair.second}});
      }
    }
  }
  return MessageSet(std::move(out));
}

PlayerSet PlayerKnowledge::Normalize(const std::vector<int>& w) const {
  PlayerSet set;
  for (int p : w) {
    skeleton_.CheckPlayer(p);
    set.Insert(p);
  }
  return set.empty() ? PlayerSet::Single(player_) : set;
}

bool PlayerKnowledge::EvalAtom(PlayerSet w, const PreferenceAtom& atom) const {
  if (atom.better == atom.worse) return false;
  if (w.IsSubsetOf(PlayerSet::Single(player_)) && atom.player == player_) {
    const int k = skeleton_.num_strategies(player_);
    return (own_better_[atom.context * k + atom.worse] >> atom.better) & 1u;
  }
  auto slice = closure_.find(SliceKey(atom.player, atom.context));
  if (slice == closure_.end()) return false;
  auto arcs = slice->second.arcs.find({atom.better, atom.worse});
  if (arcs == slice->second.arcs.end()) return false;
  return std::any_of(
      arcs->second.begin(), arcs->second.end(),
      [&](std::uint32_t a) { return w.IsSubsetOf(PlayerSet(a)); });
}

bool PlayerKnowledge::KnowsVia(PlayerSet w, int j) const {
  const PlayerSet extended = w.Union(PlayerSet::Single(j));
  return extended == PlayerSet::Single(player_) || hypergraph_.Covers(extended);
}

bool PlayerKnowledge::Eval(const std::vector<int>& w, const FormulaArena& arena,
                           FormulaId formula) {
  if (memo_arena_ != &arena) {
    eval_memo_.clear();
    memo_arena_ = &arena;
  }
  return EvalNode(Normalize(w), arena, formula);
}

bool PlayerKnowledge::EvalNode(PlayerSet w, const FormulaArena& arena,
                               FormulaId formula) {
  const std::uint64_t key = (std::uint64_t{w.bits()} << 32) | formula;
  if (auto it = eval_memo_.find(key); it != eval_memo_.end()) {
    return it->second;
  }
  const FormulaNode& node = arena.node(formula);
  bool value = false;
  switch (node.kind) {
    case FormulaKind::kTrue:
      value = true;
      break;
    case FormulaKind::kFalse:
      value = false;
      break;
    case FormulaKind::kAtom:
      value = EvalAtom(w, node.atom);
      break;
    case FormulaKind::kAnd:
      value = true;
      for (FormulaId c : node.children) {
        if (!EvalNode(w, arena, c)) {
          value = false;
          break;
        }
      }
      break;
    case FormulaKind::kOr:
      for (FormulaId c : node.children) {
        if (EvalNode(w, arena, c)) {
          value = true;
          break;
        }
      }
      break;
    case FormulaKind::kCk: {
      if (node.group.size() != 1) {
        throw UnsupportedQueryError(
            "common knowledge of a group is outside the per-player "
            "evaluator's fragment");
      }
      const int j = node.group.Members()[0];
      value = KnowsVia(w, j) &&
              EvalNode(w.Union(PlayerSet::Single(j)), arena, node.children[0]);
      break;
    }
  }
  eval_memo_.emplace(key, value);
  return value;
}

bool PlayerKnowledge::KnownDominated(int level, int target, int strategy,
                                     const std::vector<int>& w) {
  if (level < 1) throw InputError("formula level must be at least 1");
  skeleton_.CheckStrategy(target, strategy);
  return DomKnown(Normalize(w), level, target, strategy);
}

bool PlayerKnowledge::DomKnown(PlayerSet w, int level, int target,
                               int strategy) {
  if (!KnowsVia(w, target)) return false;
  return DomBody(w.Union(PlayerSet::Single(target)), level, target, strategy);
}

bool PlayerKnowledge::DomBody(PlayerSet w, int level, int target,
                              int strategy) {
  const auto key = std::make_tuple(w.bits(), level, target, strategy);
  if (auto it = dom_memo_.find(key); it != dom_memo_.end()) return it->second;
  const Skeleton& sk = skeleton_;
  bool dominated = false;
  for (int alt = 0; alt < sk.num_strategies(target) && !dominated; ++alt) {
    if (alt == strategy) continue;
    bool all_contexts = true;
    for (std::int64_t c = 0; c < sk.num_contexts(target) && all_contexts; ++c) {
      bool covered = EvalAtom(w, PreferenceAtom{target, c, alt, strategy});
      for (int j = 0; j < sk.num_players() && !covered && level > 1; ++j) {
        if (j == target) continue;
        covered = DomKnown(w, level - 1, j, sk.OpponentStrategy(target, c, j));
      }
      all_contexts = covered;
    }
    dominated = all_contexts;
  }
  dom_memo_.emplace(key, dominated);
  return dominated;
}

Restriction PlayerKnowledge::CurrentPicture() {
  const int level = DomCap(skeleton_);
  Restriction picture = Restriction::Full(skeleton_);
  const PlayerSet self = PlayerSet::Single(player_);
  for (int j = 0; j < skeleton_.num_players(); ++j) {
    for (int s = 0; s < skeleton_.num_strategies(j); ++s) {
      if (DomKnown(self, level, j, s)) picture.Erase(j, s);
    }
  }
  return picture;
}

}  // namespace iesds

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

#include "iesds/elimination.h"

#include <stdexcept>

namespace iesds {
namespace {

template <typename Step>
Restriction Iterate(const Game& game, PlayerSet arc, Step&& step,
                    const IterationObserver& observer) {
  const Skeleton& sk = game.skeleton();
  Restriction current = Restriction::Full(sk);
  if (observer) observer(arc, current);
  // Each productive round removes at least one strategy.
  const int max_rounds = sk.total_strategies() + 1;
  for (int round = 0; round < max_rounds; ++round) {
    Restriction next = step(current);
    if (next == current) return current;
    current = std::move(next);
    if (observer) observer(arc, current);
  }
  throw std::logic_error("elimination did not reach a fixpoint");
}

std::uint64_t Alternatives(const Skeleton& sk, const Restriction& restriction,
                           int player, OptimalityNotion notion) {
  return notion == OptimalityNotion::kLocal
             ? restriction.mask(player)
             : Restriction::Full(sk).mask(player);
}

}  // namespace

Restriction ApplyT(const Game& game, PlayerSet arc,
                   const Restriction& restriction, OptimalityNotion notion) {
  Restriction out = restriction;
  for (int player : arc.Members()) {
    for (int s : restriction.Members(player)) {
      if (!IsUndominated(game, notion, player, s, restriction)) {
        out.Erase(player, s);
      }
    }
  }
  return out;
}

Restriction IterateToFixpoint(const Game& game, PlayerSet arc,
                              OptimalityNotion notion,
                              const IterationObserver& observer) {
  return Iterate(
      game, arc,
      [&](const Restriction& r) { return ApplyT(game, arc, r, notion); },
      observer);
}

Restriction OutcomeComplete(const Game& game, const Hypergraph& hypergraph,
                            OptimalityNotion notion,
                            const IterationObserver& observer) {
  const Skeleton& sk = game.skeleton();
  std::vector<Restriction> fixpoints;
  fixpoints.reserve(hypergraph.arcs().size());
  for (PlayerSet arc : hypergraph.arcs()) {
    fixpoints.push_back(IterateToFixpoint(game, arc, notion, observer));
  }
  Restriction outcome = Restriction::Full(sk);
  for (int i = 0; i < sk.num_players(); ++i) {
    Restriction combined = Restriction::Full(sk);
    for (std::size_t k = 0; k < fixpoints.size(); ++k) {
      if (hypergraph.arcs()[k].Contains(i)) {
        combined = Intersect(combined, fixpoints[k]);
      }
    }
    const Restriction last =
        ApplyT(game, PlayerSet::Single(i), combined, notion);
    outcome.set_mask(i, last.mask(i));
  }
  return outcome;
}

Restriction ApplyTIntermediate(const Game& game, PlayerSet arc,
                               const EntailmentIndex& entailment,
                               const Restriction& restriction,
                               OptimalityNotion notion) {
  const Skeleton& sk = game.skeleton();
  Restriction out = restriction;
  const bool singleton = arc.size() == 1;
  for (int player : arc.Members()) {
    const std::uint64_t alternatives =
        Alternatives(sk, restriction, player, notion);
    for (int s : restriction.Members(player)) {
      const bool undominated =
          singleton
              ? IsUndominatedBy(sk, restriction, player, s, alternatives,
                                [&](std::int64_t c, int better, int worse) {
                                  return game.Prefers(player, c, better, worse);
                                })
              : IsUndominatedBy(sk, restriction, player, s, alternatives,
                                [&](std::int64_t c, int better, int worse) {
                                  return entailment.Entails(arc, player, c,
                                                            better, worse);
                                });
      if (!undominated) out.Erase(player, s);
    }
  }
  return out;
}

Restriction IterateIntermediateToFixpoint(const Game& game, PlayerSet arc,
                                          const EntailmentIndex& entailment,
                                          OptimalityNotion notion,
                                          const IterationObserver& observer) {
  return Iterate(
      game, arc,
      [&](const Restriction& r) {
        return ApplyTIntermediate(game, arc, entailment, r, notion);
      },
      observer);
}

Restriction OutcomeIntermediate(const Game& game, const Hypergraph& hypergraph,
                                const MessageSet& messages,
                                OptimalityNotion notion,
                                const IterationObserver& observer) {
  return OutcomeIntermediateOnClosure(
      game, ClosureUnderIntersection(hypergraph), messages, notion, observer);
}

Restriction OutcomeIntermediateOnClosure(const Game& game,
                                         const Hypergraph& closure,
                                         const MessageSet& messages,
                                         OptimalityNotion notion,
                                         const IterationObserver& observer) {
  const Skeleton& sk = game.skeleton();
  const EntailmentIndex entailment(sk, messages);
  std::vector<Restriction> fixpoints;
  fixpoints.reserve(closure.arcs().size());
  for (PlayerSet arc : closure.arcs()) {
    fixpoints.push_back(
        IterateIntermediateToFixpoint(game, arc, entailment, notion, observer));
  }
  Restriction outcome = Restriction::Full(sk);
  for (int i = 0; i < sk.num_players(); ++i) {
    Restriction combined = Restriction::Full(sk);
    for (std::size_t k = 0; k < fixpoints.size(); ++k) {
      if (closure.arcs()[k].Contains(i)) {
        combined = Intersect(combined, fixpoints[k]);
      }
    }
    const Restriction last = ApplyTIntermediate(game, PlayerSet::Single(i),
                                                entailment, combined, notion);
    outcome.set_mask(i, last.mask(i));
  }
  return outcome;
}

}  // namespace iesds

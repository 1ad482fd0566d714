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

#ifndef IESDS_ELIMINATION_H_
#define IESDS_ELIMINATION_H_

#include <functional>

#include "iesds/game.h"
#include "iesds/hypergraph.h"
#include "iesds/messages.h"

namespace iesds {

// Sees every restriction G^0, G^1, ... of each fixpoint iteration, tagged
// with the arc being iterated. Used for instrumentation only.
using IterationObserver =
    std::function<void(PlayerSet arc, const Restriction& restriction)>;

// T_A: every member of `arc` simultaneously drops the strategies that fail
// the optimality notion on `restriction`; other players are untouched.
Restriction ApplyT(const Game& game, PlayerSet arc,
                   const Restriction& restriction, OptimalityNotion notion);

// T_A^infinity, iterated from the full restriction.
Restriction IterateToFixpoint(const Game& game, PlayerSet arc,
                              OptimalityNotion notion,
                              const IterationObserver& observer = {});

// G(H): for each player i, component i of T_{i} applied to the
// intersection of T_A^infinity over the arcs A containing i. A player in no
// arc starts from the full restriction.
Restriction OutcomeComplete(const Game& game, const Hypergraph& hypergraph,
                            OptimalityNotion notion,
                            const IterationObserver& observer = {});

// T_{A,M}: a singleton arc {i} decides with i's true preferences; a larger
// arc decides only with atoms entailed for that audience.
Restriction ApplyTIntermediate(const Game& game, PlayerSet arc,
                               const EntailmentIndex& entailment,
                               const Restriction& restriction,
                               OptimalityNotion notion);

Restriction IterateIntermediateToFixpoint(
    const Game& game, PlayerSet arc, const EntailmentIndex& entailment,
    OptimalityNotion notion, const IterationObserver& observer = {});

// G(H,M), taking the intersections over the closure of H under non-empty
// intersection.
Restriction OutcomeIntermediate(const Game& game, const Hypergraph& hypergraph,
                                const MessageSet& messages,
                                OptimalityNotion notion,
                                const IterationObserver& observer = {});

// Same as OutcomeIntermediate, for callers that already hold the closure.
Restriction OutcomeIntermediateOnClosure(
    const Game& game, const Hypergraph& closure, const MessageSet& messages,
    OptimalityNotion notion, const IterationObserver& observer = {});

}  // namespace iesds

#endif  // IESDS_ELIMINATION_H_

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

#ifndef IESDS_SIMULATOR_H_
#define IESDS_SIMULATOR_H_

#include <cstdint>
#include <string>
#include <vector>

#include "iesds/game.h"
#include "iesds/hypergraph.h"
#include "iesds/messages.h"

namespace iesds {

// Which message is delivered in each round.
struct Schedule {
  enum class Mode { kSeeded, kScripted };

  Mode mode = Mode::kSeeded;
  // Seeded mode, and the continuation of an exhaustive scripted run.
  std::uint64_t seed = 0;
  std::vector<Message> script;
  // Scripted mode: once the script ends, keep drawing the unsent messages
  // of AllMessages with `seed` until none are left.
  bool exhaustive = false;
  // Order in which recipients evaluate after a delivery. Empty means
  // ascending player index; otherwise a permutation of all players.
  std::vector<int> evaluation_order;

  static Schedule Seeded(std::uint64_t seed) {
    Schedule s;
    s.mode = Mode::kSeeded;
    s.seed = seed;
    return s;
  }
  static Schedule Scripted(std::vector<Message> script) {
    Schedule s;
    s.mode = Mode::kScripted;
    s.script = std::move(script);
    return s;
  }
};

struct TraceEvent {
  enum class Kind { kSend, kConclude, kPicture, kTerminate };

  // What a Conclude event states, for player i at some level l:
  // kDominated:   eval(i, dom^l(s)) with s a strategy of `target`;
  // kKnowsOwn:    eval(i, K_target dom^l(s)) with s a strategy of i.
  enum class Query { kDominated, kKnowsOwn };

  Kind kind = Kind::kSend;
  // 0 is the evaluation before any message; round t >= 1 delivers the
  // t-th message.
  int round = 0;
  Message message;  // kSend
  int player = 0;   // kConclude, kPicture, kTerminate
  Query query = Query::kDominated;
  int level = 0;        // kConclude
  int target = 0;       // kConclude
  int strategy = 0;     // kConclude, a strategy of `strategy_owner()`
  bool verdict = true;  // kConclude
  std::string formula;  // kConclude, e.g. "K2 dom^1(U)"
  std::string text;     // kConclude, the sentence form
  Restriction picture;  // kPicture

  int strategy_owner() const {
    return query == Query::kDominated ? target : player;
  }

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct SimulationResult {
  std::vector<TraceEvent> trace;
  // Indexed by player.
  std::vector<Restriction> final_pictures;
  // In delivery order.
  std::vector<Message> sent;
  MessageSet messages_sent;
};

// Lock-step run: round 0 evaluates every player; each later round delivers
// one message to all members of its arc, after which those members
// re-evaluate levels 1..DomCap in order and report new conclusions and
// changed pictures. Throws InputError (ValidationError for untruthful or
// misaddressed messages) on a bad script.
SimulationResult Simulate(const Game& game, const Hypergraph& hypergraph,
                          const Schedule& schedule);

struct VerifyReport {
  bool ok = true;
  std::string first_divergence;
  int prefixes_checked = 0;
};

// Replays the sent messages and checks at every prefix M_t that each
// player's own picture component equals G(H, M_t)_i, that pictures never
// grow back, that the recorded final pictures match the replay, and, when
// everything was sent, that own components equal G(H).
VerifyReport VerifyRun(const SimulationResult& result, const Game& game,
                       const Hypergraph& hypergraph);

}  // namespace iesds

#endif  // IESDS_SIMULATOR_H_

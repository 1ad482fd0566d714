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

#ifndef IESDS_RANDOM_H_
#define IESDS_RANDOM_H_

#include <cstdint>
#include <random>

#include "iesds/game.h"
#include "iesds/hypergraph.h"
#include "iesds/messages.h"

namespace iesds {

// Portable seeded randomness: std::mt19937_64 (whose output sequence the
// C++ standard fixes) plus rejection sampling for bounded integers, so a
// seed yields the same draws with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t UniformIndex(std::uint64_t bound);
  // Uniform in [lo, hi].
  int UniformInt(int lo, int hi) {
    return lo + static_cast<int>(
                    UniformIndex(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool Bernoulli(double p) {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomGameOptions {
  int min_players = 2;
  int max_players = 3;
  int min_strategies = 1;
  int max_strategies = 3;
  // Payoffs are drawn from [0, payoff_range); small ranges give ties.
  int payoff_range = 4;
};

Skeleton RandomSkeleton(Rng& rng, const RandomGameOptions& options);

// Payoff-induced game on `skeleton`.
Game RandomPayoffGame(Rng& rng, const Skeleton& skeleton, int payoff_range = 4);

// Each (player, context) slice is an arbitrary strict partial order: a
// random linear order, a random subset of its pairs, then transitive
// closure.
Game RandomOrderGame(Rng& rng, const Skeleton& skeleton);

// Each non-empty player set is an arc with probability `density`.
Hypergraph RandomHypergraph(Rng& rng, int num_players, double density = 0.4);

// Each message of AllMessages(hypergraph, game) with probability `density`.
MessageSet RandomMessages(Rng& rng, const Game& game,
                          const Hypergraph& hypergraph, double density);

}  // namespace iesds

#endif  // IESDS_RANDOM_H_

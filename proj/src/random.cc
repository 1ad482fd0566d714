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

#include "iesds/random.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace iesds {

std::uint64_t Rng::UniformIndex(std::uint64_t bound) {
  const std::uint64_t limit = -bound % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= limit) return x % bound;
  }
}

Skeleton RandomSkeleton(Rng& rng, const RandomGameOptions& options) {
  const int n = rng.UniformInt(options.min_players, options.max_players);
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> strategies(n);
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    const int k =
        rng.UniformInt(options.min_strategies, options.max_strategies);
    for (int s = 0; s < k; ++s) {
      strategies[i].push_back(std::string(1, static_cast<char>('a' + i)) +
                              std::to_string(s));
    }
  }
  return Skeleton(std::move(labels), std::move(strategies));
}

Game RandomPayoffGame(Rng& rng, const Skeleton& skeleton, int payoff_range) {
  PayoffTable table;
  for (std::int64_t index = 0; index < skeleton.num_profiles(); ++index) {
    std::vector<double> u(skeleton.num_players());
    for (double& x : u) x = rng.UniformInt(0, payoff_range - 1);
    table[skeleton.Profile(index)] = std::move(u);
  }
  return GameFromPayoffs(skeleton, table);
}

Game RandomOrderGame(Rng& rng, const Skeleton& skeleton) {
  std::vector<PreferenceAtom> atoms;
  for (int p = 0; p < skeleton.num_players(); ++p) {
    const int k = skeleton.num_strategies(p);
    for (std::int64_t c = 0; c < skeleton.num_contexts(p); ++c) {
      std::vector<int> order(k);
      std::iota(order.begin(), order.end(), 0);
      for (int i = k - 1; i > 0; --i) {
        std::swap(order[i], order[rng.UniformIndex(i + 1)]);
      }
      // rel[a][b]: a is preferred to b; only forward pairs of `order`.
      std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
      for (int x = 0; x < k; ++x) {
        for (int y = x + 1; y < k; ++y) {
          rel[order[x]][order[y]] = rng.Bernoulli(0.5);
        }
      }
      for (int m = 0; m < k; ++m) {
        for (int a = 0; a < k; ++a) {
          for (int b = 0; b < k; ++b) {
            if (rel[a][m] && rel[m][b]) rel[a][b] = true;
          }
        }
      }
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if (rel[a][b]) atoms.push_back(PreferenceAtom{p, c, a, b});
        }
      }
    }
  }
  return Game(skeleton, std::move(atoms));
}

Hypergraph RandomHypergraph(Rng& rng, int num_players, double density) {
  std::vector<PlayerSet> arcs;
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << num_players);
       ++bits) {
    if (rng.Bernoulli(density)) arcs.push_back(PlayerSet(bits));
  }
  return Hypergraph(num_players, std::move(arcs));
}

MessageSet RandomMessages(Rng& rng, const Game& game,
                          const Hypergraph& hypergraph, double density) {
  MessageSet out;
  for (const Message& m : AllMessages(hypergraph, game)) {
    if (rng.Bernoulli(density)) out.Insert(m);
  }
  return out;
}

}  // namespace iesds

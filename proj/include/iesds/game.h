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

#ifndef IESDS_GAME_H_
#define IESDS_GAME_H_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace iesds {

inline constexpr int kMaxPlayers = 32;
inline constexpr int kMaxStrategies = 64;

// Local (sd^l): alternatives range over the current restriction.
// Global (sd^g): alternatives range over the initial strategy set.
enum class OptimalityNotion { kLocal, kGlobal };

std::string_view NotionName(OptimalityNotion notion);

// `better` is strictly preferred to `worse` by `player` when the opponents
// play the profile encoded by `context` (see Skeleton::ContextIndex).
struct PreferenceAtom {
  int player = 0;
  std::int64_t context = 0;
  int better = 0;
  int worse = 0;

  friend auto operator<=>(const PreferenceAtom&,
                          const PreferenceAtom&) = default;
};

// Players and their ordered strategy sets, without preferences. Player and
// strategy names come from input files; everything internal uses dense
// indices.
//
// An opponent context of player p is a profile of all other players'
// strategies, packed in mixed radix with the lowest-indexed opponent most
// significant. Iterating contexts 0..num_contexts(p)-1 therefore visits
// profiles in lexicographic strategy order.
class Skeleton {
 public:
  Skeleton() = default;
  Skeleton(std::vector<std::string> player_labels,
           std::vector<std::vector<std::string>> strategies);

  int num_players() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int player) const { return labels_.at(player); }
  int num_strategies(int player) const {
    return static_cast<int>(strategies_.at(player).size());
  }
  const std::string& strategy_name(int player, int strategy) const {
    return strategies_.at(player).at(strategy);
  }
  const std::vector<std::string>& strategies(int player) const {
    return strategies_.at(player);
  }
  int total_strategies() const;

  // Throw InputError for unknown names.
  int FindPlayer(std::string_view label) const;
  int FindStrategy(int player, std::string_view name) const;

  std::int64_t num_contexts(int player) const {
    return num_contexts_.at(player);
  }
  std::int64_t num_profiles() const { return num_profiles_; }

  // Strategy of `opponent` within `context` of `player`.
  int OpponentStrategy(int player, std::int64_t context, int opponent) const {
    return static_cast<int>(
        (context / strides_[player][opponent]) %
        static_cast<std::int64_t>(strategies_[opponent].size()));
  }
  std::int64_t stride(int player, int opponent) const {
    return strides_[player][opponent];
  }
  // Full-length profile with -1 in `player`'s own slot.
  std::vector<int> ContextProfile(int player, std::int64_t context) const;
  // Ignores profile[player].
  std::int64_t ContextIndex(int player, const std::vector<int>& profile) const;
  std::int64_t ProfileIndex(const std::vector<int>& profile) const;
  std::vector<int> Profile(std::int64_t index) const;

  std::string DescribeContext(int player, std::int64_t context) const;
  std::string DescribeAtom(const PreferenceAtom& atom) const;

  // Range checks; throw InputError.
  void CheckPlayer(int player) const;
  void CheckStrategy(int player, int strategy) const;
  void CheckAtom(const PreferenceAtom& atom) const;

  friend bool operator==(const Skeleton& a, const Skeleton& b) {
    return a.labels_ == b.labels_ && a.strategies_ == b.strategies_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::string>> strategies_;
  std::vector<std::int64_t> num_contexts_;
  // strides_[p][j]: weight of opponent j's strategy in p's context index.
  std::vector<std::vector<std::int64_t>> strides_;
  std::int64_t num_profiles_ = 0;
};

// Per-player strategy subsets, one bit per strategy in the skeleton's
// canonical order.
class Restriction {
 public:
  Restriction() = default;
  explicit Restriction(std::vector<std::uint64_t> masks)
      : masks_(std::move(masks)) {}
  static Restriction Full(const Skeleton& skeleton);

  int num_players() const { return static_cast<int>(masks_.size()); }
  std::uint64_t mask(int player) const { return masks_.at(player); }
  void set_mask(int player, std::uint64_t mask) { masks_.at(player) = mask; }
  bool Contains(int player, int strategy) const {
    return (masks_.at(player) >> strategy) & 1u;
  }
  void Erase(int player, int strategy) {
    masks_.at(player) &= ~(std::uint64_t{1} << strategy);
  }
  int Count(int player) const;
  std::vector<int> Members(int player) const;
  bool AnyEmpty() const;

  std::string ToString(const Skeleton& skeleton) const;

  friend bool operator==(const Restriction&, const Restriction&) = default;

 private:
  std::vector<std::uint64_t> masks_;
};

// Component-wise lattice operations. Throw InputError when the operands
// have different player counts.
Restriction Intersect(const Restriction& a, const Restriction& b);
bool IsSubset(const Restriction& a, const Restriction& b);

// Calls fn(context) for every opponent context of `player` whose components
// all lie in `restriction`. Stops early when fn returns false; returns
// false iff it stopped early.
template <typename Fn>
bool ForEachContext(const Skeleton& skeleton, const Restriction& restriction,
                    int player, Fn&& fn) {
  const int n = skeleton.num_players();
  std::vector<std::vector<std::int64_t>> offsets;
  offsets.reserve(n - 1);
  for (int j = 0; j < n; ++j) {
    if (j == player) continue;
    std::vector<std::int64_t> column;
    for (int s : restriction.Members(j)) {
      column.push_back(s * skeleton.stride(player, j));
    }
    if (column.empty()) return true;
    offsets.push_back(std::move(column));
  }
  std::vector<std::size_t> digit(offsets.size(), 0);
  while (true) {
    std::int64_t context = 0;
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      context += offsets[k][digit[k]];
    }
    if (!fn(context)) return false;
    bool wrapped = true;
    for (std::size_t k = offsets.size(); k > 0 && wrapped; --k) {
      if (++digit[k - 1] < offsets[k - 1].size()) {
        wrapped = false;
      } else {
        digit[k - 1] = 0;
      }
    }
    if (wrapped) return true;
  }
}

// A strategic game with parametrized preferences: a skeleton plus the set
// of true preference atoms.
class Game {
 public:
  Game() = default;
  // Atoms are range-checked, deduplicated and sorted. Order properties are
  // not enforced here; see ValidateGame.
  Game(Skeleton skeleton, std::vector<PreferenceAtom> atoms);

  const Skeleton& skeleton() const { return skeleton_; }
  int num_players() const { return skeleton_.num_players(); }
  const std::vector<PreferenceAtom>& atoms() const { return atoms_; }
  std::vector<PreferenceAtom> AtomsOf(int player) const;

  bool Prefers(int player, std::int64_t context, int better, int worse) const {
    return (better_mask_[player]
                        [context * skeleton_.num_strategies(player) + worse] >>
            better) &
           1u;
  }
  bool Holds(const PreferenceAtom& atom) const {
    return Prefers(atom.player, atom.context, atom.better, atom.worse);
  }

 private:
  Skeleton skeleton_;
  std::vector<PreferenceAtom> atoms_;
  // better_mask_[p][context * |S_p| + worse]: strategies preferred to worse.
  std::vector<std::vector<std::uint64_t>> better_mask_;
};

// Payoffs keyed by full strategy profile; one utility per player.
using PayoffTable = std::map<std::vector<int>, std::vector<double>>;

// Emits atom (i, c, a, b) iff u_i(a, c) > u_i(b, c). Throws
// ValidationError listing missing profiles when the table is not total.
Game GameFromPayoffs(const Skeleton& skeleton, const PayoffTable& payoffs);

struct OrderViolation {
  enum class Kind { kIrreflexivity, kAsymmetry, kTransitivity };
  Kind kind;
  int player;
  std::int64_t context;
  // Strategies involved: (a,a) / (a,b) with a>b and b>a / a>b, b>c, not a>c.
  int a;
  int b;
  int c;

  std::string Describe(const Skeleton& skeleton) const;
  friend bool operator==(const OrderViolation&,
                         const OrderViolation&) = default;
};

// Every (player, context) slice must be a strict partial order.
std::vector<OrderViolation> ValidateGame(const Game& game);

// True iff `strategy` is not strictly dominated on the opponent profiles of
// `restriction` by any distinct alternative; alternatives come from
// restriction_player (local) or the full strategy set (global). An empty
// opponent product makes every alternative dominate.
bool IsUndominated(const Game& game, OptimalityNotion notion, int player,
                   int strategy, const Restriction& restriction);

// Dominance with a caller-supplied preference oracle,
// prefers(context, better, worse). Shared by the intermediate operators.
template <typename Prefers>
bool IsUndominatedBy(const Skeleton& skeleton, const Restriction& restriction,
                     int player, int strategy, std::uint64_t alternatives,
                     Prefers&& prefers) {
  for (int alt = 0; alt < skeleton.num_strategies(player); ++alt) {
    if (alt == strategy || !((alternatives >> alt) & 1u)) continue;
    const bool dominates = ForEachContext(
        skeleton, restriction, player,
        [&](std::int64_t context) { return prefers(context, alt, strategy); });
    if (dominates) return false;
  }
  return true;
}

}  // namespace iesds

#endif  // IESDS_GAME_H_

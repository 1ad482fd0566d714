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

#ifndef IESDS_HYPERGRAPH_H_
#define IESDS_HYPERGRAPH_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "iesds/game.h"

namespace iesds {

// A set of player indices (at most kMaxPlayers).
class PlayerSet {
 public:
  constexpr PlayerSet() = default;
  constexpr explicit PlayerSet(std::uint32_t bits) : bits_(bits) {}
  PlayerSet(std::initializer_list<int> players) {
    for (int p : players) Insert(p);
  }
  static PlayerSet Single(int player) { return PlayerSet({player}); }
  static PlayerSet All(int num_players) {
    return PlayerSet(num_players >= 32 ? ~std::uint32_t{0}
                                       : (std::uint32_t{1} << num_players) - 1);
  }

  std::uint32_t bits() const { return bits_; }
  bool Contains(int player) const { return (bits_ >> player) & 1u; }
  void Insert(int player) { bits_ |= std::uint32_t{1} << player; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool IsSubsetOf(PlayerSet other) const { return (bits_ & ~other.bits_) == 0; }
  PlayerSet Union(PlayerSet other) const {
    return PlayerSet(bits_ | other.bits_);
  }
  PlayerSet Intersection(PlayerSet other) const {
    return PlayerSet(bits_ & other.bits_);
  }
  std::vector<int> Members() const;
  std::string ToString(const Skeleton& skeleton) const;

  friend bool operator==(PlayerSet, PlayerSet) = default;
  // Lexicographic on the sorted member list, so {1} < {1,2} < {1,3} < {2}.
  friend bool operator<(PlayerSet a, PlayerSet b);

 private:
  std::uint32_t bits_ = 0;
};

// An interaction structure: a set of non-empty player groups (hyperarcs),
// kept sorted and duplicate-free.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Throws InputError for empty arcs or arcs naming players >= num_players.
  Hypergraph(int num_players, std::vector<PlayerSet> arcs);

  int num_players() const { return num_players_; }
  const std::vector<PlayerSet>& arcs() const { return arcs_; }
  bool HasArc(PlayerSet arc) const;
  // Arcs that contain `player`, in canonical order.
  std::vector<PlayerSet> ArcsContaining(int player) const;
  // True iff some arc includes `group`.
  bool Covers(PlayerSet group) const;

  std::string ToString(const Skeleton& skeleton) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int num_players_ = 0;
  std::vector<PlayerSet> arcs_;
};

// Smallest superset of the arcs closed under non-empty pairwise
// intersection.
Hypergraph ClosureUnderIntersection(const Hypergraph& hypergraph);

}  // namespace iesds

#endif  // IESDS_HYPERGRAPH_H_

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

#include "iesds/hypergraph.h"

#include <algorithm>
#include <set>

#include "iesds/errors.h"

namespace iesds {

std::vector<int> PlayerSet::Members() const {
  std::vector<int> members;
  for (std::uint32_t m = bits_; m != 0; m &= m - 1) {
    members.push_back(std::countr_zero(m));
  }
  return members;
}

std::string PlayerSet::ToString(const Skeleton& skeleton) const {
  std::string out = "{";
  bool first = true;
  for (int p : Members()) {
    if (!first) out += ",";
    first = false;
    out += skeleton.label(p);
  }
  return out + "}";
}

bool operator<(PlayerSet a, PlayerSet b) {
  if (a == b) return false;
  // Member lists agree below the lowest differing player d.
  const int d = std::countr_zero(a.bits() ^ b.bits());
  const std::uint32_t above = d >= 31 ? 0 : ~((std::uint32_t{2} << d) - 1);
  if (a.Contains(d)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

Hypergraph::Hypergraph(int num_players, std::vector<PlayerSet> arcs)
    : num_players_(num_players), arcs_(std::move(arcs)) {
  const PlayerSet everyone = PlayerSet::All(num_players);
  for (PlayerSet arc : arcs_) {
    if (arc.empty()) throw InputError("hyperarcs must be non-empty");
    if (!arc.IsSubsetOf(everyone)) {
      throw InputError("hyperarc names a player outside the game");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool Hypergraph::HasArc(PlayerSet arc) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), arc);
}

std::vector<PlayerSet> Hypergraph::ArcsContaining(int player) const {
  std::vector<PlayerSet> out;
  for (PlayerSet arc : arcs_) {
    if (arc.Contains(player)) out.push_back(arc);
  }
  return out;
}

bool Hypergraph::Covers(PlayerSet group) const {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [&](PlayerSet arc) { return group.IsSubsetOf(arc); });
}

std::string Hypergraph::ToString(const Skeleton& skeleton) const {
  std::string out = "{";
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (k > 0) out += ",";
    out += arcs_[k].ToString(skeleton);
  }
  return out + "}";
}

Hypergraph ClosureUnderIntersection(const Hypergraph& hypergraph) {
  std::set<std::uint32_t> closed;
  std::vector<std::uint32_t> frontier;
  for (PlayerSet arc : hypergraph.arcs()) {
    if (closed.insert(arc.bits()).second) frontier.push_back(arc.bits());
  }
  // Semi-naive: only intersect newly found sets with everything known.
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    const std::vector<std::uint32_t> known(closed.begin(), closed.end());
    for (std::uint32_t fresh : frontier) {
      for (std::uint32_t other : known) {
        const std::uint32_t meet = fresh & other;
        if (meet != 0 && closed.insert(meet).second) next.push_back(meet);
      }
    }
    frontier = std::move(next);
  }
  std::vector<PlayerSet> arcs;
  for (std::uint32_t bits : closed) arcs.emplace_back(bits);
  return Hypergraph(hypergraph.num_players(), std::move(arcs));
}

}  // namespace iesds

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

#ifndef IESDS_MESSAGES_H_
#define IESDS_MESSAGES_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iesds/game.h"
#include "iesds/hypergraph.h"

namespace iesds {

// Player `sender` announces `atom` to every member of `arc`, synchronously.
struct Message {
  int sender = 0;
  PlayerSet arc;
  PreferenceAtom atom;

  friend bool operator==(const Message&, const Message&) = default;
  friend bool operator<(const Message& a, const Message& b) {
    if (a.sender != b.sender) return a.sender < b.sender;
    if (a.arc != b.arc) return a.arc < b.arc;
    return a.atom < b.atom;
  }
};

std::string DescribeMessage(const Skeleton& skeleton, const Message& message);

// A duplicate-free, sorted collection of messages (an intermediate state).
class MessageSet {
 public:
  MessageSet() = default;
  explicit MessageSet(std::vector<Message> messages);

  // Returns false if the message was already present.
  bool Insert(const Message& message);
  bool Contains(const Message& message) const;
  std::size_t size() const { return messages_.size(); }
  bool empty() const { return messages_.empty(); }
  auto begin() const { return messages_.begin(); }
  auto end() const { return messages_.end(); }
  const std::vector<Message>& messages() const { return messages_; }
  // Messages whose arc contains `player`.
  MessageSet VisibleTo(int player) const;

  friend bool operator==(const MessageSet&, const MessageSet&) = default;

 private:
  std::vector<Message> messages_;
};

// Throws ValidationError unless every message has sender == atom.player,
// sender in arc, arc in the hypergraph, and an atom that holds in `game`.
void ValidateMessages(const Game& game, const Hypergraph& hypergraph,
                      const MessageSet& messages);

// Every truthful atom of every player, sent to every arc containing that
// player.
MessageSet AllMessages(const Hypergraph& hypergraph, const Game& game);

// M|_A |= atom: a chain of messages, all to arcs including `audience`, all
// about atom.player in atom.context, linking atom.better down to
// atom.worse. Direct breadth-first search over the message list.
bool Entails(const MessageSet& messages, PlayerSet audience,
             const PreferenceAtom& atom);

// Answers repeated entailment queries against one message set. Reachability
// among a player's strategies is computed once per (audience, player,
// context) and cached. Not thread-safe.
class EntailmentIndex {
 public:
  EntailmentIndex(const Skeleton& skeleton, const MessageSet& messages);

  bool Entails(PlayerSet audience, const PreferenceAtom& atom) const {
    return (Reach(audience, atom.player, atom.context)[atom.better] >>
            atom.worse) &
           1u;
  }
  bool Entails(PlayerSet audience, int player, std::int64_t context, int better,
               int worse) const {
    return (Reach(audience, player, context)[better] >> worse) & 1u;
  }

 private:
  struct Edge {
    std::uint32_t arc;
    int better;
    int worse;
  };
  // Row b is the set of strategies reachable from b by at least one edge.
  const std::vector<std::uint64_t>& Reach(PlayerSet audience, int player,
                                          std::int64_t context) const;

  const Skeleton* skeleton_;
  // Keyed by (player, context).
  std::unordered_map<std::uint64_t, std::vector<Edge>> edges_;
  struct CacheKeyHash {
    std::size_t operator()(
        const std::pair<std::uint64_t, std::uint32_t>& key) const {
      return std::hash<std::uint64_t>()(key.first * 0x9E3779B97F4A7C15ull ^
                                        key.second);
    }
  };
  // Keyed by ((player, context), audience).
  mutable std::unordered_map<std::pair<std::uint64_t, std::uint32_t>,
                             std::vector<std::uint64_t>, CacheKeyHash>
      cache_;
  std::vector<std::uint64_t> empty_row_;
};

}  // namespace iesds

#endif  // IESDS_MESSAGES_H_

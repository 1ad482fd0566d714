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

#include "iesds/messages.h"

#include <algorithm>
#include <deque>

#include "iesds/errors.h"

namespace iesds {
namespace {

std::uint64_t SliceKey(int player, std::int64_t context) {
  return (static_cast<std::uint64_t>(context) << 5) |
         static_cast<std::uint64_t>(player);
}

}  // namespace

std::string DescribeMessage(const Skeleton& skeleton, const Message& message) {
  return "msg(" + skeleton.label(message.sender) + ", " +
         message.arc.ToString(skeleton) + ", " +
         skeleton.DescribeAtom(message.atom) + ")";
}

MessageSet::MessageSet(std::vector<Message> messages)
    : messages_(std::move(messages)) {
  std::sort(messages_.begin(), messages_.end());
  messages_.erase(std::unique(messages_.begin(), messages_.end()),
                  messages_.end());
}

bool MessageSet::Insert(const Message& message) {
  auto it = std::lower_bound(messages_.begin(), messages_.end(), message);
  if (it != messages_.end() && *it == message) return false;
  messages_.insert(it, message);
  return true;
}

bool MessageSet::Contains(const Message& message) const {
  return std::binary_search(messages_.begin(), messages_.end(), message);
}

MessageSet MessageSet::VisibleTo(int player) const {
  MessageSet out;
  for (const auto& m : messages_) {
    if (m.arc.Contains(player)) out.messages_.push_back(m);
  }
  return out;
}

void ValidateMessages(const Game& game, const Hypergraph& hypergraph,
                      const MessageSet& messages) {
  const Skeleton& sk = game.skeleton();
  std::vector<std::string> problems;
  for (const auto& m : messages) {
    sk.CheckAtom(m.atom);
    const std::string what = DescribeMessage(sk, m);
    if (m.sender != m.atom.player) {
      problems.push_back(what + ": sender must own the announced preference");
    }
    if (!m.arc.Contains(m.sender)) {
      problems.push_back(what + ": sender is not a member of the arc");
    }
    if (!hypergraph.HasArc(m.arc)) {
      problems.push_back(what + ": arc is not in the interaction structure");
    }
    if (!game.Holds(m.atom)) {
      problems.push_back(what + ": message is not truthful");
    }
  }
  if (!problems.empty()) {
    throw ValidationError("invalid messages", std::move(problems));
  }
}

MessageSet AllMessages(const Hypergraph& hypergraph, const Game& game) {
  std::vector<Message> out;
  for (PlayerSet arc : hypergraph.arcs()) {
    for (const auto& atom : game.atoms()) {
      if (arc.Contains(atom.player)) out.push_back({atom.player, arc, atom});
    }
  }
  return MessageSet(std::move(out));
}

bool Entails(const MessageSet& messages, PlayerSet audience,
             const PreferenceAtom& atom) {
  std::vector<const Message*> usable;
  for (const auto& m : messages) {
    if (m.atom.player == atom.player && m.atom.context == atom.context &&
        audience.IsSubsetOf(m.arc)) {
      usable.push_back(&m);
    }
  }
  std::vector<int> seen;
  std::deque<int> queue = {atom.better};
  while (!queue.empty()) {
    const int from = queue.front();
    queue.pop_front();
    for (const Message* m : usable) {
      if (m->atom.better != from) continue;
      if (m->atom.worse == atom.worse) return true;
      if (std::find(seen.begin(), seen.end(), m->atom.worse) == seen.end()) {
        seen.push_back(m->atom.worse);
        queue.push_back(m->atom.worse);
      }
    }
  }
  return false;
}

EntailmentIndex::EntailmentIndex(const Skeleton& skeleton,
                                 const MessageSet& messages)
    : skeleton_(&skeleton) {
  for (const auto& m : messages) {
    edges_[SliceKey(m.atom.player, m.atom.context)].push_back(
        {m.arc.bits(), m.atom.better, m.atom.worse});
  }
  empty_row_.assign(kMaxStrategies, 0);
}

const std::vector<std::uint64_t>& EntailmentIndex::Reach(
    PlayerSet audience, int player, std::int64_t context) const {
  const std::uint64_t slice = SliceKey(player, context);
  auto edges = edges_.find(slice);
  if (edges == edges_.end()) return empty_row_;
  const std::pair<std::uint64_t, std::uint32_t> key(slice, audience.bits());
  auto cached = cache_.find(key);
  if (cached != cache_.end()) return cached->second;

  const int k = skeleton_->num_strategies(player);
  std::vector<std::uint64_t> reach(k, 0);
  for (const Edge& e : edges->second) {
    if (audience.IsSubsetOf(PlayerSet(e.arc))) {
      reach[e.better] |= std::uint64_t{1} << e.worse;
    }
  }
  // Warshall over bit rows.
  for (int via = 0; via < k; ++via) {
    for (int from = 0; from < k; ++from) {
      if ((reach[from] >> via) & 1u) reach[from] |= reach[via];
    }
  }
  return cache_.emplace(key, std::move(reach)).first->second;
}

}  // namespace iesds

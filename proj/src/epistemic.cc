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

#include "iesds/epistemic.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "iesds/errors.h"

namespace iesds {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
// Blocks with more ordered pairs than this are not enumerated.
constexpr int kMaxBlockPairs = 20;

std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t SatPow2(std::uint64_t e) {
  return e >= 64 ? kSaturated : std::uint64_t{1} << e;
}

std::uint64_t SatPow(std::uint64_t base, std::int64_t e) {
  std::uint64_t out = 1;
  for (std::int64_t k = 0; k < e && out != kSaturated; ++k) {
    out = SatMul(out, base);
    if (base == 1) break;
  }
  return out;
}

// Bit of ordered pair (a, b), a != b, within a block of k strategies, in
// (better, worse) lexicographic order.
int PairBit(int k, int a, int b) { return a * (k - 1) + (b < a ? b : b - 1); }

// All strict partial orders on k elements as masks over PairBit.
std::vector<std::uint64_t> StrictPartialOrders(int k) {
  const int pairs = k * (k - 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << pairs); ++rel) {
    auto has = [&](int a, int b) { return (rel >> PairBit(k, a, b)) & 1u; };
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      for (int b = 0; b < k && ok; ++b) {
        if (a == b || !has(a, b)) continue;
        if (has(b, a)) ok = false;
        for (int c = 0; c < k && ok; ++c) {
          if (c != a && c != b && has(b, c) && !has(a, c)) ok = false;
        }
      }
    }
    if (ok) out.push_back(rel);
  }
  return out;
}

int ArcsContaining(const Hypergraph& h, int player) {
  int count = 0;
  for (PlayerSet arc : h.arcs()) count += arc.Contains(player) ? 1 : 0;
  return count;
}

struct PairHash {
  std::size_t operator()(
      const std::pair<std::uint64_t, std::uint64_t>& p) const {
    return std::hash<std::uint64_t>()(p.first * 0x9E3779B97F4A7C15ull ^
                                      (p.second + 0x7F4A7C15ull));
  }
};

std::uint32_t FindRoot(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

AtomAlphabet::AtomAlphabet(const Skeleton& skeleton)
    : player_mask_(skeleton.num_players(), 0) {
  for (int p = 0; p < skeleton.num_players(); ++p) {
    const int k = skeleton.num_strategies(p);
    for (std::int64_t c = 0; c < skeleton.num_contexts(p); ++c) {
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if (a == b) continue;
          if (atoms_.size() < 64) {
            player_mask_[p] |= std::uint64_t{1} << atoms_.size();
          }
          atoms_.push_back(PreferenceAtom{p, c, a, b});
        }
      }
    }
  }
}

int AtomAlphabet::IndexOf(const PreferenceAtom& atom) const {
  if (atom.better == atom.worse) return -1;
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) {
    throw InputError("atom outside the alphabet");
  }
  return static_cast<int>(it - atoms_.begin());
}

StateUniverse::StateUniverse(const Skeleton& skeleton,
                             const Hypergraph& hypergraph)
    : skeleton_(skeleton), hypergraph_(hypergraph), atoms_(skeleton) {}

std::uint64_t StateUniverse::EstimateSize(const Skeleton& skeleton,
                                          const Hypergraph& hypergraph) {
  std::uint64_t total = 1;
  for (int p = 0; p < skeleton.num_players(); ++p) {
    const int k = skeleton.num_strategies(p);
    const int pairs = k * (k - 1);
    if (pairs == 0) continue;
    if (pairs > kMaxBlockPairs) return kSaturated;
    const std::uint64_t arcs = ArcsContaining(hypergraph, p);
    std::uint64_t block = 0;
    for (std::uint64_t rel : StrictPartialOrders(k)) {
      block = SatAdd(block, SatPow2(arcs * std::popcount(rel)));
    }
    total = SatMul(total, SatPow(block, skeleton.num_contexts(p)));
  }
  return total;
}

std::shared_ptr<const StateUniverse> StateUniverse::Enumerate(
    const Skeleton& skeleton, const Hypergraph& hypergraph,
    const UniverseCaps& caps) {
  if (hypergraph.num_players() != skeleton.num_players()) {
    throw InputError("hypergraph and game disagree on the number of players");
  }
  std::shared_ptr<StateUniverse> u(new StateUniverse(skeleton, hypergraph));
  const std::uint64_t estimate = EstimateSize(skeleton, hypergraph);
  const int num_atoms = u->atoms_.size();
  if (num_atoms > caps.max_atoms || num_atoms > 64) {
    throw CapExceededError("universe has " + std::to_string(num_atoms) +
                               " atoms, cap is " +
                               std::to_string(std::min(caps.max_atoms, 64)),
                           estimate);
  }
  if (estimate > caps.max_states) {
    throw CapExceededError(
        "universe would have " +
            (estimate == kSaturated ? std::string("more than 2^64")
                                    : std::to_string(estimate)) +
            " states, cap is " + std::to_string(caps.max_states),
        estimate);
  }

  for (int a = 0; a < num_atoms; ++a) {
    const PreferenceAtom& atom = u->atoms_.atom(a);
    for (PlayerSet arc : hypergraph.arcs()) {
      if (arc.Contains(atom.player)) {
        u->messages_.push_back(Message{atom.player, arc, atom});
      }
    }
  }
  if (u->messages_.size() > 64) {
    throw CapExceededError("universe has " +
                               std::to_string(u->messages_.size()) +
                               " possible messages, at most 64 supported",
                           estimate);
  }
  std::sort(u->messages_.begin(), u->messages_.end());
  u->messages_of_atom_.assign(num_atoms, 0);
  u->visible_.assign(skeleton.num_players(), 0);
  for (int m = 0; m < u->num_messages(); ++m) {
    const Message& msg = u->messages_[m];
    u->messages_of_atom_[u->atoms_.IndexOf(msg.atom)] |= std::uint64_t{1} << m;
    for (int p : msg.arc.Members()) {
      u->visible_[p] |= std::uint64_t{1} << m;
    }
  }

  // One block per (player, context); a valuation picks one strict partial
  // order per block.
  struct Block {
    int offset;
    const std::vector<std::uint64_t>* orders;
  };
  std::vector<std::vector<std::uint64_t>> orders_by_player(
      skeleton.num_players());
  std::vector<Block> blocks;
  int offset = 0;
  for (int p = 0; p < skeleton.num_players(); ++p) {
    const int k = skeleton.num_strategies(p);
    if (k < 2) continue;
    orders_by_player[p] = StrictPartialOrders(k);
    for (std::int64_t c = 0; c < skeleton.num_contexts(p); ++c) {
      blocks.push_back(Block{offset, &orders_by_player[p]});
      offset += k * (k - 1);
    }
  }

  u->states_.reserve(estimate);
  std::vector<std::size_t> digit(blocks.size(), 0);
  while (true) {
    std::uint64_t valuation = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      valuation |= (*blocks[b].orders)[digit[b]] << blocks[b].offset;
    }
    std::uint64_t truthful = 0;
    for (std::uint64_t v = valuation; v != 0; v &= v - 1) {
      truthful |= u->messages_of_atom_[std::countr_zero(v)];
    }
    for (std::uint64_t m = truthful;; m = (m - 1) & truthful) {
      u->states_.push_back(EpistemicState{valuation, m});
      if (m == 0) break;
    }
    std::size_t b = blocks.size();
    while (b > 0) {
      if (++digit[b - 1] < blocks[b - 1].orders->size()) break;
      digit[b - 1] = 0;
      --b;
    }
    if (b == 0) break;
  }
  std::sort(u->states_.begin(), u->states_.end());
  return u;
}

std::uint64_t StateUniverse::ValuationOf(const Game& game) const {
  if (!(game.skeleton() == skeleton_)) {
    throw InputError("game does not match the universe's skeleton");
  }
  std::uint64_t v = 0;
  for (const PreferenceAtom& a : game.atoms()) {
    const int index = atoms_.IndexOf(a);
    if (index >= 0) v |= std::uint64_t{1} << index;
  }
  return v;
}

std::uint64_t StateUniverse::MessagesOf(const MessageSet& messages) const {
  std::uint64_t mask = 0;
  for (const Message& m : messages) {
    auto it = std::lower_bound(messages_.begin(), messages_.end(), m);
    if (it == messages_.end() || !(*it == m)) {
      throw InputError("message " + DescribeMessage(skeleton_, m) +
                       " is not possible in this universe");
    }
    mask |= std::uint64_t{1} << (it - messages_.begin());
  }
  return mask;
}

MessageSet StateUniverse::MessageSetOf(std::uint64_t mask) const {
  std::vector<Message> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    out.push_back(messages_.at(std::countr_zero(m)));
  }
  return MessageSet(std::move(out));
}

std::vector<PreferenceAtom> StateUniverse::AtomsOf(
    std::uint64_t valuation) const {
  std::vector<PreferenceAtom> out;
  for (std::uint64_t v = valuation; v != 0; v &= v - 1) {
    out.push_back(atoms_.atom(std::countr_zero(v)));
  }
  return out;
}

std::optional<std::size_t> StateUniverse::Find(
    const EpistemicState& state) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), state);
  if (it == states_.end() || *it != state) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::size_t StateUniverse::IndexOf(const Game& game,
                                   const MessageSet& messages) const {
  const auto index =
      Find(EpistemicState{ValuationOf(game), MessagesOf(messages)});
  if (!index) {
    throw InputError(
        "the game and messages do not form a state: a message is untruthful "
        "or a preference slice is not a strict partial order");
  }
  return *index;
}

bool StateUniverse::Indistinguishable(std::size_t a, std::size_t b,
                                      int player) const {
  const std::uint64_t vm = atoms_.PlayerMask(player);
  const std::uint64_t mm = visible_.at(player);
  const EpistemicState& x = states_.at(a);
  const EpistemicState& y = states_.at(b);
  return (x.valuation & vm) == (y.valuation & vm) &&
         (x.messages & mm) == (y.messages & mm);
}

std::vector<std::size_t> StateUniverse::Reachable(std::size_t start,
                                                  PlayerSet group) const {
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  const std::vector<int> members = group.Members();
  std::vector<std::unordered_map<Key, std::vector<std::size_t>, PairHash>>
      classes(members.size());
  for (std::size_t s = 0; s < states_.size(); ++s) {
    for (std::size_t k = 0; k < members.size(); ++k) {
      const int p = members[k];
      classes[k][{states_[s].valuation & atoms_.PlayerMask(p),
                  states_[s].messages & visible_[p]}]
          .push_back(s);
    }
  }
  std::vector<bool> seen(states_.size(), false);
  std::deque<std::size_t> queue{start};
  seen.at(start) = true;
  std::vector<std::size_t> out;
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    out.push_back(s);
    for (std::size_t k = 0; k < members.size(); ++k) {
      const int p = members[k];
      for (std::size_t t :
           classes[k][{states_[s].valuation & atoms_.PlayerMask(p),
                       states_[s].messages & visible_[p]}]) {
        if (!seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::uint32_t>& StateUniverse::Components(
    PlayerSet group) const {
  if (auto it = components_.find(group.bits()); it != components_.end()) {
    return it->second;
  }
  const std::size_t n = states_.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  for (int p : group.Members()) {
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::uint32_t,
                       PairHash>
        first;
    first.reserve(n);
    for (std::uint32_t s = 0; s < n; ++s) {
      const auto [it, inserted] =
          first.try_emplace({states_[s].valuation & atoms_.PlayerMask(p),
                             states_[s].messages & visible_[p]},
                            s);
      if (!inserted) {
        const std::uint32_t a = FindRoot(parent, s);
        const std::uint32_t b = FindRoot(parent, it->second);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::uint32_t> ids(n);
  std::vector<std::uint32_t> dense(n,
                                   std::numeric_limits<std::uint32_t>::max());
  std::uint32_t next = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    const std::uint32_t root = FindRoot(parent, s);
    if (dense[root] == std::numeric_limits<std::uint32_t>::max()) {
      dense[root] = next++;
    }
    ids[s] = dense[root];
  }
  return components_.emplace(group.bits(), std::move(ids)).first->second;
}

StateSet::StateSet(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  if (value && size % 64 != 0) {
    words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
  }
}

StateSet& StateSet::operator&=(const StateSet& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

std::size_t StateSet::Count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

ModelChecker::ModelChecker(std::shared_ptr<const StateUniverse> universe,
                           const FormulaArena& arena)
    : universe_(std::move(universe)), arena_(&arena) {}

const StateSet& ModelChecker::Extension(FormulaId formula) {
  if (auto it = memo_.find(formula); it != memo_.end()) return it->second;
  const StateUniverse& u = *universe_;
  const std::size_t n = u.size();
  const FormulaNode& node = arena_->node(formula);
  StateSet out;
  switch (node.kind) {
    case FormulaKind::kTrue:
      out = StateSet(n, true);
      break;
    case FormulaKind::kFalse:
      out = StateSet(n, false);
      break;
    case FormulaKind::kAtom: {
      out = StateSet(n, false);
      const int index = u.atoms().IndexOf(node.atom);
      if (index >= 0) {
        const std::uint64_t bit = std::uint64_t{1} << index;
        for (std::size_t s = 0; s < n; ++s) {
          if (u.state(s).valuation & bit) out.Set(s);
        }
      }
      break;
    }
    case FormulaKind::kAnd:
    case FormulaKind::kOr: {
      const bool is_and = node.kind == FormulaKind::kAnd;
      out = StateSet(n, is_and);
      for (FormulaId c : node.children) {
        const StateSet& child = Extension(c);
        if (is_and) {
          out &= child;
        } else {
          out |= child;
        }
      }
      break;
    }
    case FormulaKind::kCk: {
      const StateSet& child = Extension(node.children[0]);
      const std::vector<std::uint32_t>& comp = u.Components(node.group);
      std::vector<char> all(n, 1);
      for (std::size_t s = 0; s < n; ++s) {
        if (!child.Test(s)) all[comp[s]] = 0;
      }
      out = StateSet(n, false);
      for (std::size_t s = 0; s < n; ++s) {
        if (all[comp[s]]) out.Set(s);
      }
      break;
    }
  }
  return memo_.emplace(formula, std::move(out)).first->second;
}

EpistemicOracle::EpistemicOracle(const Skeleton& skeleton,
                                 const Hypergraph& hypergraph,
                                 const UniverseCaps& caps)
    : universe_(StateUniverse::Enumerate(skeleton, hypergraph, caps)),
      builder_(arena_, universe_->skeleton()),
      checker_(universe_, arena_) {}

Restriction EpistemicOracle::OutcomeAt(std::size_t state) {
  const Skeleton& sk = universe_->skeleton();
  if (dom_inf_.empty()) {
    const int level = DomCap(sk);
    dom_inf_.resize(sk.num_players());
    for (int p = 0; p < sk.num_players(); ++p) {
      for (int s = 0; s < sk.num_strategies(p); ++s) {
        dom_inf_[p].push_back(&checker_.Extension(builder_.Dom(level, p, s)));
      }
    }
  }
  Restriction out = Restriction::Full(sk);
  for (int p = 0; p < sk.num_players(); ++p) {
    for (int s = 0; s < sk.num_strategies(p); ++s) {
      if (dom_inf_[p][s]->Test(state)) out.Erase(p, s);
    }
  }
  return out;
}

bool HoldsInGame(const FormulaArena& arena, FormulaId formula,
                 const Game& game) {
  std::unordered_map<FormulaId, bool> memo;
  auto eval = [&](auto&& self, FormulaId id) -> bool {
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    const FormulaNode& node = arena.node(id);
    bool value = false;
    switch (node.kind) {
      case FormulaKind::kTrue:
        value = true;
        break;
      case FormulaKind::kFalse:
        value = false;
        break;
      case FormulaKind::kAtom:
        value = game.Holds(node.atom);
        break;
      case FormulaKind::kAnd:
        value = std::all_of(node.children.begin(), node.children.end(),
                            [&](FormulaId c) { return self(self, c); });
        break;
      case FormulaKind::kOr:
        value = std::any_of(node.children.begin(), node.children.end(),
                            [&](FormulaId c) { return self(self, c); });
        break;
      case FormulaKind::kCk:
        throw UnsupportedQueryError(
            "knowledge operators need a state universe");
    }
    memo.emplace(id, value);
    return value;
  };
  return eval(eval, formula);
}

Restriction EpistemicOutcome(const Game& game, const Hypergraph& hypergraph,
                             const MessageSet& messages,
                             const UniverseCaps& caps) {
  EpistemicOracle oracle(game.skeleton(), hypergraph, caps);
  return oracle.OutcomeAt(oracle.universe().IndexOf(game, messages));
}

}  // namespace iesds

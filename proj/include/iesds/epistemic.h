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

#ifndef IESDS_EPISTEMIC_H_
#define IESDS_EPISTEMIC_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "iesds/formula.h"
#include "iesds/game.h"
#include "iesds/hypergraph.h"
#include "iesds/messages.h"

namespace iesds {

struct UniverseCaps {
  int max_atoms = 8;
  std::uint64_t max_states = 1'000'000;
};

// The non-reflexive preference atoms of a skeleton, densely indexed in
// canonical order. Reflexive atoms are false in every valuation and are
// left out.
class AtomAlphabet {
 public:
  explicit AtomAlphabet(const Skeleton& skeleton);

  int size() const { return static_cast<int>(atoms_.size()); }
  const PreferenceAtom& atom(int index) const { return atoms_.at(index); }
  // -1 for reflexive atoms.
  int IndexOf(const PreferenceAtom& atom) const;
  // Bits of the atoms about `player`.
  std::uint64_t PlayerMask(int player) const { return player_mask_.at(player); }

 private:
  std::vector<PreferenceAtom> atoms_;
  std::vector<std::uint64_t> player_mask_;
};

// A possible world: a valuation and a truthful message history, both as
// bitmasks over the universe's atom and message alphabets.
struct EpistemicState {
  std::uint64_t valuation = 0;
  std::uint64_t messages = 0;

  friend auto operator<=>(const EpistemicState&,
                          const EpistemicState&) = default;
};

// Every state over a skeleton and hypergraph: each valuation that is a
// strict partial order per (player, context), paired with each subset of
// the messages it makes truthful. States are sorted, so indices are stable.
class StateUniverse {
 public:
  // Exact number of states, saturating at UINT64_MAX.
  static std::uint64_t EstimateSize(const Skeleton& skeleton,
                                    const Hypergraph& hypergraph);

  // Throws CapExceededError when the atom count or the size estimate is
  // over the caps, or when there are more than 64 atoms or messages.
  static std::shared_ptr<const StateUniverse> Enumerate(
      const Skeleton& skeleton, const Hypergraph& hypergraph,
      const UniverseCaps& caps = {});

  const Skeleton& skeleton() const { return skeleton_; }
  const Hypergraph& hypergraph() const { return hypergraph_; }
  const AtomAlphabet& atoms() const { return atoms_; }

  std::size_t size() const { return states_.size(); }
  const EpistemicState& state(std::size_t index) const {
    return states_.at(index);
  }

  int num_messages() const { return static_cast<int>(messages_.size()); }
  const Message& message(int index) const { return messages_.at(index); }
  std::uint64_t VisibleMask(int player) const { return visible_.at(player); }

  std::uint64_t ValuationOf(const Game& game) const;
  // Throws InputError for messages outside the alphabet.
  std::uint64_t MessagesOf(const MessageSet& messages) const;
  MessageSet MessageSetOf(std::uint64_t mask) const;
  std::vector<PreferenceAtom> AtomsOf(std::uint64_t valuation) const;

  std::optional<std::size_t> Find(const EpistemicState& state) const;
  // Index of (game valuation, messages). Throws InputError when the pair
  // is not a state, for instance an untruthful message.
  std::size_t IndexOf(const Game& game, const MessageSet& messages) const;

  // (V_i, M_i) = (V'_i, M'_i).
  bool Indistinguishable(std::size_t a, std::size_t b, int player) const;
  // Breadth-first closure under the union of ~_i for i in `group`.
  std::vector<std::size_t> Reachable(std::size_t start, PlayerSet group) const;
  // Component id of every state under ~_group; computed once per group.
  // Not thread-safe.
  const std::vector<std::uint32_t>& Components(PlayerSet group) const;

 private:
  StateUniverse(const Skeleton& skeleton, const Hypergraph& hypergraph);

  Skeleton skeleton_;
  Hypergraph hypergraph_;
  AtomAlphabet atoms_;
  std::vector<Message> messages_;
  // messages_ indices carrying each atom.
  std::vector<std::uint64_t> messages_of_atom_;
  std::vector<std::uint64_t> visible_;
  std::vector<EpistemicState> states_;
  mutable std::unordered_map<std::uint32_t, std::vector<std::uint32_t>>
      components_;
};

// A set of states as a bitset.
class StateSet {
 public:
  StateSet() = default;
  StateSet(std::size_t size, bool value);

  std::size_t size() const { return size_; }
  bool Test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void Set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void Reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  StateSet& operator&=(const StateSet& other);
  StateSet& operator|=(const StateSet& other);
  std::size_t Count() const;

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Computes the extension of each formula over a universe, bottom-up, and
// memoizes it per formula id. Atoms must belong to the universe's
// skeleton; reflexive atoms are false everywhere.
class ModelChecker {
 public:
  ModelChecker(std::shared_ptr<const StateUniverse> universe,
               const FormulaArena& arena);

  const StateSet& Extension(FormulaId formula);
  bool Models(std::size_t state, FormulaId formula) {
    return Extension(formula).Test(state);
  }
  const StateUniverse& universe() const { return *universe_; }

 private:
  std::shared_ptr<const StateUniverse> universe_;
  const FormulaArena* arena_;
  std::unordered_map<FormulaId, StateSet> memo_;
};

// Outcome read off the dom^infinity formulas, for every state of one
// universe. Holds the universe, arena and checker so that repeated
// queries share work.
class EpistemicOracle {
 public:
  EpistemicOracle(const Skeleton& skeleton, const Hypergraph& hypergraph,
                  const UniverseCaps& caps = {});

  const StateUniverse& universe() const { return *universe_; }
  FormulaArena& arena() { return arena_; }
  DomFormulaBuilder& builder() { return builder_; }
  ModelChecker& checker() { return checker_; }

  // Per player, the strategies whose dom^infinity fails at `state`.
  Restriction OutcomeAt(std::size_t state);

 private:
  std::shared_ptr<const StateUniverse> universe_;
  FormulaArena arena_;
  DomFormulaBuilder builder_;
  ModelChecker checker_;
  // dom_inf_[player][strategy]
  std::vector<std::vector<const StateSet*>> dom_inf_;
};

// Truth of a knowledge-free formula at the valuation induced by `game`.
// Throws UnsupportedQueryError on common-knowledge operators.
bool HoldsInGame(const FormulaArena& arena, FormulaId formula,
                 const Game& game);

// {s_i : (V, M) does not model dom^infinity(s_i)}, V induced by `game`.
Restriction EpistemicOutcome(const Game& game, const Hypergraph& hypergraph,
                             const MessageSet& messages,
                             const UniverseCaps& caps = {});

}  // namespace iesds

#endif  // IESDS_EPISTEMIC_H_

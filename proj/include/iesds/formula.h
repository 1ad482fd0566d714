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

#ifndef IESDS_FORMULA_H_
#define IESDS_FORMULA_H_

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "iesds/game.h"
#include "iesds/hypergraph.h"

namespace iesds {

// Formulas of the positive epistemic language: atoms, conjunction,
// disjunction and common knowledge C_A (K_i is C_{i}). True and False are
// the empty conjunction and disjunction.
using FormulaId = std::uint32_t;

enum class FormulaKind : std::uint8_t { kTrue, kFalse, kAtom, kAnd, kOr, kCk };

struct FormulaNode {
  FormulaKind kind;
  PreferenceAtom atom;  // kAtom only
  PlayerSet group;      // kCk only
  std::vector<FormulaId> children;

  friend bool operator==(const FormulaNode&, const FormulaNode&) = default;
};

// Hash-consing store. Structurally equal formulas get the same id, and
// conjunctions and disjunctions are normalized (flattened, sorted,
// deduplicated, constants folded), so ids can key memo tables.
class FormulaArena {
 public:
  // `max_nodes` bounds the arena; exceeding it throws CapExceededError.
  explicit FormulaArena(std::size_t max_nodes = 1'000'000);

  FormulaId True() const { return kTrueId; }
  FormulaId False() const { return kFalseId; }
  FormulaId Atom(const PreferenceAtom& atom);
  FormulaId And(std::vector<FormulaId> children);
  FormulaId Or(std::vector<FormulaId> children);
  // Throws InputError for an empty group.
  FormulaId Ck(PlayerSet group, FormulaId of);
  FormulaId K(int player, FormulaId of) {
    return Ck(PlayerSet::Single(player), of);
  }

  const FormulaNode& node(FormulaId id) const { return nodes_.at(id); }
  std::size_t size() const { return nodes_.size(); }

  std::string ToString(FormulaId id, const Skeleton& skeleton) const;

 private:
  static constexpr FormulaId kTrueId = 0;
  static constexpr FormulaId kFalseId = 1;

  struct NodeHash {
    std::size_t operator()(const FormulaNode& n) const;
  };

  FormulaId Intern(FormulaNode node);
  FormulaId Junction(FormulaKind kind, std::vector<FormulaId> children);

  std::size_t max_nodes_;
  std::vector<FormulaNode> nodes_;
  std::unordered_map<FormulaNode, FormulaId, NodeHash> index_;
};

// Builds the domin / dom families with sharing: every (level, player,
// strategy) is constructed once per builder.
//
//   domin^1(s)   = OR_{s' != s} AND_{c} s' >_c s
//   domin^l+1(s) = OR_{s' != s} AND_{c} (s' >_c s  OR  OR_{j != i}
//   domin^l(c_j))
//
// and dom^l is the same with K_i wrapped around each disjunction.
class DomFormulaBuilder {
 public:
  DomFormulaBuilder(FormulaArena& arena, const Skeleton& skeleton)
      : arena_(&arena), skeleton_(&skeleton) {}

  // Levels start at 1; throws InputError otherwise.
  FormulaId Domin(int level, int player, int strategy);
  FormulaId Dom(int level, int player, int strategy);

  FormulaArena& arena() { return *arena_; }

 private:
  FormulaId Build(bool epistemic, int level, int player, int strategy);

  FormulaArena* arena_;
  const Skeleton* skeleton_;
  std::map<std::tuple<bool, int, int, int>, FormulaId> memo_;
};

// The level used for dom^infinity: the total number of strategies.
int DomCap(const Skeleton& skeleton);

}  // namespace iesds

#endif  // IESDS_FORMULA_H_

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

#include "iesds/formula.h"

#include <algorithm>
#include <string>

#include "iesds/errors.h"

namespace iesds {

std::size_t FormulaArena::NodeHash::operator()(const FormulaNode& n) const {
  std::size_t h = static_cast<std::size_t>(n.kind);
  auto mix = [&h](std::uint64_t v) {
    h ^= std::hash<std::uint64_t>()(v) + 0x9E3779B97F4A7C15ull + (h << 6) +
         (h >> 2);
  };
  mix(static_cast<std::uint64_t>(n.atom.player));
  mix(static_cast<std::uint64_t>(n.atom.context));
  mix(static_cast<std::uint64_t>(n.atom.better));
  mix(static_cast<std::uint64_t>(n.atom.worse));
  mix(n.group.bits());
  for (FormulaId c : n.children) mix(c);
  return h;
}

FormulaArena::FormulaArena(std::size_t max_nodes) : max_nodes_(max_nodes) {
  Intern(FormulaNode{FormulaKind::kTrue, {}, {}, {}});
  Intern(FormulaNode{FormulaKind::kFalse, {}, {}, {}});
}

FormulaId FormulaArena::Intern(FormulaNode node) {
  auto it = index_.find(node);
  if (it != index_.end()) return it->second;
  if (nodes_.size() >= max_nodes_) {
    throw CapExceededError(
        "formula arena exceeds " + std::to_string(max_nodes_) + " nodes",
        nodes_.size() + 1);
  }
  const FormulaId id = static_cast<FormulaId>(nodes_.size());
  nodes_.push_back(node);
  index_.emplace(std::move(node), id);
  return id;
}

FormulaId FormulaArena::Atom(const PreferenceAtom& atom) {
  return Intern(FormulaNode{FormulaKind::kAtom, atom, {}, {}});
}

FormulaId FormulaArena::Junction(FormulaKind kind,
                                 std::vector<FormulaId> children) {
  const bool is_and = kind == FormulaKind::kAnd;
  const FormulaId unit = is_and ? kTrueId : kFalseId;
  const FormulaId absorbing = is_and ? kFalseId : kTrueId;
  std::vector<FormulaId> flat;
  flat.reserve(children.size());
  for (FormulaId c : children) {
    if (c == absorbing) return absorbing;
    if (c == unit) continue;
    const FormulaNode& n = nodes_.at(c);
    if (n.kind == kind) {
      flat.insert(flat.end(), n.children.begin(), n.children.end());
    } else {
      flat.push_back(c);
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return unit;
  if (flat.size() == 1) return flat.front();
  return Intern(FormulaNode{kind, {}, {}, std::move(flat)});
}

FormulaId FormulaArena::And(std::vector<FormulaId> children) {
  return Junction(FormulaKind::kAnd, std::move(children));
}

FormulaId FormulaArena::Or(std::vector<FormulaId> children) {
  return Junction(FormulaKind::kOr, std::move(children));
}

FormulaId FormulaArena::Ck(PlayerSet group, FormulaId of) {
  if (group.empty()) throw InputError("common knowledge over an empty group");
  return Intern(FormulaNode{FormulaKind::kCk, {}, group, {of}});
}

std::string FormulaArena::ToString(FormulaId id,
                                   const Skeleton& skeleton) const {
  const FormulaNode& n = node(id);
  switch (n.kind) {
    case FormulaKind::kTrue:
      return "true";
    case FormulaKind::kFalse:
      return "false";
    case FormulaKind::kAtom:
      return skeleton.DescribeAtom(n.atom);
    case FormulaKind::kAnd:
    case FormulaKind::kOr: {
      std::string out = "(";
      const char* sep = n.kind == FormulaKind::kAnd ? " & " : " | ";
      for (std::size_t k = 0; k < n.children.size(); ++k) {
        if (k > 0) out += sep;
        out += ToString(n.children[k], skeleton);
      }
      return out + ")";
    }
    case FormulaKind::kCk: {
      const std::string prefix =
          n.group.size() == 1 ? "K" + skeleton.label(n.group.Members()[0])
                              : "C" + n.group.ToString(skeleton);
      return prefix + " " + ToString(n.children[0], skeleton);
    }
  }
  return "";
}

FormulaId DomFormulaBuilder::Domin(int level, int player, int strategy) {
  return Build(false, level, player, strategy);
}

FormulaId DomFormulaBuilder::Dom(int level, int player, int strategy) {
  return Build(true, level, player, strategy);
}

FormulaId DomFormulaBuilder::Build(bool epistemic, int level, int player,
                                   int strategy) {
  if (level < 1) throw InputError("formula level must be at least 1");
  skeleton_->CheckStrategy(player, strategy);
  const auto key = std::make_tuple(epistemic, level, player, strategy);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const Skeleton& sk = *skeleton_;
  const int n = sk.num_players();
  std::vector<FormulaId> alternatives;
  for (int alt = 0; alt < sk.num_strategies(player); ++alt) {
    if (alt == strategy) continue;
    std::vector<FormulaId> per_context;
    per_context.reserve(sk.num_contexts(player));
    for (std::int64_t c = 0; c < sk.num_contexts(player); ++c) {
      const FormulaId atom =
          arena_->Atom(PreferenceAtom{player, c, alt, strategy});
      if (level == 1) {
        per_context.push_back(atom);
        continue;
      }
      std::vector<FormulaId> options{atom};
      for (int j = 0; j < n; ++j) {
        if (j == player) continue;
        options.push_back(
            Build(epistemic, level - 1, j, sk.OpponentStrategy(player, c, j)));
      }
      per_context.push_back(arena_->Or(std::move(options)));
    }
    alternatives.push_back(arena_->And(std::move(per_context)));
  }
  FormulaId body = arena_->Or(std::move(alternatives));
  if (epistemic) body = arena_->K(player, body);
  memo_.emplace(key, body);
  return body;
}

int DomCap(const Skeleton& skeleton) { return skeleton.total_strategies(); }

}  // namespace iesds

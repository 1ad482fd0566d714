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

#include "iesds/game.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "iesds/errors.h"

namespace iesds {

std::string_view NotionName(OptimalityNotion notion) {
  return notion == OptimalityNotion::kLocal ? "local" : "global";
}

Skeleton::Skeleton(std::vector<std::string> player_labels,
                   std::vector<std::vector<std::string>> strategies)
    : labels_(std::move(player_labels)), strategies_(std::move(strategies)) {
  const int n = static_cast<int>(labels_.size());
  if (n < 2) throw InputError("a game needs at least two players");
  if (n > kMaxPlayers) {
    throw InputError("at most " + std::to_string(kMaxPlayers) +
                     " players are supported");
  }
  if (strategies_.size() != labels_.size()) {
    throw InputError("one strategy list per player is required");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) {
        throw InputError("duplicate player id '" + labels_[i] + "'");
      }
    }
    const auto& names = strategies_[i];
    if (names.empty()) {
      throw InputError("player '" + labels_[i] + "' has no strategies");
    }
    if (names.size() > static_cast<std::size_t>(kMaxStrategies)) {
      throw InputError("player '" + labels_[i] + "' has more than " +
                       std::to_string(kMaxStrategies) + " strategies");
    }
    for (std::size_t a = 0; a < names.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        if (names[a] == names[b]) {
          throw InputError("duplicate strategy '" + names[a] +
                           "' for player '" + labels_[i] + "'");
        }
      }
    }
  }
  constexpr std::int64_t kLimit = std::int64_t{1} << 40;
  num_profiles_ = 1;
  for (const auto& names : strategies_) {
    num_profiles_ *= static_cast<std::int64_t>(names.size());
    if (num_profiles_ > kLimit) throw InputError("game has too many profiles");
  }
  num_contexts_.resize(n);
  strides_.assign(n, std::vector<std::int64_t>(n, 0));
  for (int p = 0; p < n; ++p) {
    std::int64_t stride = 1;
    for (int j = n - 1; j >= 0; --j) {
      if (j == p) continue;
      strides_[p][j] = stride;
      stride *= static_cast<std::int64_t>(strategies_[j].size());
    }
    num_contexts_[p] = stride;
  }
}

int Skeleton::total_strategies() const {
  int total = 0;
  for (const auto& names : strategies_) total += static_cast<int>(names.size());
  return total;
}

int Skeleton::FindPlayer(std::string_view label) const {
  for (int i = 0; i < num_players(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw InputError("unknown player '" + std::string(label) + "'");
}

int Skeleton::FindStrategy(int player, std::string_view name) const {
  CheckPlayer(player);
  const auto& names = strategies_[player];
  for (int s = 0; s < static_cast<int>(names.size()); ++s) {
    if (names[s] == name) return s;
  }
  throw InputError("unknown strategy '" + std::string(name) + "' for player '" +
                   labels_[player] + "'");
}

std::vector<int> Skeleton::ContextProfile(int player,
                                          std::int64_t context) const {
  std::vector<int> profile(num_players(), -1);
  for (int j = 0; j < num_players(); ++j) {
    if (j != player) profile[j] = OpponentStrategy(player, context, j);
  }
  return profile;
}

std::int64_t Skeleton::ContextIndex(int player,
                                    const std::vector<int>& profile) const {
  std::int64_t context = 0;
  for (int j = 0; j < num_players(); ++j) {
    if (j == player) continue;
    CheckStrategy(j, profile.at(j));
    context += profile[j] * strides_[player][j];
  }
  return context;
}

std::int64_t Skeleton::ProfileIndex(const std::vector<int>& profile) const {
  std::int64_t index = 0;
  for (int j = 0; j < num_players(); ++j) {
    CheckStrategy(j, profile.at(j));
    index = index * num_strategies(j) + profile[j];
  }
  return index;
}

std::vector<int> Skeleton::Profile(std::int64_t index) const {
  std::vector<int> profile(num_players());
  for (int j = num_players() - 1; j >= 0; --j) {
    profile[j] = static_cast<int>(index % num_strategies(j));
    index /= num_strategies(j);
  }
  return profile;
}

std::string Skeleton::DescribeContext(int player, std::int64_t context) const {
  std::string out = "(";
  bool first = true;
  for (int j = 0; j < num_players(); ++j) {
    if (j == player) continue;
    if (!first) out += ",";
    first = false;
    out += strategy_name(j, OpponentStrategy(player, context, j));
  }
  return out + ")";
}

std::string Skeleton::DescribeAtom(const PreferenceAtom& atom) const {
  return strategy_name(atom.player, atom.better) + " >" +
         DescribeContext(atom.player, atom.context) + " " +
         strategy_name(atom.player, atom.worse);
}

void Skeleton::CheckPlayer(int player) const {
  if (player < 0 || player >= num_players()) {
    throw InputError("player index " + std::to_string(player) +
                     " out of range");
  }
}

void Skeleton::CheckStrategy(int player, int strategy) const {
  CheckPlayer(player);
  if (strategy < 0 || strategy >= num_strategies(player)) {
    throw InputError("strategy index " + std::to_string(strategy) +
                     " out of range for player '" + labels_[player] + "'");
  }
}

void Skeleton::CheckAtom(const PreferenceAtom& atom) const {
  CheckStrategy(atom.player, atom.better);
  CheckStrategy(atom.player, atom.worse);
  if (atom.context < 0 || atom.context >= num_contexts(atom.player)) {
    throw InputError("context index out of range for player '" +
                     labels_[atom.player] + "'");
  }
}

Restriction Restriction::Full(const Skeleton& skeleton) {
  std::vector<std::uint64_t> masks(skeleton.num_players());
  for (int p = 0; p < skeleton.num_players(); ++p) {
    const int k = skeleton.num_strategies(p);
    masks[p] = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  }
  return Restriction(std::move(masks));
}

int Restriction::Count(int player) const {
  return std::popcount(masks_.at(player));
}

std::vector<int> Restriction::Members(int player) const {
  std::vector<int> members;
  for (std::uint64_t m = masks_.at(player); m != 0; m &= m - 1) {
    members.push_back(std::countr_zero(m));
  }
  return members;
}

bool Restriction::AnyEmpty() const {
  return std::any_of(masks_.begin(), masks_.end(),
                     [](std::uint64_t m) { return m == 0; });
}

std::string Restriction::ToString(const Skeleton& skeleton) const {
  std::string out = "(";
  for (int p = 0; p < num_players(); ++p) {
    if (p > 0) out += ",";
    out += "{";
    bool first = true;
    for (int s : Members(p)) {
      if (!first) out += ",";
      first = false;
      out += skeleton.strategy_name(p, s);
    }
    out += "}";
  }
  return out + ")";
}

Restriction Intersect(const Restriction& a, const Restriction& b) {
  if (a.num_players() != b.num_players()) {
    throw InputError("restrictions belong to different games");
  }
  std::vector<std::uint64_t> masks(a.num_players());
  for (int p = 0; p < a.num_players(); ++p) masks[p] = a.mask(p) & b.mask(p);
  return Restriction(std::move(masks));
}

bool IsSubset(const Restriction& a, const Restriction& b) {
  if (a.num_players() != b.num_players()) {
    throw InputError("restrictions belong to different games");
  }
  for (int p = 0; p < a.num_players(); ++p) {
    if ((a.mask(p) & ~b.mask(p)) != 0) return false;
  }
  return true;
}

Game::Game(Skeleton skeleton, std::vector<PreferenceAtom> atoms)
    : skeleton_(std::move(skeleton)), atoms_(std::move(atoms)) {
  for (const auto& atom : atoms_) skeleton_.CheckAtom(atom);
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  const int n = skeleton_.num_players();
  better_mask_.resize(n);
  for (int p = 0; p < n; ++p) {
    better_mask_[p].assign(static_cast<std::size_t>(skeleton_.num_contexts(p)) *
                               skeleton_.num_strategies(p),
                           0);
  }
  for (const auto& atom : atoms_) {
    better_mask_[atom.player]
                [atom.context * skeleton_.num_strategies(atom.player) +
                 atom.worse] |= std::uint64_t{1} << atom.better;
  }
}

std::vector<PreferenceAtom> Game::AtomsOf(int player) const {
  std::vector<PreferenceAtom> out;
  for (const auto& atom : atoms_) {
    if (atom.player == player) out.push_back(atom);
  }
  return out;
}

Game GameFromPayoffs(const Skeleton& skeleton, const PayoffTable& payoffs) {
  const int n = skeleton.num_players();
  std::vector<std::string> missing;
  for (std::int64_t index = 0; index < skeleton.num_profiles(); ++index) {
    const auto profile = skeleton.Profile(index);
    auto it = payoffs.find(profile);
    if (it == payoffs.end() || static_cast<int>(it->second.size()) != n) {
      std::string key;
      for (int j = 0; j < n; ++j) {
        if (j > 0) key += ",";
        key += skeleton.strategy_name(j, profile[j]);
      }
      missing.push_back(it == payoffs.end()
                            ? "missing payoff for profile " + key
                            : "wrong number of payoffs for profile " + key);
    }
  }
  if (!missing.empty()) {
    throw ValidationError("payoff table is not total", std::move(missing));
  }
  std::vector<PreferenceAtom> atoms;
  for (int p = 0; p < n; ++p) {
    const int k = skeleton.num_strategies(p);
    for (std::int64_t context = 0; context < skeleton.num_contexts(p);
         ++context) {
      auto profile = skeleton.ContextProfile(p, context);
      std::vector<double> utility(k);
      for (int s = 0; s < k; ++s) {
        profile[p] = s;
        utility[s] = payoffs.at(profile)[p];
      }
      for (int better = 0; better < k; ++better) {
        for (int worse = 0; worse < k; ++worse) {
          if (utility[better] > utility[worse]) {
            atoms.push_back({p, context, better, worse});
          }
        }
      }
    }
  }
  return Game(skeleton, std::move(atoms));
}

std::string OrderViolation::Describe(const Skeleton& skeleton) const {
  const auto name = [&](int s) { return skeleton.strategy_name(player, s); };
  std::ostringstream out;
  out << "player " << skeleton.label(player) << ", context "
      << skeleton.DescribeContext(player, context) << ": ";
  switch (kind) {
    case Kind::kIrreflexivity:
      out << "irreflexivity violated by " << name(a) << " > " << name(a);
      break;
    case Kind::kAsymmetry:
      out << "asymmetry violated by " << name(a) << " > " << name(b) << " and "
          << name(b) << " > " << name(a);
      break;
    case Kind::kTransitivity:
      out << "transitivity violated: " << name(a) << " > " << name(b) << ", "
          << name(b) << " > " << name(c) << " but not " << name(a) << " > "
          << name(c);
      break;
  }
  return out.str();
}

std::vector<OrderViolation> ValidateGame(const Game& game) {
  using Kind = OrderViolation::Kind;
  const Skeleton& sk = game.skeleton();
  std::vector<OrderViolation> violations;
  for (int p = 0; p < sk.num_players(); ++p) {
    const int k = sk.num_strategies(p);
    for (std::int64_t c = 0; c < sk.num_contexts(p); ++c) {
      for (int a = 0; a < k; ++a) {
        if (game.Prefers(p, c, a, a)) {
          violations.push_back({Kind::kIrreflexivity, p, c, a, a, a});
        }
        for (int b = a + 1; b < k; ++b) {
          if (game.Prefers(p, c, a, b) && game.Prefers(p, c, b, a)) {
            violations.push_back({Kind::kAsymmetry, p, c, a, b, b});
          }
        }
      }
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if (a == b || !game.Prefers(p, c, a, b)) continue;
          for (int d = 0; d < k; ++d) {
            if (d == a || d == b || !game.Prefers(p, c, b, d)) continue;
            if (!game.Prefers(p, c, a, d)) {
              violations.push_back({Kind::kTransitivity, p, c, a, b, d});
            }
          }
        }
      }
    }
  }
  return violations;
}

bool IsUndominated(const Game& game, OptimalityNotion notion, int player,
                   int strategy, const Restriction& restriction) {
  const Skeleton& sk = game.skeleton();
  sk.CheckStrategy(player, strategy);
  if (restriction.num_players() != sk.num_players()) {
    throw InputError("restriction belongs to a different game");
  }
  const std::uint64_t alternatives = notion == OptimalityNotion::kLocal
                                         ? restriction.mask(player)
                                         : Restriction::Full(sk).mask(player);
  return IsUndominatedBy(sk, restriction, player, strategy, alternatives,
                         [&](std::int64_t context, int better, int worse) {
                           return game.Prefers(player, context, better, worse);
                         });
}

}  // namespace iesds

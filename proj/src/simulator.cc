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

#include "iesds/simulator.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "iesds/elimination.h"
#include "iesds/errors.h"
#include "iesds/formula.h"
#include "iesds/knowledge.h"
#include "iesds/random.h"

namespace iesds {
namespace {

std::vector<int> EvaluationOrder(const Schedule& schedule, int n) {
  if (schedule.evaluation_order.empty()) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  std::vector<int> sorted = schedule.evaluation_order;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k) {
    if (static_cast<int>(sorted.size()) != n || sorted[k] != k) {
      throw InputError("evaluation order must list every player exactly once");
    }
  }
  return schedule.evaluation_order;
}

// One player's process: its knowledge plus what it has already reported.
class PlayerProcess {
 public:
  PlayerProcess(const Game& game, const Hypergraph& hypergraph, int player)
      : knowledge_(game, hypergraph, player),
        picture_(Restriction::Full(game.skeleton())) {}

  PlayerKnowledge& knowledge() { return knowledge_; }
  const Restriction& picture() const { return picture_; }

  void Evaluate(int round, std::vector<TraceEvent>& trace) {
    const Skeleton& sk = knowledge_.skeleton();
    const int i = knowledge_.player();
    const int n = sk.num_players();
    for (int level = 1; level <= DomCap(sk); ++level) {
      Restriction at_level = picture_;
      for (int k = 0; k < n; ++k) {
        for (int s = 0; s < sk.num_strategies(k); ++s) {
          if (!knowledge_.KnownDominated(level, k, s)) continue;
          at_level.Erase(k, s);
          Report(TraceEvent::Query::kDominated, level, k, s, round, trace);
        }
      }
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int s = 0; s < sk.num_strategies(i); ++s) {
          if (knowledge_.KnownDominated(level, i, s, {i, j})) {
            Report(TraceEvent::Query::kKnowsOwn, level, j, s, round, trace);
          }
        }
      }
      if (!(at_level == picture_)) {
        picture_ = at_level;
        TraceEvent e;
        e.kind = TraceEvent::Kind::kPicture;
        e.round = round;
        e.player = i;
        e.picture = picture_;
        trace.push_back(std::move(e));
      }
    }
  }

 private:
  void Report(TraceEvent::Query query, int level, int target, int strategy,
              int round, std::vector<TraceEvent>& trace) {
    if (!reported_.emplace(query, target, strategy).second) return;
    const Skeleton& sk = knowledge_.skeleton();
    const int i = knowledge_.player();
    TraceEvent e;
    e.kind = TraceEvent::Kind::kConclude;
    e.round = round;
    e.player = i;
    e.query = query;
    e.level = level;
    e.target = target;
    e.strategy = strategy;
    const std::string dom = "dom^" + std::to_string(level) + "(" +
                            sk.strategy_name(e.strategy_owner(), strategy) +
                            ")";
    const std::string& me = sk.label(i);
    const std::string& them = sk.label(target);
    const std::string what =
        sk.strategy_name(e.strategy_owner(), strategy) + " is dominated";
    if (query == TraceEvent::Query::kDominated) {
      e.formula = dom;
      e.text = me + " concludes that " +
               (target == i ? what : them + " knows that " + what);
    } else {
      e.formula = "K" + them + " " + dom;
      e.text = me + " concludes that " + them + " knows that " + me +
               " knows that " + what;
    }
    trace.push_back(std::move(e));
  }

  PlayerKnowledge knowledge_;
  Restriction picture_;
  std::set<std::tuple<TraceEvent::Query, int, int>> reported_;
};

}  // namespace

SimulationResult Simulate(const Game& game, const Hypergraph& hypergraph,
                          const Schedule& schedule) {
  const Skeleton& sk = game.skeleton();
  const int n = sk.num_players();
  if (hypergraph.num_players() != n) {
    throw InputError("hypergraph and game disagree on the number of players");
  }
  const std::vector<int> order = EvaluationOrder(schedule, n);
  const MessageSet all = AllMessages(hypergraph, game);

  std::vector<Message> plan;
  if (schedule.mode == Schedule::Mode::kScripted) {
    MessageSet seen;
    for (const Message& m : schedule.script) {
      ValidateMessages(game, hypergraph, MessageSet({m}));
      if (!seen.Insert(m)) {
        throw InputError("script repeats " + DescribeMessage(sk, m));
      }
      plan.push_back(m);
    }
  }
  const bool draw =
      schedule.mode == Schedule::Mode::kSeeded || schedule.exhaustive;

  std::vector<PlayerProcess> players;
  players.reserve(n);
  for (int i = 0; i < n; ++i) players.emplace_back(game, hypergraph, i);

  SimulationResult result;
  for (int i : order) players[i].Evaluate(0, result.trace);

  auto deliver = [&](const Message& m) {
    const int round = static_cast<int>(result.sent.size()) + 1;
    result.sent.push_back(m);
    result.messages_sent.Insert(m);
    TraceEvent send;
    send.kind = TraceEvent::Kind::kSend;
    send.round = round;
    send.message = m;
    result.trace.push_back(send);
    for (int i : order) {
      if (m.arc.Contains(i)) players[i].knowledge().Observe(m);
    }
    for (int i : order) {
      if (m.arc.Contains(i)) players[i].Evaluate(round, result.trace);
    }
  };

  for (const Message& m : plan) deliver(m);
  if (draw) {
    std::vector<Message> remaining;
    for (const Message& m : all) {
      if (!result.messages_sent.Contains(m)) remaining.push_back(m);
    }
    Rng rng(schedule.seed);
    while (!remaining.empty()) {
      const auto k =
          static_cast<std::ptrdiff_t>(rng.UniformIndex(remaining.size()));
      const Message m = remaining[k];
      remaining.erase(remaining.begin() + k);
      deliver(m);
    }
  }

  const int last_round = static_cast<int>(result.sent.size());
  for (int i : order) {
    TraceEvent e;
    e.kind = TraceEvent::Kind::kTerminate;
    e.round = last_round;
    e.player = i;
    result.trace.push_back(e);
  }
  for (int i = 0; i < n; ++i) {
    result.final_pictures.push_back(players[i].picture());
  }
  return result;
}

VerifyReport VerifyRun(const SimulationResult& result, const Game& game,
                       const Hypergraph& hypergraph) {
  const Skeleton& sk = game.skeleton();
  const int n = sk.num_players();
  const Hypergraph closure = ClosureUnderIntersection(hypergraph);
  VerifyReport report;
  auto fail = [&report](std::string why) {
    if (report.ok) {
      report.ok = false;
      report.first_divergence = std::move(why);
    }
  };

  std::vector<Message> sends;
  for (const TraceEvent& e : result.trace) {
    if (e.kind == TraceEvent::Kind::kSend) sends.push_back(e.message);
  }
  if (sends != result.sent) fail("trace Send events differ from sent list");

  std::vector<PlayerKnowledge> replay;
  std::vector<Restriction> previous;
  for (int i = 0; i < n; ++i) {
    replay.emplace_back(game, hypergraph, i);
    previous.push_back(Restriction::Full(sk));
  }
  MessageSet prefix;
  for (std::size_t t = 0; t <= result.sent.size() && report.ok; ++t) {
    if (t > 0) {
      const Message& m = result.sent[t - 1];
      ValidateMessages(game, hypergraph, MessageSet({m}));
      prefix.Insert(m);
      for (int i = 0; i < n; ++i) {
        if (m.arc.Contains(i)) replay[i].Observe(m);
      }
    }
    const Restriction expected = OutcomeIntermediateOnClosure(
        game, closure, prefix, OptimalityNotion::kGlobal);
    for (int i = 0; i < n && report.ok; ++i) {
      const Restriction picture = replay[i].CurrentPicture();
      if (picture.mask(i) != expected.mask(i)) {
        fail("after " + std::to_string(t) + " messages, player " + sk.label(i) +
             " pictures " + picture.ToString(sk) + " but G(H,M) is " +
             expected.ToString(sk));
      } else if (!IsSubset(picture, previous[i])) {
        fail("after " + std::to_string(t) + " messages, player " + sk.label(i) +
             " regained a strategy: " + picture.ToString(sk));
      }
      previous[i] = picture;
    }
    ++report.prefixes_checked;
  }
  if (!report.ok) return report;

  if (result.final_pictures.size() != static_cast<std::size_t>(n)) {
    fail("final pictures missing");
    return report;
  }
  for (int i = 0; i < n; ++i) {
    if (!(result.final_pictures[i] == previous[i])) {
      fail("player " + sk.label(i) + " final picture " +
           result.final_pictures[i].ToString(sk) + " differs from replay " +
           previous[i].ToString(sk));
      return report;
    }
  }
  if (prefix == AllMessages(hypergraph, game)) {
    const Restriction complete =
        OutcomeComplete(game, hypergraph, OptimalityNotion::kGlobal);
    for (int i = 0; i < n; ++i) {
      if (previous[i].mask(i) != complete.mask(i)) {
        fail("player " + sk.label(i) + " ends with " +
             previous[i].ToString(sk) + " but G(H) is " +
             complete.ToString(sk));
        break;
      }
    }
  }
  return report;
}

}  // namespace iesds

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

#include "iesds/verify.h"

#include <sstream>

#include "iesds/elimination.h"
#include "iesds/errors.h"
#include "iesds/simulator.h"

namespace iesds {
namespace {

constexpr OptimalityNotion kNotions[] = {OptimalityNotion::kLocal,
                                         OptimalityNotion::kGlobal};

CheckResult Pass(std::string name) {
  return {std::move(name), CheckStatus::kPass, ""};
}

CheckResult Fail(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::kFail, std::move(detail)};
}

// Walks the iteration produced by `iterate` and compares one Local step
// with one Global step at every visited restriction.
template <typename Iterate, typename Step>
std::string FirstStepDisagreement(const Skeleton& sk, PlayerSet arc,
                                  Iterate&& iterate, Step&& step) {
  std::string divergence;
  for (OptimalityNotion walk : kNotions) {
    iterate(walk, [&](PlayerSet, const Restriction& r) {
      if (!divergence.empty()) return;
      const Restriction local = step(r, OptimalityNotion::kLocal);
      const Restriction global = step(r, OptimalityNotion::kGlobal);
      if (local != global) {
        divergence = "arc " + arc.ToString(sk) + " at " + r.ToString(sk) +
                     ": local step gives " + local.ToString(sk) +
                     ", global step gives " + global.ToString(sk);
      }
    });
    if (!divergence.empty()) break;
  }
  return divergence;
}

}  // namespace

std::string_view CheckStatusName(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kSkipped:
      return "SKIP";
  }
  return "";
}

bool VerificationReport::ok() const {
  for (const auto& check : checks) {
    if (check.status == CheckStatus::kFail) return false;
  }
  return true;
}

std::string VerificationReport::ToString() const {
  std::ostringstream out;
  for (const auto& check : checks) {
    out << CheckStatusName(check.status) << " " << check.name;
    if (!check.detail.empty()) out << ": " << check.detail;
    out << "\n";
  }
  return out.str();
}

CheckResult CheckLocalGlobalSequences(const Game& game,
                                      const Hypergraph& hypergraph,
                                      const MessageSet& messages) {
  const std::string name = "local and global agree along iterations";
  const Skeleton& sk = game.skeleton();
  std::vector<PlayerSet> arcs = hypergraph.arcs();
  arcs.push_back(PlayerSet::All(sk.num_players()));
  for (PlayerSet arc : arcs) {
    const std::string d = FirstStepDisagreement(
        sk, arc,
        [&](OptimalityNotion notion, const IterationObserver& observer) {
          IterateToFixpoint(game, arc, notion, observer);
        },
        [&](const Restriction& r, OptimalityNotion notion) {
          return ApplyT(game, arc, r, notion);
        });
    if (!d.empty()) return Fail(name, "complete operator, " + d);
  }
  const EntailmentIndex entailment(sk, messages);
  const Hypergraph closure = ClosureUnderIntersection(hypergraph);
  for (PlayerSet arc : closure.arcs()) {
    const std::string d = FirstStepDisagreement(
        sk, arc,
        [&](OptimalityNotion notion, const IterationObserver& observer) {
          IterateIntermediateToFixpoint(game, arc, entailment, notion,
                                        observer);
        },
        [&](const Restriction& r, OptimalityNotion notion) {
          return ApplyTIntermediate(game, arc, entailment, r, notion);
        });
    if (!d.empty()) return Fail(name, "intermediate operator, " + d);
  }
  return Pass(name);
}

CheckResult CheckGrandCoalitionInside(const Game& game,
                                      const Hypergraph& hypergraph) {
  const std::string name = "grand coalition outcome inside G(H)";
  const Skeleton& sk = game.skeleton();
  for (OptimalityNotion notion : kNotions) {
    const Restriction grand =
        IterateToFixpoint(game, PlayerSet::All(sk.num_players()), notion);
    const Restriction outcome = OutcomeComplete(game, hypergraph, notion);
    if (!IsSubset(grand, outcome)) {
      return Fail(name, std::string(NotionName(notion)) + ": T_N gives " +
                            grand.ToString(sk) + ", G(H) is " +
                            outcome.ToString(sk));
    }
  }
  return Pass(name);
}

CheckResult CheckNotionInvariance(const Game& game,
                                  const Hypergraph& hypergraph,
                                  const MessageSet& messages) {
  const std::string name = "outcomes independent of the notion";
  const Skeleton& sk = game.skeleton();
  const Restriction cl =
      OutcomeComplete(game, hypergraph, OptimalityNotion::kLocal);
  const Restriction cg =
      OutcomeComplete(game, hypergraph, OptimalityNotion::kGlobal);
  if (cl != cg) {
    return Fail(name, "G(H) is " + cl.ToString(sk) + " under local, " +
                          cg.ToString(sk) + " under global");
  }
  const Restriction il =
      OutcomeIntermediate(game, hypergraph, messages, OptimalityNotion::kLocal);
  const Restriction ig = OutcomeIntermediate(game, hypergraph, messages,
                                             OptimalityNotion::kGlobal);
  if (il != ig) {
    return Fail(name, "G(H,M) is " + il.ToString(sk) + " under local, " +
                          ig.ToString(sk) + " under global");
  }
  return Pass(name);
}

CheckResult CheckOracleAgreement(const Game& game, const Hypergraph& hypergraph,
                                 const MessageSet& messages,
                                 const UniverseCaps& caps) {
  const std::string name = "operator matches epistemic characterization";
  const Skeleton& sk = game.skeleton();
  try {
    EpistemicOracle oracle(sk, hypergraph, caps);
    const MessageSet all = AllMessages(hypergraph, game);
    const std::pair<std::string, const MessageSet*> cases[] = {
        {"M", &messages}, {"allmsgs(H)", &all}};
    for (const auto& [label, m] : cases) {
      const Restriction epistemic =
          oracle.OutcomeAt(oracle.universe().IndexOf(game, *m));
      const Restriction operational =
          OutcomeIntermediate(game, hypergraph, *m, OptimalityNotion::kGlobal);
      if (epistemic != operational) {
        return Fail(name, "at " + label + " the formulas give " +
                              epistemic.ToString(sk) + ", the operator " +
                              operational.ToString(sk));
      }
    }
  } catch (const CapExceededError& e) {
    return {name, CheckStatus::kSkipped, e.what()};
  }
  return Pass(name);
}

CheckResult CheckAllMessagesOutcome(const Game& game,
                                    const Hypergraph& hypergraph) {
  const std::string name = "G(H, allmsgs(H)) equals G(H)";
  const Skeleton& sk = game.skeleton();
  for (OptimalityNotion notion : kNotions) {
    const Restriction with_all = OutcomeIntermediate(
        game, hypergraph, AllMessages(hypergraph, game), notion);
    const Restriction complete = OutcomeComplete(game, hypergraph, notion);
    if (with_all != complete) {
      return Fail(name, std::string(NotionName(notion)) + ": " +
                            with_all.ToString(sk) + " vs " +
                            complete.ToString(sk));
    }
  }
  return Pass(name);
}

CheckResult CheckRunAgreement(const Game& game, const Hypergraph& hypergraph,
                              const MessageSet& messages, std::uint64_t seed) {
  const std::string name = "simulated pictures match operator outcomes";
  const std::vector<Message> script(messages.begin(), messages.end());
  const SimulationResult scripted =
      Simulate(game, hypergraph, Schedule::Scripted(script));
  VerifyReport report = VerifyRun(scripted, game, hypergraph);
  if (!report.ok) {
    return Fail(name, "scripted run, " + report.first_divergence);
  }
  const SimulationResult seeded =
      Simulate(game, hypergraph, Schedule::Seeded(seed));
  report = VerifyRun(seeded, game, hypergraph);
  if (!report.ok) {
    return Fail(name, "seeded run, " + report.first_divergence);
  }
  return Pass(name);
}

VerificationReport VerifyInstance(const Game& game,
                                  const Hypergraph& hypergraph,
                                  const MessageSet& messages,
                                  const VerifyConfig& config) {
  ValidateMessages(game, hypergraph, messages);
  VerificationReport report;
  report.checks.push_back(
      CheckLocalGlobalSequences(game, hypergraph, messages));
  report.checks.push_back(CheckGrandCoalitionInside(game, hypergraph));
  report.checks.push_back(CheckNotionInvariance(game, hypergraph, messages));
  report.checks.push_back(
      CheckOracleAgreement(game, hypergraph, messages, config.caps));
  report.checks.push_back(
      CheckRunAgreement(game, hypergraph, messages, config.seed));
  report.checks.push_back(CheckAllMessagesOutcome(game, hypergraph));
  return report;
}

}  // namespace iesds

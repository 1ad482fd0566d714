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

#ifndef IESDS_VERIFY_H_
#define IESDS_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "iesds/epistemic.h"
#include "iesds/game.h"
#include "iesds/hypergraph.h"
#include "iesds/messages.h"

namespace iesds {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string_view CheckStatusName(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  // The first counterexample on failure, the reason when skipped.
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  // Skipped checks do not count as failures.
  bool ok() const;
  std::string ToString() const;
};

struct VerifyConfig {
  UniverseCaps caps;
  std::uint64_t seed = 0;
};

// Along every fixpoint iteration of the complete operator on N and on each
// arc of H, and of the intermediate operator on each arc of the closure of
// H, applying one step with the Local and with the Global notion removes
// the same strategies. Both notions' iteration sequences are walked.
CheckResult CheckLocalGlobalSequences(const Game& game,
                                      const Hypergraph& hypergraph,
                                      const MessageSet& messages);

// The customary outcome on N lies inside G(H) for both notions.
CheckResult CheckGrandCoalitionInside(const Game& game,
                                      const Hypergraph& hypergraph);

// G(H) and G(H, M) are the same under both notions.
CheckResult CheckNotionInvariance(const Game& game,
                                  const Hypergraph& hypergraph,
                                  const MessageSet& messages);

// G(H, M) agrees with the epistemic characterization, and G(H, allmsgs)
// with G(H). Skipped when the universe exceeds the caps.
CheckResult CheckOracleAgreement(const Game& game, const Hypergraph& hypergraph,
                                 const MessageSet& messages,
                                 const UniverseCaps& caps);

// G(H, allmsgs(H)) = G(H).
CheckResult CheckAllMessagesOutcome(const Game& game,
                                    const Hypergraph& hypergraph);

// A scripted run delivering `messages` and an exhaustive seeded run both
// keep every player's own picture equal to the operator outcome at each
// prefix.
CheckResult CheckRunAgreement(const Game& game, const Hypergraph& hypergraph,
                              const MessageSet& messages, std::uint64_t seed);

VerificationReport VerifyInstance(const Game& game,
                                  const Hypergraph& hypergraph,
                                  const MessageSet& messages,
                                  const VerifyConfig& config);

}  // namespace iesds

#endif  // IESDS_VERIFY_H_

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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "example_games.h"
#include "iesds/cli.h"
#include "iesds/elimination.h"
#include "iesds/epistemic.h"
#include "iesds/json_io.h"
#include "iesds/knowledge.h"
#include "iesds/random.h"
#include "iesds/simulator.h"
#include "iesds/verify.h"

namespace iesds {
namespace {

using ::iesds::testing::CombiningStepGame;
using ::iesds::testing::H;
using ::iesds::testing::HbarMattersGame;
using ::iesds::testing::HbarMattersM;
using ::iesds::testing::HbarMattersMPrime;
using ::iesds::testing::HInfluencesOutcomeGame;
using ::iesds::testing::IntermediateStatesMDoublePrime;
using ::iesds::testing::IntermediateStatesMPrime;
using ::iesds::testing::P;
using ::iesds::testing::R;

constexpr OptimalityNotion kNotions[] = {OptimalityNotion::kLocal,
                                         OptimalityNotion::kGlobal};

// The tiny universes of criterion 8 reach 1,185,921 states.
constexpr UniverseCaps kTinyCaps{8, 2'000'000};

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Collects mismatches, keeping the first as the reported counterexample.
class Tally {
 public:
  template <typename Describe>
  void Check(bool ok, Describe&& describe) {
    ++checked_;
    if (ok) return;
    if (violations_++ == 0) first_ = describe();
  }
  long checked() const { return checked_; }
  long violations() const { return violations_; }

  Verdict Finish(const std::string& what) const {
    std::ostringstream s;
    s << checked_ << " " << what << ", " << violations_ << " violations";
    if (violations_ > 0) s << "; first: " << first_;
    return {violations_ == 0 && checked_ > 0, s.str()};
  }

 private:
  long checked_ = 0;
  long violations_ = 0;
  std::string first_;
};

void Expect(Tally& tally, const Skeleton& sk, const std::string& label,
            const Restriction& got, const Restriction& want) {
  tally.Check(got == want, [&] {
    return label + " is " + got.ToString(sk) + ", expected " +
           want.ToString(sk);
  });
}

// ---------------------------------------------------------------------
// Criteria 1-4: the worked examples.

Verdict CombiningStep() {
  const Game g = CombiningStepGame();
  const Skeleton& sk = g.skeleton();
  const Hypergraph h = H(3, {{1, 2}, {1, 3}});
  Tally t;
  for (OptimalityNotion n : kNotions) {
    Expect(t, sk, "T_{1,2}", IterateToFixpoint(g, P({1, 2}), n),
           R(sk, "({U,D},{L},{l,r})"));
    Expect(t, sk, "T_{1,3}", IterateToFixpoint(g, P({1, 3}), n),
           R(sk, "({U,D},{L,R},{l})"));
    Expect(t, sk, "G(H)", OutcomeComplete(g, h, n), R(sk, "({U},{L},{l})"));
  }
  return t.Finish("exact values");
}

Verdict HInfluencesOutcome() {
  const Game g = HInfluencesOutcomeGame();
  const Skeleton& sk = g.skeleton();
  Tally t;
  for (OptimalityNotion n : kNotions) {
    Expect(t, sk, "G({N})", OutcomeComplete(g, H(3, {{1, 2, 3}}), n),
           R(sk, "({D},{R},{A})"));
    Expect(t, sk, "G(pairwise)",
           OutcomeComplete(g, H(3, {{1, 2}, {2, 3}, {1, 3}}), n),
           R(sk, "({D},{R},{A,B})"));
  }
  return t.Finish("exact values");
}

Verdict IntermediateStates() {
  const Game g = CombiningStepGame();
  const Skeleton& sk = g.skeleton();
  const Hypergraph h = H(3, {{1, 2}, {1, 3}});
  Tally t;
  for (OptimalityNotion n : kNotions) {
    Expect(t, sk, "G(H,{})", OutcomeIntermediate(g, h, MessageSet(), n),
           R(sk, "({U,D},{L},{l})"));
    Expect(t, sk, "G(H,M')",
           OutcomeIntermediate(g, h, IntermediateStatesMPrime(sk), n),
           R(sk, "({U,D},{L},{l})"));
    Expect(t, sk, "G(H,M'')",
           OutcomeIntermediate(g, h, IntermediateStatesMDoublePrime(sk), n),
           R(sk, "({U},{L},{l})"));
  }
  return t.Finish("exact values");
}

Verdict HbarMatters() {
  const Game g = HbarMattersGame();
  const Skeleton& sk = g.skeleton();
  const Hypergraph h = H(4, {{1, 2, 3}, {1, 2, 4}});
  const PreferenceAtom a_over_c =
      testing::Atom(sk, 1, {"L", "X", "Y"}, "A", "C");
  Tally t;
  t.Check(Entails(HbarMattersM(sk), P({1, 2}), a_over_c),
          [] { return std::string("M|{1,2} does not entail A > C"); });
  t.Check(!Entails(HbarMattersM(sk), P({1, 2, 3}), a_over_c),
          [] { return std::string("M|{1,2,3} entails A > C"); });
  for (OptimalityNotion n : kNotions) {
    const Restriction out = OutcomeIntermediate(g, h, HbarMattersMPrime(sk), n);
    t.Check(out.mask(0) == R(sk, "({D},{R},{X},{Y})").mask(0) &&
                out.mask(1) == R(sk, "({D},{R},{X},{Y})").mask(1),
            [&] { return "G(H,M') is " + out.ToString(sk); });
  }
  return t.Finish("exact values");
}

// ---------------------------------------------------------------------
// Criteria 5-7: random corpus.

struct Instance {
  Game game;
  Hypergraph hypergraph;
  MessageSet messages;
};

const std::vector<Instance>& Corpus() {
  static const std::vector<Instance> corpus = [] {
    std::vector<Instance> out;
    Rng rng(20'261'016);
    const RandomGameOptions options{2, 3, 1, 3, 4};
    for (int k = 0; k < 600; ++k) {
      const Skeleton sk = RandomSkeleton(rng, options);
      Game game =
          k % 2 == 0 ? RandomPayoffGame(rng, sk) : RandomOrderGame(rng, sk);
      Hypergraph h = RandomHypergraph(rng, sk.num_players(), 0.4);
      MessageSet m = RandomMessages(rng, game, h, 0.5);
      out.push_back({std::move(game), std::move(h), std::move(m)});
    }
    return out;
  }();
  return corpus;
}

std::string Describe(const Instance& in) {
  const Skeleton& sk = in.game.skeleton();
  return "game " + GameToJson(in.game).dump() + " hypergraph " +
         in.hypergraph.ToString(sk);
}

Verdict GrandCoalitionInside() {
  Tally t;
  for (const Instance& in : Corpus()) {
    const int n = in.game.num_players();
    for (OptimalityNotion notion : kNotions) {
      const Restriction grand =
          IterateToFixpoint(in.game, PlayerSet::All(n), notion);
      const Restriction outcome =
          OutcomeComplete(in.game, in.hypergraph, notion);
      t.Check(IsSubset(grand, outcome), [&] { return Describe(in); });
    }
  }
  return t.Finish("inclusions over " + std::to_string(Corpus().size()) +
                  " games");
}

Verdict NotionInvariance() {
  Tally t;
  for (const Instance& in : Corpus()) {
    const Restriction local = OutcomeIntermediate(
        in.game, in.hypergraph, in.messages, OptimalityNotion::kLocal);
    const Restriction global = OutcomeIntermediate(
        in.game, in.hypergraph, in.messages, OptimalityNotion::kGlobal);
    t.Check(local == global, [&] { return Describe(in); });
    const Restriction all_local = OutcomeIntermediate(
        in.game, in.hypergraph, AllMessages(in.hypergraph, in.game),
        OptimalityNotion::kLocal);
    const Restriction all_global = OutcomeIntermediate(
        in.game, in.hypergraph, AllMessages(in.hypergraph, in.game),
        OptimalityNotion::kGlobal);
    t.Check(all_local == all_global, [&] { return Describe(in); });
  }
  return t.Finish("outcome pairs");
}

// Walks the library's fixpoint iterations, then random sequences
// G^{k+1} between sd^g(G^k) and G^k on N.
Verdict LocalGlobalAlongSequences() {
  Tally t;
  Rng rng(7);
  for (const Instance& in : Corpus()) {
    const CheckResult walked =
        CheckLocalGlobalSequences(in.game, in.hypergraph, in.messages);
    t.Check(walked.status == CheckStatus::kPass,
            [&] { return walked.detail + " in " + Describe(in); });
    const Skeleton& sk = in.game.skeleton();
    const PlayerSet everyone = PlayerSet::All(sk.num_players());
    for (int walk = 0; walk < 3; ++walk) {
      Restriction g = Restriction::Full(sk);
      while (true) {
        const Restriction local =
            ApplyT(in.game, everyone, g, OptimalityNotion::kLocal);
        const Restriction global =
            ApplyT(in.game, everyone, g, OptimalityNotion::kGlobal);
        t.Check(local == global,
                [&] { return "at " + g.ToString(sk) + " in " + Describe(in); });
        if (global == g) break;
        // Keep each strategy that sd^g removes with probability 1/2,
        // but always drop at least one.
        Restriction next = global;
        bool dropped = false;
        for (int i = 0; i < sk.num_players(); ++i) {
          for (int s : g.Members(i)) {
            if (global.Contains(i, s)) continue;
            if (rng.Bernoulli(0.5)) {
              next.set_mask(i, next.mask(i) | (std::uint64_t{1} << s));
            } else {
              dropped = true;
            }
          }
        }
        if (!dropped) next = global;
        g = next;
      }
    }
  }
  return t.Finish("rounds");
}

// ---------------------------------------------------------------------
// Criteria 8-10: exhaustive tiny universes.

struct TinyUniverse {
  Skeleton skeleton;
  Hypergraph hypergraph;
};

std::vector<TinyUniverse> TinyUniverses() {
  std::vector<TinyUniverse> out;
  const std::vector<std::vector<std::vector<std::string>>> shapes = {
      {{"a", "b"}, {"c", "d"}, {"e"}}, {{"a", "b"}, {"c"}, {"e"}},
      {{"a"}, {"c", "d"}, {"e"}},      {{"a"}, {"c"}, {"e"}},
      {{"a", "b"}, {"c", "d"}},        {{"a", "b"}, {"c"}},
  };
  for (const auto& strategies : shapes) {
    const int n = static_cast<int>(strategies.size());
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    const Skeleton sk(labels, strategies);
    const int groups = (1 << n) - 1;
    for (std::uint32_t family = 0; family < (1u << groups); ++family) {
      std::vector<PlayerSet> arcs;
      for (int g = 0; g < groups; ++g) {
        if ((family >> g) & 1u) arcs.push_back(PlayerSet(g + 1));
      }
      out.push_back({sk, Hypergraph(n, std::move(arcs))});
    }
  }
  return out;
}

// Games induced by valuations, shared across hypergraphs of a skeleton.
class GameCache {
 public:
  const Game& Get(const StateUniverse& universe, std::uint64_t valuation) {
    const Skeleton& sk = universe.skeleton();
    if (!(sk == skeleton_)) {
      skeleton_ = sk;
      games_.clear();
    }
    auto it = games_.find(valuation);
    if (it == games_.end()) {
      it = games_.emplace(valuation, Game(sk, universe.AtomsOf(valuation)))
               .first;
    }
    return it->second;
  }

 private:
  Skeleton skeleton_;
  std::map<std::uint64_t, Game> games_;
};

// The universes of criterion 8, enumerated once and shared with 9 and 10.
struct TinyCase {
  TinyUniverse tiny;
  std::unique_ptr<EpistemicOracle> oracle;
};

std::vector<TinyCase>& TinyCases() {
  static std::vector<TinyCase> cases;
  return cases;
}

Verdict OracleEquality() {
  Tally t;
  GameCache games;
  std::uint64_t states = 0;
  for (TinyUniverse& tiny : TinyUniverses()) {
    auto oracle = std::make_unique<EpistemicOracle>(tiny.skeleton,
                                                    tiny.hypergraph, kTinyCaps);
    const StateUniverse& u = oracle->universe();
    const Hypergraph closure = ClosureUnderIntersection(tiny.hypergraph);
    for (std::size_t s = 0; s < u.size(); ++s) {
      const EpistemicState& state = u.state(s);
      const Game& game = games.Get(u, state.valuation);
      const MessageSet m = u.MessageSetOf(state.messages);
      const Restriction epistemic = oracle->OutcomeAt(s);
      const Restriction operational = OutcomeIntermediateOnClosure(
          game, closure, m, OptimalityNotion::kGlobal);
      t.Check(epistemic == operational, [&] {
        return "state " + std::to_string(s) + " of " +
               tiny.hypergraph.ToString(tiny.skeleton) + ": formulas give " +
               epistemic.ToString(tiny.skeleton) + ", operator " +
               operational.ToString(tiny.skeleton);
      });
    }
    states += u.size();
    TinyCases().push_back({std::move(tiny), std::move(oracle)});
  }
  return t.Finish("states over " + std::to_string(TinyCases().size()) +
                  " universes (" + std::to_string(states) + " total)");
}

std::vector<PlayerSet> Groups(int n) {
  std::vector<PlayerSet> out;
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
    out.push_back(PlayerSet(bits));
  }
  return out;
}

// Formulas exercised by the Appendix suite on one universe.
std::vector<FormulaId> FormulaFamily(EpistemicOracle& oracle) {
  const StateUniverse& u = oracle.universe();
  const Skeleton& sk = u.skeleton();
  FormulaArena& arena = oracle.arena();
  std::vector<FormulaId> atoms;
  for (int a = 0; a < u.atoms().size(); ++a) {
    atoms.push_back(arena.Atom(u.atoms().atom(a)));
  }
  std::vector<FormulaId> out = atoms;
  for (int i = 0; i < sk.num_players(); ++i) {
    for (int s = 0; s < sk.num_strategies(i); ++s) {
      out.push_back(oracle.builder().Dom(1, i, s));
      out.push_back(oracle.builder().Dom(DomCap(sk), i, s));
    }
  }
  for (std::size_t a = 0; a + 1 < atoms.size(); ++a) {
    out.push_back(arena.Or({atoms[a], atoms[a + 1]}));
    out.push_back(arena.And(
        {atoms[a], arena.K(atoms.size() % sk.num_players(), atoms[a + 1])}));
  }
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    for (int i = 0; i < sk.num_players(); ++i) {
      out.push_back(arena.K(i, atoms[a]));
    }
  }
  return out;
}

// Exact persistence: every formula's extension is closed upward along the
// generators of the preorder, which are adding a true atom, adding a
// message, and dropping a message whose (sender, atom) is also sent to a
// strictly larger arc.
void Persistence(EpistemicOracle& oracle, const std::vector<FormulaId>& fs,
                 Tally& t) {
  const StateUniverse& u = oracle.universe();
  const Skeleton& sk = u.skeleton();
  std::vector<const StateSet*> ext;
  for (FormulaId f : fs) ext.push_back(&oracle.checker().Extension(f));
  std::vector<std::uint64_t> covered_by(u.num_messages(), 0);
  for (int k = 0; k < u.num_messages(); ++k) {
    for (int j = 0; j < u.num_messages(); ++j) {
      const Message& a = u.message(k);
      const Message& b = u.message(j);
      if (j != k && a.sender == b.sender && a.atom == b.atom &&
          a.arc.IsSubsetOf(b.arc) && a.arc != b.arc) {
        covered_by[k] |= std::uint64_t{1} << j;
      }
    }
  }
  auto compare = [&](std::size_t s, const EpistemicState& next) {
    const auto found = u.Find(next);
    if (!found) return;
    for (std::size_t f = 0; f < fs.size(); ++f) {
      t.Check(!ext[f]->Test(s) || ext[f]->Test(*found), [&] {
        return oracle.arena().ToString(fs[f], sk) + " lost from state " +
               std::to_string(s) + " to " + std::to_string(*found) + " in " +
               u.hypergraph().ToString(sk);
      });
    }
  };
  for (std::size_t s = 0; s < u.size(); ++s) {
    const EpistemicState& st = u.state(s);
    for (int a = 0; a < u.atoms().size(); ++a) {
      const std::uint64_t bit = std::uint64_t{1} << a;
      if (!(st.valuation & bit)) compare(s, {st.valuation | bit, st.messages});
    }
    for (int k = 0; k < u.num_messages(); ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if (!(st.messages & bit)) {
        compare(s, {st.valuation, st.messages | bit});
      } else if (st.messages & covered_by[k]) {
        compare(s, {st.valuation, st.messages & ~bit});
      }
    }
  }
}

void CkDistributes(EpistemicOracle& oracle, const std::vector<FormulaId>& fs,
                   Tally& t) {
  const Skeleton& sk = oracle.universe().skeleton();
  FormulaArena& arena = oracle.arena();
  ModelChecker& mc = oracle.checker();
  // Pairs of neighbours and of far-apart formulas keep the count linear.
  for (PlayerSet group : Groups(sk.num_players())) {
    for (std::size_t a = 0; a < fs.size(); ++a) {
      for (std::size_t b :
           {(a + 1) % fs.size(), (a + fs.size() / 2) % fs.size()}) {
        StateSet either = mc.Extension(arena.Ck(group, fs[a]));
        either |= mc.Extension(arena.Ck(group, fs[b]));
        const StateSet& joint =
            mc.Extension(arena.Ck(group, arena.Or({fs[a], fs[b]})));
        t.Check(joint == either, [&] {
          return "C" + group.ToString(sk) + " over " +
                 arena.ToString(fs[a], sk) + " | " + arena.ToString(fs[b], sk);
        });
      }
    }
  }
}

// M|A entails p: a chain better = s0 > s1 > ... > sk = worse of messages
// in M about p's (player, context) sent to arcs containing A.
bool EntailedByMessages(const StateUniverse& u, std::uint64_t messages,
                        PlayerSet audience, const PreferenceAtom& p) {
  std::uint64_t reached = std::uint64_t{1} << p.better;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int k = 0; k < u.num_messages(); ++k) {
      if (!((messages >> k) & 1u)) continue;
      const Message& m = u.message(k);
      if (!audience.IsSubsetOf(m.arc) || m.atom.player != p.player ||
          m.atom.context != p.context) {
        continue;
      }
      if (((reached >> m.atom.better) & 1u) &&
          !((reached >> m.atom.worse) & 1u)) {
        reached |= std::uint64_t{1} << m.atom.worse;
        grew = true;
      }
    }
  }
  return (reached >> p.worse) & 1u;
}

void CkIsEntailment(EpistemicOracle& oracle, Tally& t) {
  const StateUniverse& u = oracle.universe();
  const Skeleton& sk = u.skeleton();
  for (PlayerSet group : Groups(sk.num_players())) {
    if (group.size() < 2) continue;
    for (int a = 0; a < u.atoms().size(); ++a) {
      const PreferenceAtom& p = u.atoms().atom(a);
      const StateSet& ck = oracle.checker().Extension(
          oracle.arena().Ck(group, oracle.arena().Atom(p)));
      for (std::size_t s = 0; s < u.size(); ++s) {
        t.Check(
            ck.Test(s) == EntailedByMessages(u, u.state(s).messages, group, p),
            [&] {
              return "C" + group.ToString(sk) + " " + sk.DescribeAtom(p) +
                     " at state " + std::to_string(s) + " of " +
                     u.hypergraph().ToString(sk);
            });
      }
    }
  }
}

void Permutations(EpistemicOracle& oracle, const std::vector<FormulaId>& fs,
                  Tally& t) {
  const Skeleton& sk = oracle.universe().skeleton();
  FormulaArena& arena = oracle.arena();
  ModelChecker& mc = oracle.checker();
  for (PlayerSet group : Groups(sk.num_players())) {
    if (group.size() > 3) continue;
    for (FormulaId f : fs) {
      std::vector<int> order = group.Members();
      StateSet any(oracle.universe().size(), false);
      do {
        FormulaId chain = f;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
          chain = arena.K(*it, chain);
        }
        any |= mc.Extension(chain);
      } while (std::next_permutation(order.begin(), order.end()));
      t.Check(mc.Extension(arena.Ck(group, f)) == any, [&] {
        return "C" + group.ToString(sk) + " " + arena.ToString(f, sk) + " in " +
               oracle.universe().hypergraph().ToString(sk);
      });
    }
  }
}

Verdict AppendixSuite() {
  Tally persistence, distribution, entailment, permutation;
  for (TinyCase& c : TinyCases()) {
    EpistemicOracle& oracle = *c.oracle;
    const std::vector<FormulaId> fs = FormulaFamily(oracle);
    Persistence(oracle, fs, persistence);
    CkDistributes(oracle, fs, distribution);
    CkIsEntailment(oracle, entailment);
    Permutations(oracle, fs, permutation);
  }
  Verdict v;
  for (const auto& [tally, what] :
       {std::pair<const Tally*, const char*>{&persistence, "persistence steps"},
        {&distribution, "CK-or pairs"},
        {&entailment, "CK/entailment checks"},
        {&permutation, "permutation checks"}}) {
    const Verdict part = tally->Finish(what);
    v.pass = v.pass && part.pass;
    v.detail += (v.detail.empty() ? "" : "; ") + part.detail;
  }
  if (TinyCases().empty()) v = {false, "no universes (criterion 8 failed)"};
  return v;
}

Verdict AlgorithmAgreement() {
  Tally t;
  GameCache games;
  for (TinyCase& c : TinyCases()) {
    EpistemicOracle& oracle = *c.oracle;
    const StateUniverse& u = oracle.universe();
    const Skeleton& sk = u.skeleton();
    const int cap = DomCap(sk);
    for (int i = 0; i < sk.num_players(); ++i) {
      const auto& classes = u.Components(PlayerSet::Single(i));
      std::vector<bool> seen(u.size(), false);
      for (std::size_t s = 0; s < u.size(); ++s) {
        if (seen[classes[s]]) continue;
        seen[classes[s]] = true;
        const EpistemicState& st = u.state(s);
        PlayerKnowledge knowledge(games.Get(u, st.valuation), c.tiny.hypergraph,
                                  i);
        for (const Message& m :
             u.MessageSetOf(st.messages & u.VisibleMask(i))) {
          knowledge.Observe(m);
        }
        for (int level = 1; level <= cap; ++level) {
          for (int k = 0; k < sk.num_players(); ++k) {
            for (int x = 0; x < sk.num_strategies(k); ++x) {
              const bool eval = knowledge.KnownDominated(level, k, x);
              const bool models = oracle.checker().Models(
                  s, oracle.arena().K(i, oracle.builder().Dom(level, k, x)));
              t.Check(eval == models, [&] {
                return "player " + sk.label(i) + " on dom^" +
                       std::to_string(level) + "(" + sk.strategy_name(k, x) +
                       ") at state " + std::to_string(s) + " of " +
                       c.tiny.hypergraph.ToString(sk) + ": eval " +
                       (eval ? "true" : "false");
              });
            }
          }
        }
      }
    }
  }
  if (TinyCases().empty()) return {false, "no universes (criterion 8 failed)"};
  return t.Finish("class queries");
}

// ---------------------------------------------------------------------
// Criteria 11-12: golden replay and determinism.

std::string DataPath(const std::string& relative) {
  return std::string(IESDS_TEST_DATA_DIR) + "/" + relative;
}

std::string ReadFile(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (f == nullptr) return "";
  std::string out;
  char buffer[4096];
  std::size_t n;
  while ((n = std::fread(buffer, 1, sizeof buffer, f)) > 0)
    out.append(buffer, n);
  std::fclose(f);
  return out;
}

std::vector<std::string> Texts(const std::vector<TraceEvent>& trace,
                               const Skeleton& sk, int round) {
  std::vector<std::string> out;
  for (const TraceEvent& e : trace) {
    if (e.round != round) continue;
    if (e.kind == TraceEvent::Kind::kConclude) out.push_back(e.text);
    if (e.kind == TraceEvent::Kind::kPicture) {
      out.push_back(sk.label(e.player) + " " + e.picture.ToString(sk));
    }
  }
  return out;
}

Verdict GoldenReplay() {
  const Game g = HInfluencesOutcomeGame();
  const Skeleton& sk = g.skeleton();
  const Hypergraph h = H(3, {{1, 2}, {2, 3}, {1, 3}});
  const std::vector<Message> script = MessageListFromJson(
      sk, ReadJsonFile(DataPath("h_influences_outcome/fig4.json")));
  const SimulationResult run = Simulate(g, h, Schedule::Scripted(script));
  Tally t;
  const std::string golden =
      ReadFile(DataPath("h_influences_outcome/fig4_trace_golden.jsonl"));
  t.Check(!golden.empty() && TraceToJsonl(sk, run.trace) == golden,
          [] { return std::string("trace differs from the golden file"); });
  t.Check(run.sent == script, [] { return std::string("send order"); });
  // Step 1, then steps 7-10 in the round of player 1's last message; the
  // run adds player 2's higher-order conclusion about L.
  const std::vector<std::string> step1 = {"1 concludes that U is dominated",
                                          "1 ({D},{L,R},{A,B})"};
  const std::vector<std::string> steps7to10 = {
      "1 concludes that 2 knows that 1 knows that U is dominated",
      "1 concludes that 2 knows that L is dominated",
      "1 ({D},{R},{A,B})",
      "2 concludes that 1 knows that U is dominated",
      "2 ({D},{L,R},{A,B})",
      "2 concludes that L is dominated",
      "2 concludes that 1 knows that 2 knows that L is dominated",
      "2 ({D},{R},{A,B})"};
  t.Check(Texts(run.trace, sk, 0) == step1,
          [] { return std::string("step 1"); });
  t.Check(Texts(run.trace, sk, 12) == steps7to10,
          [] { return std::string("steps 7-10"); });
  for (int round = 1; round <= 16; ++round) {
    if (round == 12) continue;
    t.Check(Texts(run.trace, sk, round).empty(), [&] {
      return "unexpected conclusions in round " + std::to_string(round);
    });
  }
  Schedule rest = Schedule::Scripted(script);
  rest.exhaustive = true;
  rest.seed = 1;
  const SimulationResult full = Simulate(g, h, rest);
  const Restriction expected = R(sk, "({D},{R},{A,B})");
  t.Check(full.messages_sent == AllMessages(h, g),
          [] { return std::string("continuation did not send everything"); });
  for (int i = 0; i < 3; ++i) {
    t.Check(full.final_pictures[i].mask(i) == expected.mask(i), [&] {
      return "player " + sk.label(i) + " ends with " +
             full.final_pictures[i].ToString(sk);
    });
  }
  t.Check(OutcomeComplete(g, h, OptimalityNotion::kGlobal) == expected,
          [] { return std::string("G(H) differs"); });
  return t.Finish("trace checks");
}

Verdict Determinism() {
  auto cli = [](std::vector<std::string> args) {
    args.insert(args.begin(), "iesds");
    std::ostringstream out, err;
    const int code = RunCli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  };
  auto bundle = [](const std::string& dir, const std::string& hypergraph) {
    return std::vector<std::string>{"--game", DataPath(dir + "/game.json"),
                                    "--hypergraph",
                                    DataPath(dir + "/" + hypergraph + ".json")};
  };
  auto concat = [](std::vector<std::string> a, std::vector<std::string> b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  const std::vector<std::vector<std::string>> commands = {
      concat({"simulate", "--seed", "1"},
             bundle("h_influences_outcome", "hypergraph_pairwise")),
      concat({"simulate", "--seed", "2"},
             bundle("combining_step", "hypergraph")),
      concat({"simulate", "--seed", "3"}, bundle("hbar_matters", "hypergraph")),
      concat({"simulate", "--seed", "4", "--exhaustive", "--script",
              DataPath("h_influences_outcome/fig4.json")},
             bundle("h_influences_outcome", "hypergraph_pairwise")),
      concat({"verify", "--seed", "5"}, bundle("tiny", "hypergraph")),
      concat({"verify", "--seed", "6"},
             bundle("intermediate_states", "hypergraph")),
      {"verify", "--fuzz", "40", "--seed", "7"},
  };
  Tally t;
  for (const auto& command : commands) {
    const std::string first = cli(command);
    const std::string second = cli(command);
    t.Check(first == second && first.rfind("0\n", 0) == 0, [&] {
      std::string joined;
      for (const auto& a : command) joined += a + " ";
      return joined + "-> " + first.substr(0, 200);
    });
  }
  return t.Finish("commands run twice");
}

// ---------------------------------------------------------------------

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 means no bound
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace iesds

int main() {
  using iesds::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "combining-step example", 1, iesds::CombiningStep},
      {2, "interaction structure changes the outcome", 1,
       iesds::HInfluencesOutcome},
      {3, "intermediate-states example", 1, iesds::IntermediateStates},
      {4, "closure-under-intersection example", 1, iesds::HbarMatters},
      {5, "customary outcome inside G(H) on random games", 60,
       iesds::GrandCoalitionInside},
      {6, "G(H,M) independent of the notion on random games", 60,
       iesds::NotionInvariance},
      {7, "local and global kept-sets coincide per round", 0,
       iesds::LocalGlobalAlongSequences},
      {8, "epistemic outcome equals operator outcome on tiny universes", 600,
       iesds::OracleEquality},
      {9, "common-knowledge properties on tiny universes", 600,
       iesds::AppendixSuite},
      {10, "per-player evaluation agrees with the model checker", 0,
       iesds::AlgorithmAgreement},
      {11, "protocol run replay against the golden trace", 1,
       iesds::GoldenReplay},
      {12, "seeded commands are byte-identical across runs", 0,
       iesds::Determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    iesds::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      v.pass = false;
      v.detail += "; over the time limit";
    }
    if (!v.pass) ++failures;
    std::printf("criterion %2d: %s  %s (%.2f s) %s\n", c.id,
                v.pass ? "PASS" : "FAIL", c.title, seconds, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

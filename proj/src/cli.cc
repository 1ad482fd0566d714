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

#include "iesds/cli.h"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "iesds/elimination.h"
#include "iesds/epistemic.h"
#include "iesds/errors.h"
#include "iesds/json_io.h"
#include "iesds/knowledge.h"
#include "iesds/random.h"
#include "iesds/simulator.h"
#include "iesds/verify.h"

namespace iesds {
namespace {

struct CommandConfig {
  std::string game_path;
  std::string hypergraph_path;
  std::string messages_path;
  std::string script_path;
  std::string formula_path;
  std::string notion = "global";
  std::optional<std::uint64_t> seed;
  int caps_atoms = UniverseCaps{}.max_atoms;
  std::uint64_t caps_states = UniverseCaps{}.max_states;
  bool algorithmic = false;
  std::string player;
  std::string out_path;
  bool exhaustive = false;
  int fuzz = 0;
};

struct Inputs {
  Game game;
  Hypergraph hypergraph;
  MessageSet messages;
};

std::uint64_t ResolveSeed(const CommandConfig& config) {
  if (config.seed) return *config.seed;
  if (const char* env = std::getenv("IESDS_NET_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t seed = std::stoull(env, &used, 0);
      if (used == std::string(env).size()) return seed;
    } catch (const std::exception&) {
    }
    throw InputError("IESDS_NET_SEED is not an unsigned integer");
  }
  return 0;
}

UniverseCaps Caps(const CommandConfig& config) {
  if (config.caps_atoms <= 0 || config.caps_states == 0) {
    throw InputError("caps must be positive");
  }
  return UniverseCaps{config.caps_atoms, config.caps_states};
}

OptimalityNotion Notion(const CommandConfig& config) {
  return config.notion == "local" ? OptimalityNotion::kLocal
                                  : OptimalityNotion::kGlobal;
}

Inputs LoadInputs(const CommandConfig& config) {
  Inputs in;
  in.game = GameFromJson(ReadJsonFile(config.game_path));
  const Skeleton& sk = in.game.skeleton();
  in.hypergraph = HypergraphFromJson(sk, ReadJsonFile(config.hypergraph_path));
  if (!config.messages_path.empty()) {
    in.messages =
        MessageSet(MessageListFromJson(sk, ReadJsonFile(config.messages_path)));
    ValidateMessages(in.game, in.hypergraph, in.messages);
  }
  return in;
}

void Emit(const CommandConfig& config, const std::string& text,
          std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
  } else {
    WriteTextFile(config.out_path, text);
  }
}

int CmdSolve(const CommandConfig& config, std::ostream& out) {
  const Inputs in = LoadInputs(config);
  const Restriction outcome =
      config.messages_path.empty()
          ? OutcomeComplete(in.game, in.hypergraph, Notion(config))
          : OutcomeIntermediate(in.game, in.hypergraph, in.messages,
                                Notion(config));
  Emit(config, OutcomeToJson(in.game.skeleton(), outcome).dump() + "\n", out);
  return kExitOk;
}

int CmdCheck(const CommandConfig& config, std::ostream& out) {
  const Inputs in = LoadInputs(config);
  const Skeleton& sk = in.game.skeleton();
  const Json formula_json = ReadJsonFile(config.formula_path);
  Json result = Json::object();
  if (config.algorithmic) {
    if (config.player.empty()) {
      throw InputError("--algorithmic needs --player");
    }
    const int player = sk.FindPlayer(config.player);
    FormulaArena arena;
    DomFormulaBuilder builder(arena, sk);
    const FormulaId f = FormulaFromJson(sk, formula_json, builder);
    PlayerKnowledge knowledge(in.game, in.hypergraph, player);
    for (const Message& m : in.messages) {
      if (m.arc.Contains(player)) knowledge.Observe(m);
    }
    result["mode"] = "algorithmic";
    result["player"] = sk.label(player);
    result["query"] = formula_json;
    result["holds"] = knowledge.Knows(arena, f);
    result["observed"] = knowledge.observed().size();
  } else {
    EpistemicOracle oracle(sk, in.hypergraph, Caps(config));
    FormulaArena& arena = oracle.arena();
    FormulaId f = FormulaFromJson(sk, formula_json, oracle.builder());
    if (!config.player.empty()) f = arena.K(sk.FindPlayer(config.player), f);
    const StateUniverse& universe = oracle.universe();
    const std::size_t state = universe.IndexOf(in.game, in.messages);
    const bool holds = oracle.checker().Models(state, f);
    result["mode"] = "oracle";
    if (!config.player.empty()) result["player"] = config.player;
    result["query"] = formula_json;
    result["holds"] = holds;
    result["universe_size"] = universe.size();
    const FormulaNode& node = arena.node(f);
    if (!holds && node.kind == FormulaKind::kCk) {
      // A state the group cannot tell apart where the body fails.
      const auto& components = universe.Components(node.group);
      const StateSet& body = oracle.checker().Extension(node.children[0]);
      for (std::size_t t = 0; t < universe.size(); ++t) {
        if (components[t] != components[state] || body.Test(t)) continue;
        Json atoms = Json::array();
        for (const auto& a : universe.AtomsOf(universe.state(t).valuation)) {
          atoms.push_back(AtomToJson(sk, a));
        }
        const MessageSet m = universe.MessageSetOf(universe.state(t).messages);
        result["witness"] = {
            {"valuation", std::move(atoms)},
            {"messages", MessageListToJson(sk, m.messages())["messages"]}};
        break;
      }
    }
  }
  Emit(config, result.dump() + "\n", out);
  return kExitOk;
}

int CmdSimulate(const CommandConfig& config, std::ostream& out) {
  const Inputs in = LoadInputs(config);
  const Skeleton& sk = in.game.skeleton();
  Schedule schedule;
  if (!config.script_path.empty()) {
    schedule = ScriptFromJson(sk, ReadJsonFile(config.script_path));
    schedule.exhaustive = config.exhaustive;
    schedule.seed = ResolveSeed(config);
  } else {
    schedule = Schedule::Seeded(ResolveSeed(config));
  }
  const SimulationResult result = Simulate(in.game, in.hypergraph, schedule);
  Emit(config, TraceToJsonl(sk, result.trace), out);
  return kExitOk;
}

std::string FuzzReport(const CommandConfig& config, bool& ok) {
  Rng rng(ResolveSeed(config));
  const Skeleton sk({"1", "2", "3"}, {{"a", "b"}, {"c", "d"}, {"e"}});
  std::ostringstream text;
  ok = true;
  for (int trial = 0; trial < config.fuzz; ++trial) {
    const Game game =
        trial % 2 == 0 ? RandomPayoffGame(rng, sk) : RandomOrderGame(rng, sk);
    Hypergraph hypergraph;
    do {
      hypergraph = RandomHypergraph(rng, sk.num_players());
    } while (hypergraph.arcs().empty());
    const MessageSet messages = RandomMessages(rng, game, hypergraph, 0.5);
    const VerificationReport report =
        VerifyInstance(game, hypergraph, messages, {Caps(config), rng.Next()});
    if (!report.ok()) {
      ok = false;
      text << "instance " << trial << " fails\n"
           << "game: " << GameToJson(game).dump() << "\n"
           << "hypergraph: " << HypergraphToJson(sk, hypergraph).dump() << "\n"
           << "messages: " << MessageListToJson(sk, messages.messages()).dump()
           << "\n"
           << report.ToString();
      break;
    }
  }
  if (ok) text << "PASS " << config.fuzz << " random instances\n";
  return text.str();
}

int CmdVerify(const CommandConfig& config, std::ostream& out) {
  bool ok = true;
  std::string text;
  if (config.fuzz > 0) {
    text = FuzzReport(config, ok);
  } else {
    const Inputs in = LoadInputs(config);
    const VerificationReport report =
        VerifyInstance(in.game, in.hypergraph, in.messages,
                       {Caps(config), ResolveSeed(config)});
    ok = report.ok();
    text = report.ToString();
  }
  Emit(config, text, out);
  return ok ? kExitOk : kExitVerificationFailed;
}

void AddCommon(CLI::App& cmd, CommandConfig& config, bool inputs_required) {
  auto* game = cmd.add_option("--game", config.game_path, "Game JSON file")
                   ->check(CLI::ExistingFile);
  auto* hypergraph = cmd.add_option("--hypergraph", config.hypergraph_path,
                                    "Hypergraph JSON file")
                         ->check(CLI::ExistingFile);
  if (inputs_required) {
    game->required();
    hypergraph->required();
  }
  cmd.add_option("--messages", config.messages_path, "Messages JSON file")
      ->check(CLI::ExistingFile);
  cmd.add_option("--notion", config.notion, "Optimality notion")
      ->check(CLI::IsMember({"local", "global"}));
  cmd.add_option("--caps-atoms", config.caps_atoms,
                 "Largest atom alphabet the oracle enumerates");
  cmd.add_option("--caps-states", config.caps_states,
                 "Largest state universe the oracle enumerates");
  cmd.add_option("--seed", config.seed,
                 "Seed for random choices; falls back to IESDS_NET_SEED");
  cmd.add_option("--out", config.out_path, "Write the result to this file");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app(
      "Iterated elimination of strictly dominated strategies over "
      "interaction structures",
      args.empty() ? "iesds" : args[0]);
  app.require_subcommand(1);
  CommandConfig config;

  CLI::App* solve = app.add_subcommand(
      "solve", "Print G(H), or G(H,M) when --messages is given");
  AddCommon(*solve, config, true);

  CLI::App* check =
      app.add_subcommand("check", "Evaluate a formula at the game's state");
  AddCommon(*check, config, true);
  check->add_option("--formula", config.formula_path, "Formula JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_flag("--algorithmic", config.algorithmic,
                  "Use the player's local decision procedure");
  check->add_option("--player", config.player, "Player id of the knower");

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run the message protocol; JSONL trace");
  AddCommon(*simulate, config, true);
  simulate->add_option("--script", config.script_path, "Script JSON file")
      ->check(CLI::ExistingFile);
  simulate->add_flag("--exhaustive", config.exhaustive,
                     "Continue a script with seeded draws until every "
                     "message is sent");

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check operators, oracle and simulation");
  AddCommon(*verify, config, false);
  verify
      ->add_option("--fuzz", config.fuzz,
                   "Verify this many random 2x2x1 instances instead")
      ->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("iesds");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e_stream;
    const int code = app.exit(e, o, e_stream);
    out << o.str();
    err << e_stream.str();
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (verify->parsed() && config.fuzz == 0 &&
        (config.game_path.empty() || config.hypergraph_path.empty())) {
      throw InputError("verify needs --game and --hypergraph, or --fuzz");
    }
    if (solve->parsed()) return CmdSolve(config, out);
    if (check->parsed()) return CmdCheck(config, out);
    if (simulate->parsed()) return CmdSimulate(config, out);
    return CmdVerify(config, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& d : e.details()) err << "  " << d << "\n";
    return kExitInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return kExitCapExceeded;
  }
}

}  // namespace iesds

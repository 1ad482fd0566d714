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

#include "iesds/json_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "iesds/errors.h"

namespace iesds {
namespace {

const Json& Field(const Json& object, const char* key) {
  if (!object.is_object()) {
    throw InputError(std::string("expected an object with field '") + key +
                     "'");
  }
  auto it = object.find(key);
  if (it == object.end()) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return *it;
}

const Json& ArrayField(const Json& object, const char* key) {
  const Json& value = Field(object, key);
  if (!value.is_array()) {
    throw InputError(std::string("field '") + key + "' must be an array");
  }
  return value;
}

std::string Text(const Json& value, const char* what) {
  if (!value.is_string()) {
    throw InputError(std::string(what) + " must be a string");
  }
  return value.get<std::string>();
}

int Player(const Skeleton& sk, const Json& value) {
  return sk.FindPlayer(Text(value, "player id"));
}

int Strategy(const Skeleton& sk, int player, const Json& value) {
  return sk.FindStrategy(player, Text(value, "strategy name"));
}

std::int64_t Integer(const Json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw InputError(std::string(what) + " must be an integer");
  }
  return value.get<std::int64_t>();
}

Skeleton SkeletonFromJson(const Json& json) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> strategies;
  for (const Json& player : ArrayField(json, "players")) {
    labels.push_back(Text(Field(player, "id"), "player id"));
    std::vector<std::string> names;
    for (const Json& s : ArrayField(player, "strategies")) {
      names.push_back(Text(s, "strategy name"));
    }
    strategies.push_back(std::move(names));
  }
  return Skeleton(std::move(labels), std::move(strategies));
}

Json SkeletonToJson(const Skeleton& sk) {
  Json players = Json::array();
  for (int i = 0; i < sk.num_players(); ++i) {
    players.push_back({{"id", sk.label(i)}, {"strategies", sk.strategies(i)}});
  }
  return players;
}

std::vector<std::string> SplitComma(const std::string& key) {
  std::vector<std::string> parts;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) parts.push_back(part);
  if (!key.empty() && key.back() == ',') parts.emplace_back();
  return parts;
}

const char* KindName(TraceEvent::Kind kind) {
  switch (kind) {
    case TraceEvent::Kind::kSend:
      return "send";
    case TraceEvent::Kind::kConclude:
      return "conclude";
    case TraceEvent::Kind::kPicture:
      return "picture";
    case TraceEvent::Kind::kTerminate:
      return "terminate";
  }
  return "";
}

}  // namespace

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void WriteTextFile(const std::filesystem::path& path,
                   const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << contents;
  if (!out) throw InputError("failed writing " + path.string());
}

Game GameFromJson(const Json& json) {
  const Skeleton sk = SkeletonFromJson(json);
  const bool has_payoffs = json.contains("payoffs");
  const bool has_atoms = json.contains("atoms");
  if (has_payoffs == has_atoms) {
    throw InputError("a game needs exactly one of 'payoffs' and 'atoms'");
  }
  Game game;
  if (has_payoffs) {
    const Json& table = json["payoffs"];
    if (!table.is_object()) throw InputError("'payoffs' must be an object");
    PayoffTable payoffs;
    for (const auto& [key, values] : table.items()) {
      const auto names = SplitComma(key);
      if (static_cast<int>(names.size()) != sk.num_players()) {
        throw InputError("payoff key '" + key + "' does not name one " +
                         "strategy per player");
      }
      std::vector<int> profile;
      for (int j = 0; j < sk.num_players(); ++j) {
        profile.push_back(sk.FindStrategy(j, names[j]));
      }
      if (!values.is_array()) {
        throw InputError("payoffs for '" + key + "' must be an array");
      }
      std::vector<double> utilities;
      for (const Json& v : values) {
        if (!v.is_number()) {
          throw InputError("payoffs for '" + key + "' must be numbers");
        }
        utilities.push_back(v.get<double>());
      }
      if (!payoffs.emplace(std::move(profile), std::move(utilities)).second) {
        throw InputError("duplicate payoff key '" + key + "'");
      }
    }
    game = GameFromPayoffs(sk, payoffs);
  } else {
    std::vector<PreferenceAtom> atoms;
    for (const Json& a : ArrayField(json, "atoms")) {
      atoms.push_back(AtomFromJson(sk, a));
    }
    game = Game(sk, std::move(atoms));
  }
  const auto violations = ValidateGame(game);
  if (!violations.empty()) {
    std::vector<std::string> details;
    for (const auto& v : violations) details.push_back(v.Describe(sk));
    throw ValidationError("preferences are not strict partial orders",
                          std::move(details));
  }
  return game;
}

Json GameToJson(const Game& game) {
  const Skeleton& sk = game.skeleton();
  Json atoms = Json::array();
  for (const auto& atom : game.atoms()) atoms.push_back(AtomToJson(sk, atom));
  return {{"players", SkeletonToJson(sk)}, {"atoms", std::move(atoms)}};
}

Json PayoffGameToJson(const Skeleton& sk, const PayoffTable& payoffs) {
  Json table = Json::object();
  for (const auto& [profile, values] : payoffs) {
    std::string key;
    for (int j = 0; j < sk.num_players(); ++j) {
      if (j > 0) key += ",";
      key += sk.strategy_name(j, profile.at(j));
    }
    table[key] = values;
  }
  return {{"players", SkeletonToJson(sk)}, {"payoffs", std::move(table)}};
}

Json AtomToJson(const Skeleton& sk, const PreferenceAtom& atom) {
  sk.CheckAtom(atom);
  const auto profile = sk.ContextProfile(atom.player, atom.context);
  Json context = Json::object();
  for (int j = 0; j < sk.num_players(); ++j) {
    if (j != atom.player)
      context[sk.label(j)] = sk.strategy_name(j, profile[j]);
  }
  return {{"player", sk.label(atom.player)},
          {"context", std::move(context)},
          {"better", sk.strategy_name(atom.player, atom.better)},
          {"worse", sk.strategy_name(atom.player, atom.worse)}};
}

PreferenceAtom AtomFromJson(const Skeleton& sk, const Json& json) {
  PreferenceAtom atom;
  atom.player = Player(sk, Field(json, "player"));
  const Json& context = Field(json, "context");
  if (!context.is_object()) throw InputError("'context' must be an object");
  std::vector<int> profile(sk.num_players(), 0);
  std::vector<bool> seen(sk.num_players(), false);
  for (const auto& [label, strategy] : context.items()) {
    const int j = sk.FindPlayer(label);
    if (j == atom.player) {
      throw InputError("context of player '" + label + "' names itself");
    }
    if (seen[j]) throw InputError("context names '" + label + "' twice");
    seen[j] = true;
    profile[j] = Strategy(sk, j, strategy);
  }
  for (int j = 0; j < sk.num_players(); ++j) {
    if (j != atom.player && !seen[j]) {
      throw InputError("context omits player '" + sk.label(j) + "'");
    }
  }
  atom.context = sk.ContextIndex(atom.player, profile);
  atom.better = Strategy(sk, atom.player, Field(json, "better"));
  atom.worse = Strategy(sk, atom.player, Field(json, "worse"));
  return atom;
}

Json PlayerSetToJson(const Skeleton& sk, PlayerSet set) {
  Json out = Json::array();
  for (int p : set.Members()) out.push_back(sk.label(p));
  return out;
}

PlayerSet PlayerSetFromJson(const Skeleton& sk, const Json& json) {
  if (!json.is_array()) throw InputError("a player set must be an array");
  PlayerSet set;
  for (const Json& id : json) {
    const int p = Player(sk, id);
    if (set.Contains(p)) {
      throw InputError("player '" + sk.label(p) + "' listed twice");
    }
    set.Insert(p);
  }
  return set;
}

Hypergraph HypergraphFromJson(const Skeleton& sk, const Json& json) {
  std::vector<PlayerSet> arcs;
  for (const Json& arc : ArrayField(json, "arcs")) {
    arcs.push_back(PlayerSetFromJson(sk, arc));
  }
  return Hypergraph(sk.num_players(), std::move(arcs));
}

Json HypergraphToJson(const Skeleton& sk, const Hypergraph& hypergraph) {
  Json arcs = Json::array();
  for (PlayerSet arc : hypergraph.arcs()) {
    arcs.push_back(PlayerSetToJson(sk, arc));
  }
  return {{"arcs", std::move(arcs)}};
}

Json MessageToJson(const Skeleton& sk, const Message& message) {
  return {{"sender", sk.label(message.sender)},
          {"arc", PlayerSetToJson(sk, message.arc)},
          {"atom", AtomToJson(sk, message.atom)}};
}

Message MessageFromJson(const Skeleton& sk, const Json& json) {
  Message m;
  m.sender = Player(sk, Field(json, "sender"));
  m.arc = PlayerSetFromJson(sk, Field(json, "arc"));
  m.atom = AtomFromJson(sk, Field(json, "atom"));
  return m;
}

std::vector<Message> MessageListFromJson(const Skeleton& sk, const Json& json) {
  std::vector<Message> out;
  for (const Json& m : ArrayField(json, "messages")) {
    out.push_back(MessageFromJson(sk, m));
  }
  return out;
}

Json MessageListToJson(const Skeleton& sk,
                       const std::vector<Message>& messages) {
  Json list = Json::array();
  for (const auto& m : messages) list.push_back(MessageToJson(sk, m));
  return {{"messages", std::move(list)}};
}

Schedule ScriptFromJson(const Skeleton& sk, const Json& json) {
  Schedule schedule = Schedule::Scripted(MessageListFromJson(sk, json));
  if (json.contains("evaluation_order")) {
    for (const Json& id : ArrayField(json, "evaluation_order")) {
      schedule.evaluation_order.push_back(Player(sk, id));
    }
  }
  return schedule;
}

Json RestrictionToJson(const Skeleton& sk, const Restriction& restriction) {
  Json out = Json::object();
  for (int i = 0; i < sk.num_players(); ++i) {
    Json names = Json::array();
    for (int s : restriction.Members(i)) {
      names.push_back(sk.strategy_name(i, s));
    }
    out[sk.label(i)] = std::move(names);
  }
  return out;
}

Restriction RestrictionFromJson(const Skeleton& sk, const Json& json) {
  if (!json.is_object()) throw InputError("a restriction must be an object");
  std::vector<std::uint64_t> masks(sk.num_players(), 0);
  std::vector<bool> seen(sk.num_players(), false);
  for (const auto& [label, names] : json.items()) {
    const int i = sk.FindPlayer(label);
    if (seen[i]) throw InputError("restriction names '" + label + "' twice");
    seen[i] = true;
    if (!names.is_array()) {
      throw InputError("strategies of '" + label + "' must be an array");
    }
    for (const Json& name : names) {
      masks[i] |= std::uint64_t{1} << Strategy(sk, i, name);
    }
  }
  for (int i = 0; i < sk.num_players(); ++i) {
    if (!seen[i]) {
      throw InputError("restriction omits player '" + sk.label(i) + "'");
    }
  }
  return Restriction(std::move(masks));
}

Json OutcomeToJson(const Skeleton& sk, const Restriction& restriction) {
  return {{"restriction", RestrictionToJson(sk, restriction)}};
}

Restriction OutcomeFromJson(const Skeleton& sk, const Json& json) {
  return RestrictionFromJson(sk, Field(json, "restriction"));
}

FormulaId FormulaFromJson(const Skeleton& sk, const Json& json,
                          DomFormulaBuilder& builder) {
  if (!json.is_object() || json.size() != 1) {
    throw InputError("a formula must be an object with exactly one key");
  }
  FormulaArena& arena = builder.arena();
  const auto& [key, body] = *json.items().begin();
  if (key == "true") return arena.True();
  if (key == "false") return arena.False();
  if (key == "atom") return arena.Atom(AtomFromJson(sk, body));
  if (key == "and" || key == "or") {
    if (!body.is_array()) throw InputError("'" + key + "' takes an array");
    std::vector<FormulaId> children;
    for (const Json& child : body) {
      children.push_back(FormulaFromJson(sk, child, builder));
    }
    return key == "and" ? arena.And(std::move(children))
                        : arena.Or(std::move(children));
  }
  if (key == "ck") {
    const PlayerSet group = PlayerSetFromJson(sk, Field(body, "group"));
    if (group.empty()) throw InputError("'ck' needs a non-empty group");
    return arena.Ck(group, FormulaFromJson(sk, Field(body, "of"), builder));
  }
  if (key == "k") {
    const int player = Player(sk, Field(body, "player"));
    return arena.K(player, FormulaFromJson(sk, Field(body, "of"), builder));
  }
  if (key == "dom" || key == "domin") {
    const int player = Player(sk, Field(body, "player"));
    const int strategy = Strategy(sk, player, Field(body, "strategy"));
    const Json& level_json = Field(body, "level");
    std::int64_t level = 0;
    if (level_json.is_string()) {
      if (level_json.get<std::string>() != "inf") {
        throw InputError("'level' must be a positive integer or \"inf\"");
      }
      level = DomCap(sk);
    } else {
      level = Integer(level_json, "'level'");
    }
    if (level < 1 || level > DomCap(sk)) {
      throw InputError("'level' must lie between 1 and " +
                       std::to_string(DomCap(sk)));
    }
    const int l = static_cast<int>(level);
    return key == "dom" ? builder.Dom(l, player, strategy)
                        : builder.Domin(l, player, strategy);
  }
  throw InputError("unknown formula constructor '" + key + "'");
}

Json FormulaToJson(const Skeleton& sk, const FormulaArena& arena,
                   FormulaId formula) {
  const FormulaNode& node = arena.node(formula);
  switch (node.kind) {
    case FormulaKind::kTrue:
      return {{"true", Json::object()}};
    case FormulaKind::kFalse:
      return {{"false", Json::object()}};
    case FormulaKind::kAtom:
      return {{"atom", AtomToJson(sk, node.atom)}};
    case FormulaKind::kAnd:
    case FormulaKind::kOr: {
      Json children = Json::array();
      for (FormulaId c : node.children) {
        children.push_back(FormulaToJson(sk, arena, c));
      }
      return {
          {node.kind == FormulaKind::kAnd ? "and" : "or", std::move(children)}};
    }
    case FormulaKind::kCk:
      return {{"ck",
               {{"group", PlayerSetToJson(sk, node.group)},
                {"of", FormulaToJson(sk, arena, node.children.at(0))}}}};
  }
  return nullptr;
}

Json TraceEventToJson(const Skeleton& sk, const TraceEvent& event) {
  Json out = {{"v", kTraceSchemaVersion},
              {"round", event.round},
              {"kind", KindName(event.kind)}};
  switch (event.kind) {
    case TraceEvent::Kind::kSend:
      out["sender"] = sk.label(event.message.sender);
      out["arc"] = PlayerSetToJson(sk, event.message.arc);
      out["atom"] = AtomToJson(sk, event.message.atom);
      break;
    case TraceEvent::Kind::kConclude:
      out["player"] = sk.label(event.player);
      out["query"] = event.query == TraceEvent::Query::kDominated ? "dominated"
                                                                  : "knows_own";
      out["level"] = event.level;
      out["target"] = sk.label(event.target);
      out["strategy"] =
          sk.strategy_name(event.strategy_owner(), event.strategy);
      out["formula"] = event.formula;
      out["verdict"] = event.verdict;
      out["text"] = event.text;
      break;
    case TraceEvent::Kind::kPicture:
      out["player"] = sk.label(event.player);
      out["restriction"] = RestrictionToJson(sk, event.picture);
      break;
    case TraceEvent::Kind::kTerminate:
      out["player"] = sk.label(event.player);
      break;
  }
  return out;
}

TraceEvent TraceEventFromJson(const Skeleton& sk, const Json& json) {
  if (Integer(Field(json, "v"), "'v'") != kTraceSchemaVersion) {
    throw InputError("unsupported trace schema version");
  }
  TraceEvent event;
  event.round = static_cast<int>(Integer(Field(json, "round"), "'round'"));
  const std::string kind = Text(Field(json, "kind"), "'kind'");
  if (kind == "send") {
    event.kind = TraceEvent::Kind::kSend;
    event.message.sender = Player(sk, Field(json, "sender"));
    event.message.arc = PlayerSetFromJson(sk, Field(json, "arc"));
    event.message.atom = AtomFromJson(sk, Field(json, "atom"));
  } else if (kind == "conclude") {
    event.kind = TraceEvent::Kind::kConclude;
    event.player = Player(sk, Field(json, "player"));
    const std::string query = Text(Field(json, "query"), "'query'");
    if (query == "dominated") {
      event.query = TraceEvent::Query::kDominated;
    } else if (query == "knows_own") {
      event.query = TraceEvent::Query::kKnowsOwn;
    } else {
      throw InputError("unknown query '" + query + "'");
    }
    event.level = static_cast<int>(Integer(Field(json, "level"), "'level'"));
    event.target = Player(sk, Field(json, "target"));
    event.strategy =
        Strategy(sk, event.strategy_owner(), Field(json, "strategy"));
    event.formula = Text(Field(json, "formula"), "'formula'");
    const Json& verdict = Field(json, "verdict");
    if (!verdict.is_boolean()) throw InputError("'verdict' must be boolean");
    event.verdict = verdict.get<bool>();
    event.text = Text(Field(json, "text"), "'text'");
  } else if (kind == "picture") {
    event.kind = TraceEvent::Kind::kPicture;
    event.player = Player(sk, Field(json, "player"));
    event.picture = RestrictionFromJson(sk, Field(json, "restriction"));
  } else if (kind == "terminate") {
    event.kind = TraceEvent::Kind::kTerminate;
    event.player = Player(sk, Field(json, "player"));
  } else {
    throw InputError("unknown trace event kind '" + kind + "'");
  }
  return event;
}

std::string TraceToJsonl(const Skeleton& sk,
                         const std::vector<TraceEvent>& trace) {
  std::string out;
  for (const auto& event : trace) {
    out += TraceEventToJson(sk, event).dump();
    out += '\n';
  }
  return out;
}

std::vector<TraceEvent> TraceFromJsonl(const Skeleton& sk,
                                       const std::string& jsonl) {
  std::vector<TraceEvent> out;
  std::stringstream in(jsonl);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      out.push_back(TraceEventFromJson(sk, Json::parse(line)));
    } catch (const Json::exception& e) {
      throw InputError("trace line " + std::to_string(line_number) + ": " +
                       e.what());
    }
  }
  return out;
}

}  // namespace iesds

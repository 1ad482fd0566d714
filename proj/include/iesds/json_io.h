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

#ifndef IESDS_JSON_IO_H_
#define IESDS_JSON_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "iesds/formula.h"
#include "iesds/game.h"
#include "iesds/hypergraph.h"
#include "iesds/messages.h"
#include "iesds/simulator.h"
#include "json.hpp"

// JSON encodings of the library's values. Players and strategies are
// referred to by their labels; file order fixes the indices. Every parser
// throws InputError on malformed documents and ValidationError when a
// well-formed document describes an invalid game or message.
namespace iesds {

using Json = nlohmann::ordered_json;

inline constexpr int kTraceSchemaVersion = 1;

Json ReadJsonFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path,
                   const std::string& contents);

// {"players":[{"id":..,"strategies":[..]}], "payoffs":{..}} or the same
// with "atoms":[..] instead of "payoffs".
Game GameFromJson(const Json& json);
Json GameToJson(const Game& game);
Json PayoffGameToJson(const Skeleton& skeleton, const PayoffTable& payoffs);

Json AtomToJson(const Skeleton& skeleton, const PreferenceAtom& atom);
PreferenceAtom AtomFromJson(const Skeleton& skeleton, const Json& json);

Json PlayerSetToJson(const Skeleton& skeleton, PlayerSet set);
PlayerSet PlayerSetFromJson(const Skeleton& skeleton, const Json& json);

Hypergraph HypergraphFromJson(const Skeleton& skeleton, const Json& json);
Json HypergraphToJson(const Skeleton& skeleton, const Hypergraph& hypergraph);

Json MessageToJson(const Skeleton& skeleton, const Message& message);
Message MessageFromJson(const Skeleton& skeleton, const Json& json);

// Keeps file order, which is the delivery order for scripts.
std::vector<Message> MessageListFromJson(const Skeleton& skeleton,
                                         const Json& json);
Json MessageListToJson(const Skeleton& skeleton,
                       const std::vector<Message>& messages);

// A messages document, plus an optional "evaluation_order" list of player
// ids that reorders Conclude and Picture events within a round.
Schedule ScriptFromJson(const Skeleton& skeleton, const Json& json);

// The bare {"<player>":[..]} map.
Json RestrictionToJson(const Skeleton& skeleton,
                       const Restriction& restriction);
Restriction RestrictionFromJson(const Skeleton& skeleton, const Json& json);

// {"restriction":{..}}
Json OutcomeToJson(const Skeleton& skeleton, const Restriction& restriction);
Restriction OutcomeFromJson(const Skeleton& skeleton, const Json& json);

// Accepts {"true":{}}, {"false":{}}, {"atom":..}, {"and":[..]}, {"or":[..]},
// {"ck":{"group":[..],"of":..}}, {"k":{"player":..,"of":..}} and the
// shorthands {"dom":{..}} and {"domin":{..}} with "level" an integer >= 1
// or "inf".
FormulaId FormulaFromJson(const Skeleton& skeleton, const Json& json,
                          DomFormulaBuilder& builder);
Json FormulaToJson(const Skeleton& skeleton, const FormulaArena& arena,
                   FormulaId formula);

Json TraceEventToJson(const Skeleton& skeleton, const TraceEvent& event);
TraceEvent TraceEventFromJson(const Skeleton& skeleton, const Json& json);

// One compact JSON object per line, each terminated by '\n'.
std::string TraceToJsonl(const Skeleton& skeleton,
                         const std::vector<TraceEvent>& trace);
std::vector<TraceEvent> TraceFromJsonl(const Skeleton& skeleton,
                                       const std::string& jsonl);

}  // namespace iesds

#endif  // IESDS_JSON_IO_H_

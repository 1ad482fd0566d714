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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "iesds/json_io.h"

namespace iesds {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "iesds");
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& relative) {
  return std::string(IESDS_TEST_DATA_DIR) + "/" + relative;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class ScratchDir {
 public:
  ScratchDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = std::filesystem::temp_directory_path() /
            (std::string("iesds_cli_test_") + info->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() { std::filesystem::remove_all(path_); }

  std::string Write(const std::string& name, const std::string& contents) {
    const auto file = path_ / name;
    std::ofstream(file) << contents;
    return file.string();
  }
  std::string Path(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

std::vector<std::string> Bundle(const std::string& dir,
                                const std::string& hypergraph = "hypergraph") {
  return {"--game", Data(dir + "/game.json"), "--hypergraph",
          Data(dir + "/" + hypergraph + ".json")};
}

std::vector<std::string> Concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TEST(SolveTest, CombiningStepOutcome) {
  const CliResult r = Cli(Concat({"solve"}, Bundle("combining_step")));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, R"({"restriction":{"1":["U"],"2":["L"],"3":["l"]}})"
                   "\n");
}

TEST(SolveTest, IntermediateStatesWithoutMessages) {
  const CliResult r = Cli(Concat(
      {"solve", "--messages", Data("intermediate_states/messages_empty.json")},
      Bundle("intermediate_states")));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, R"({"restriction":{"1":["U","D"],"2":["L"],"3":["l"]}})"
                   "\n");
  const CliResult full =
      Cli(Concat({"solve", "--messages",
                  Data("intermediate_states/messages_m_double_prime.json")},
                 Bundle("intermediate_states")));
  EXPECT_EQ(Json::parse(full.out),
            ReadJsonFile(Data(
                "intermediate_states/expected_outcome_m_double_prime.json")));
}

TEST(SolveTest, NotionsGiveIdenticalOutput) {
  const std::vector<std::vector<std::string>> inputs = {
      Bundle("combining_step"),
      Bundle("h_influences_outcome", "hypergraph_pairwise"),
      Bundle("h_influences_outcome", "hypergraph_grand"),
      Concat(Bundle("hbar_matters"),
             {"--messages", Data("hbar_matters/messages_m_prime.json")}),
      Concat(Bundle("intermediate_states"),
             {"--messages", Data("intermediate_states/messages_m_prime.json")}),
  };
  for (const auto& input : inputs) {
    const CliResult local = Cli(Concat({"solve", "--notion", "local"}, input));
    const CliResult global =
        Cli(Concat({"solve", "--notion", "global"}, input));
    EXPECT_EQ(local.code, kExitOk);
    EXPECT_EQ(local.out, global.out);
  }
}

TEST(SolveTest, WritesOutFile) {
  ScratchDir dir;
  const std::string out = dir.Path("outcome.json");
  const CliResult r =
      Cli(Concat({"solve", "--out", out}, Bundle("combining_step")));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(ReadJsonFile(out),
            ReadJsonFile(Data("combining_step/expected_outcome.json")));
}

TEST(SolveTest, InvalidInputsExitOne) {
  ScratchDir dir;
  const std::string lie = dir.Write("lie.json", R"({"messages":[
    {"sender":"2","arc":["1","2"],
     "atom":{"player":"2","context":{"1":"U","3":"l"},"better":"R","worse":"L"}}]})");
  CliResult r =
      Cli(Concat({"solve", "--messages", lie}, Bundle("combining_step")));
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("not truthful"), std::string::npos) << r.err;

  const std::string broken = dir.Write("broken.json", "{\"arcs\": [");
  r = Cli({"solve", "--game", Data("combining_step/game.json"), "--hypergraph",
           broken});
  EXPECT_EQ(r.code, kExitInvalidInput);

  r = Cli({"solve", "--game", Data("combining_step/game.json")});
  EXPECT_EQ(r.code, kExitInvalidInput);
  r = Cli(Concat({"solve", "--notion", "sideways"}, Bundle("combining_step")));
  EXPECT_EQ(r.code, kExitInvalidInput);
  r = Cli({"frobnicate"});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(CheckTest, AlgorithmicDominanceAfterFullIntermediateMessages) {
  ScratchDir dir;
  const auto base = Concat(
      Bundle("intermediate_states"),
      {"--messages", Data("intermediate_states/messages_m_double_prime.json"),
       "--algorithmic", "--player", "1", "--formula"});
  const CliResult d = Cli(Concat(
      {"check"},
      Concat(base,
             {dir.Write(
                 "d.json",
                 R"({"dom":{"level":"inf","strategy":"D","player":"1"}})")})));
  EXPECT_EQ(d.code, kExitOk) << d.err;
  EXPECT_TRUE(Json::parse(d.out)["holds"].get<bool>());
  const CliResult u = Cli(Concat(
      {"check"},
      Concat(base,
             {dir.Write(
                 "u.json",
                 R"({"dom":{"level":"inf","strategy":"U","player":"1"}})")})));
  EXPECT_FALSE(Json::parse(u.out)["holds"].get<bool>());
}

TEST(CheckTest, OracleRefusesLargeUniverses) {
  ScratchDir dir;
  const std::string f = dir.Write(
      "f.json", R"({"dom":{"level":"inf","strategy":"D","player":"1"}})");
  const CliResult r =
      Cli(Concat({"check", "--formula", f}, Bundle("intermediate_states")));
  EXPECT_EQ(r.code, kExitCapExceeded);
  EXPECT_NE(r.err.find("estimate"), std::string::npos);
}

TEST(CheckTest, AtomOfAnotherPlayerIsUnknownWithoutMessages) {
  ScratchDir dir;
  const std::string atom = dir.Write("atom.json", R"({"atom":{"player":"2",
      "context":{"1":"a","3":"e"},"better":"c","worse":"d"}})");
  for (const char* mode : {"--algorithmic", "--notion=global"}) {
    const CliResult r = Cli(Concat(
        {"check", mode, "--player", "1", "--formula", atom}, Bundle("tiny")));
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_FALSE(Json::parse(r.out)["holds"].get<bool>()) << mode;
  }
  const CliResult own = Cli(
      Concat({"check", "--player", "2", "--formula", atom}, Bundle("tiny")));
  EXPECT_TRUE(Json::parse(own.out)["holds"].get<bool>());
  const CliResult bare =
      Cli(Concat({"check", "--formula", atom}, Bundle("tiny")));
  EXPECT_TRUE(Json::parse(bare.out)["holds"].get<bool>());
}

TEST(CheckTest, ModesAgreeOnDominanceQueries) {
  ScratchDir dir;
  const std::vector<std::pair<std::string, std::string>> targets = {
      {"1", "a"}, {"1", "b"}, {"2", "c"}, {"2", "d"}, {"3", "e"}};
  for (const char* messages : {"", "tiny/messages.json"}) {
    for (const char* player : {"1", "2", "3"}) {
      for (const auto& [owner, strategy] : targets) {
        for (const char* level : {"1", "2", "\"inf\""}) {
          const std::string f =
              dir.Write("f.json", std::string(R"({"dom":{"level":)") + level +
                                      R"(,"strategy":")" + strategy +
                                      R"(","player":")" + owner + "\"}}");
          auto args =
              Concat(Bundle("tiny"), {"--player", player, "--formula", f});
          if (*messages) args = Concat(args, {"--messages", Data(messages)});
          const CliResult oracle = Cli(Concat({"check"}, args));
          const CliResult algo = Cli(Concat({"check", "--algorithmic"}, args));
          ASSERT_EQ(oracle.code, kExitOk) << oracle.err;
          ASSERT_EQ(algo.code, kExitOk) << algo.err;
          EXPECT_EQ(Json::parse(oracle.out)["holds"],
                    Json::parse(algo.out)["holds"])
              << player << " " << owner << " " << strategy << " " << level;
        }
      }
    }
  }
}

TEST(CheckTest, FalseCommonKnowledgeComesWithWitness) {
  ScratchDir dir;
  const std::string f = dir.Write("ck.json", R"({"ck":{"group":["1","2"],
      "of":{"atom":{"player":"1","context":{"2":"c","3":"e"},
                    "better":"a","worse":"b"}}}})");
  const CliResult before =
      Cli(Concat({"check", "--formula", f}, Bundle("tiny")));
  ASSERT_EQ(before.code, kExitOk) << before.err;
  const Json result = Json::parse(before.out);
  EXPECT_FALSE(result["holds"].get<bool>());
  EXPECT_TRUE(result.contains("witness"));
  const CliResult after = Cli(Concat(
      {"check", "--formula", f, "--messages", Data("tiny/messages.json")},
      Bundle("tiny")));
  EXPECT_TRUE(Json::parse(after.out)["holds"].get<bool>());
}

TEST(CheckTest, GroupKnowledgeIsUnsupportedAlgorithmically) {
  ScratchDir dir;
  const std::string f = dir.Write("ck.json", R"({"ck":{"group":["1","2"],
      "of":{"true":{}}}})");
  const CliResult r =
      Cli(Concat({"check", "--algorithmic", "--player", "1", "--formula", f},
                 Bundle("tiny")));
  EXPECT_EQ(r.code, kExitInvalidInput);
}

TEST(CheckTest, CapsMustBePositive) {
  ScratchDir dir;
  const std::string f = dir.Write("t.json", R"({"true":{}})");
  const CliResult r = Cli(
      Concat({"check", "--caps-atoms", "0", "--formula", f}, Bundle("tiny")));
  EXPECT_EQ(r.code, kExitInvalidInput);
}

TEST(SimulateTest, ScriptReproducesGoldenTrace) {
  const CliResult r = Cli(
      Concat({"simulate", "--script", Data("h_influences_outcome/fig4.json")},
             Bundle("h_influences_outcome", "hypergraph_pairwise")));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            ReadFile(Data("h_influences_outcome/fig4_trace_golden.jsonl")));
}

TEST(SimulateTest, SeededRunsAreByteIdentical) {
  const auto args =
      Concat({"simulate", "--seed", "11"},
             Bundle("h_influences_outcome", "hypergraph_pairwise"));
  const CliResult a = Cli(args);
  const CliResult b = Cli(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const CliResult c =
      Cli(Concat({"simulate", "--seed", "12"},
                 Bundle("h_influences_outcome", "hypergraph_pairwise")));
  EXPECT_NE(a.out, c.out);
}

TEST(SimulateTest, EnvironmentSeedIsTheFallback) {
  const auto bundle = Bundle("combining_step");
  const CliResult flag = Cli(Concat({"simulate", "--seed", "99"}, bundle));
  ::setenv("IESDS_NET_SEED", "99", 1);
  const CliResult env = Cli(Concat({"simulate"}, bundle));
  ::setenv("IESDS_NET_SEED", "oops", 1);
  const CliResult bad = Cli(Concat({"simulate"}, bundle));
  ::unsetenv("IESDS_NET_SEED");
  EXPECT_EQ(flag.out, env.out);
  EXPECT_EQ(bad.code, kExitInvalidInput);
}

TEST(SimulateTest, ExhaustiveContinuationEndsAtCompleteOutcome) {
  ScratchDir dir;
  const std::string trace = dir.Path("trace.jsonl");
  const CliResult r =
      Cli(Concat({"simulate", "--exhaustive", "--seed", "3", "--script",
                  Data("h_influences_outcome/fig4.json"), "--out", trace},
                 Bundle("h_influences_outcome", "hypergraph_pairwise")));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Game game =
      GameFromJson(ReadJsonFile(Data("h_influences_outcome/game.json")));
  const auto events = TraceFromJsonl(game.skeleton(), ReadFile(trace));
  int sends = 0;
  for (const auto& e : events) sends += e.kind == TraceEvent::Kind::kSend;
  EXPECT_EQ(sends, 24);
}

TEST(VerifyTest, BundlesPass) {
  const std::vector<std::vector<std::string>> inputs = {
      Bundle("combining_step"),
      Concat(Bundle("h_influences_outcome", "hypergraph_pairwise"),
             {"--messages", Data("h_influences_outcome/fig4.json")}),
      Concat(Bundle("intermediate_states"),
             {"--messages", Data("intermediate_states/messages_m_prime.json")}),
      Concat(Bundle("hbar_matters"),
             {"--messages", Data("hbar_matters/messages_m_prime.json")}),
      Concat(Bundle("tiny"), {"--messages", Data("tiny/messages.json")}),
  };
  for (const auto& input : inputs) {
    const CliResult r = Cli(Concat({"verify"}, input));
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
  const CliResult tiny = Cli(Concat({"verify"}, Bundle("tiny")));
  EXPECT_EQ(tiny.out.find("SKIP"), std::string::npos) << tiny.out;
}

TEST(VerifyTest, RandomInstancesPassDeterministically) {
  const CliResult a = Cli({"verify", "--fuzz", "20", "--seed", "4"});
  const CliResult b = Cli({"verify", "--fuzz", "20", "--seed", "4"});
  EXPECT_EQ(a.code, kExitOk) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Cli({"verify"}).code, kExitInvalidInput);
}

}  // namespace
}  // namespace iesds

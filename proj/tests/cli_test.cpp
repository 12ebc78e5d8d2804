// Copyright 2026 The c4learn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "c4learn/json_io.hpp"
#include "c4learn/win_rule.hpp"

#ifndef C4LEARN_CLI_PATH
#error "C4LEARN_CLI_PATH must name the c4learn executable"
#endif

namespace c4learn {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with `args`, feeding `input` on stdin; stderr is discarded.
RunResult run(const std::string& args, const std::string& input = "") {
  const fs::path in_file = fs::temp_directory_path() / ("c4learn_cli_in_" + std::to_string(::getpid()));
  std::ofstream(in_file) << input;
  const std::string cmd =
      std::string(C4LEARN_CLI_PATH) + " " + args + " < " + in_file.string() + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  fs::remove(in_file);
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("c4learn_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ASSERT_EQ(run("canonical --out-dir " + dir_.string()).exit_code, 0);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, TeachFromOracleLearnsEquivalentRule) {
  const RunResult r = run("teach --oracle " + path("canonical_column.json") + " --out " + path("learned.json") +
                          " --check --seed 4");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("Is this a win for yellow?"), std::string::npos);
  EXPECT_NE(r.out.find("equivalent to oracle rule: yes"), std::string::npos);
  EXPECT_TRUE(equivalent(rule_from_json(read_json_file(path("learned.json"))), canonical_rules()[0], 10000, 1));
}

TEST_F(CliTest, SeededRunsAreBitReproducible) {
  for (const char* name : {"a", "b"}) {
    ASSERT_EQ(run("teach --oracle " + path("canonical_diagonal.json") + " --seed 9 --out " + path(std::string(name) + ".json")).exit_code, 0);
    ASSERT_EQ(run("experiment ablation --games 6 --seed 3 --out " + path(std::string("abl_") + name)).exit_code, 0);
  }
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("abl_a.json")), slurp(path("abl_b.json")));
  EXPECT_EQ(slurp(path("abl_a.csv")), slurp(path("abl_b.csv")));
}

TEST_F(CliTest, ErrorsUseTheDocumentedExitCodes) {
  EXPECT_EQ(run("teach --oracle " + path("missing.json")).exit_code, 1);
  EXPECT_EQ(run("teach").exit_code, 1);
  EXPECT_EQ(run("experiment sideways").exit_code, 1);
  EXPECT_EQ(run("bogus").exit_code, 1);
  std::ofstream(path("broken.json")) << "{\"cells\": 3}";
  EXPECT_EQ(run("teach --oracle " + path("broken.json")).exit_code, 2);
  EXPECT_EQ(run("play --rule " + path("broken.json")).exit_code, 2);
}

TEST_F(CliTest, InteractiveTeachReadsDemoAndAnswers) {
  // A one-chip demo answered "no" to everything ends with the literal rule.
  std::string input = "y 3\ndone\n";
  for (int i = 0; i < 15; ++i) input += "maybe\nn\n";
  const RunResult r = run("teach --interactive --out " + path("one.json"), input);
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("Please answer y or n."), std::string::npos);
  const WinRule learned = rule_from_json(read_json_file(path("one.json")));
  EXPECT_EQ(learned.cells, (std::vector<CellCoord>{{0, 0}}));
  EXPECT_EQ(learned.anchor0, (CellCoord{3, 0}));
}

TEST_F(CliTest, PlayShowsWinBannerAndRepromptsOnBadInput) {
  // Under a single-cell rule the first chip wins.
  write_json_file(path("dot.json"), Json::parse(R"({"cells":[[0,0]],"anchor0":[0,0],"h_translate":true,
      "v_translate":true,"exclusive":true,"monotone":true,"rigid":true})"));
  const RunResult r = run("play --rule " + path("dot.json"), "x\n9\n4\n");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("Enter a column number from 0 to 6."), std::string::npos);
  EXPECT_NE(r.out.find("You win!"), std::string::npos);
}

TEST_F(CliTest, PlayAgentFirstWins) {
  write_json_file(path("dot.json"), Json::parse(R"({"cells":[[0,0]],"anchor0":[0,0],"h_translate":true,
      "v_translate":true,"exclusive":true,"monotone":true,"rigid":true})"));
  const RunResult r = run("play --first agent --rule " + path("dot.json"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("The robot wins."), std::string::npos);
}

TEST_F(CliTest, PlayFillsBoardToDraw) {
  // Needs 42 chips of one colour, so nobody can ever win.
  WinRule never;
  for (int c = 0; c < kCols; ++c) {
    for (int r = 0; r < kRows; ++r) never.cells.push_back({c, r});
  }
  write_json_file(path("never.json"), rule_to_json(never));
  std::string input;
  for (int i = 0; i < 3; ++i) {
    for (int c = 0; c < kCols; ++c) input += std::to_string(c) + "\n";
  }
  // Extra entries cover columns that filled up early.
  for (int i = 0; i < 40; ++i) input += std::to_string(i % kCols) + "\n";
  const RunResult r = run("play --rule " + path("never.json"), input);
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("Draw: the board is full."), std::string::npos);
}

TEST_F(CliTest, VariantExperimentWritesReports) {
  const RunResult r = run("experiment variants --n 5 --games 4 --seed 7 --out " + path("var"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("accuracy: 100.00%"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(path("var.json")));
  EXPECT_TRUE(fs::exists(path("var.csv")));
}

}  // namespace
}  // namespace c4learn

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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <thread>

#include <unistd.h>

#include "c4learn/error.hpp"
#include "c4learn/http_server.hpp"
#include "c4learn/json_io.hpp"
#include "c4learn/oracle.hpp"
#include "c4learn/rule_store.hpp"
#include "c4learn/service.hpp"
#include "c4learn/transcript.hpp"
#include "httplib.h"

namespace c4learn {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("c4learn_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

// Demonstration in the human frame: what a person sees and sends.
Json human_demo(const WinRule& truth, CellCoord engine_anchor) {
  return Json{{"board", board_to_json(mirror(demonstrate_at(truth, engine_anchor).first))}, {"winner", 1}};
}

Json truthful_answer(const WinRule& truth, const Json& state) {
  const Json& q = state.at("question");
  const Board engine = mirror(board_from_json(q.at("board")));
  return Json{{"question_id", q.at("id")}, {"answer", detect(truth, engine, Player::kP1)}};
}

// Drives a teaching session to completion; returns the final state.
Json teach(Service& svc, const WinRule& truth, const Board& engine_demo) {
  const std::string id = svc.create_teaching_session(Json::object()).at("id");
  Json state = svc.submit_demonstration(id, Json{{"board", board_to_json(mirror(engine_demo))}, {"winner", 1}});
  while (state.at("state") == "AwaitingAnswer") state = svc.submit_answer(id, truthful_answer(truth, state));
  return state;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIoError;
}

WinRule single_cell_rule() {
  WinRule r = rule_from_cells({{0, 0}});
  r.h_translate = r.v_translate = r.monotone = true;
  return r;
}

// Needs 42 chips of one colour, so nobody can ever win.
WinRule unwinnable_rule() {
  std::vector<CellCoord> cells;
  for (int c = 0; c < kCols; ++c) {
    for (int r = 0; r < kRows; ++r) cells.push_back({c, r});
  }
  return rule_from_cells(cells);
}

TEST(ServiceTest, TeachingSessionLifecycle) {
  Service svc(ServiceConfig{});
  const Json created = svc.create_teaching_session(Json{{"num_players", 2}, {"alternating", true}});
  EXPECT_EQ(created.at("state"), "AwaitingDemo");
  EXPECT_NE(created.at("id"), svc.create_teaching_session(Json::object()).at("id"));
  EXPECT_EQ(code_of([&] { svc.create_teaching_session(Json{{"num_players", 3}}); }),
            ErrorCode::kUnsupportedSkeleton);

  const std::string id = created.at("id");
  const WinRule column = canonical_rules()[0];
  Json state = svc.submit_demonstration(id, human_demo(column, {5, 0}));
  ASSERT_EQ(state.at("state"), "AwaitingAnswer");
  EXPECT_EQ(state.at("question").at("category"), "p1_count");
  // The first question removes one chip; shown in the human frame it sits in
  // column 1, the mirror of engine column 5.
  const Board shown = board_from_json(state.at("question").at("board"));
  EXPECT_EQ(shown.height(1), 3);
  EXPECT_EQ(shown.chip_count(), 3);
  EXPECT_EQ(code_of([&] { svc.submit_demonstration(id, human_demo(column, {5, 0})); }), ErrorCode::kWrongState);

  Json stale = truthful_answer(column, state);
  stale["question_id"] = 99;
  EXPECT_EQ(code_of([&] { svc.submit_answer(id, stale); }), ErrorCode::kStaleQuestion);

  while (state.at("state") == "AwaitingAnswer") state = svc.submit_answer(id, truthful_answer(column, state));
  EXPECT_EQ(state.at("state"), "Done");
  EXPECT_LE(state.at("questions_asked").get<int>(), 11);
  const WinRule learned = rule_from_json(state.at("rule"));
  EXPECT_TRUE(equivalent(learned, column, 10000, 1));
  EXPECT_EQ(svc.get_rule(state.at("rule_id")).at("rule"), state.at("rule"));
  EXPECT_EQ(svc.teaching_state(id), state);
  EXPECT_EQ(code_of([&] { svc.submit_answer(id, Json{{"question_id", 1}, {"answer", true}}); }),
            ErrorCode::kWrongState);
}

TEST(ServiceTest, DemonstrationValidation) {
  Service svc(ServiceConfig{});
  const std::string id = svc.create_teaching_session(Json::object()).at("id");
  Json floating = board_to_json(Board{});
  floating["cells"][2][3] = 1;
  EXPECT_EQ(code_of([&] { svc.submit_demonstration(id, Json{{"board", floating}}); }), ErrorCode::kInvalidBoard);
  EXPECT_EQ(code_of([&] { svc.submit_demonstration(id, Json{{"board", board_to_json(Board{})}}); }),
            ErrorCode::kEmptyDemonstration);
  EXPECT_EQ(code_of([&] { svc.submit_demonstration(id, Json::object()); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] { svc.teaching_state("nope"); }), ErrorCode::kUnknownSession);
  // Failed submissions leave the session waiting for a demonstration.
  EXPECT_EQ(svc.teaching_state(id).at("state"), "AwaitingDemo");
}

TEST(ServiceTest, BudgetRunsOutIntoDefaults) {
  ServiceConfig cfg;
  cfg.budget = 3;
  Service svc(cfg);
  const Json done = teach(svc, canonical_rules()[0], demonstrate_at(canonical_rules()[0], {5, 0}).first);
  EXPECT_EQ(done.at("state"), "Done");
  EXPECT_EQ(done.at("questions_asked"), 3);
  EXPECT_FALSE(done.at("rule").at("h_translate").get<bool>());
}

TEST(ServiceTest, PlaySessions) {
  Service svc(ServiceConfig{});
  const std::string column_id = svc.rules().put(canonical_rules()[0]);
  const Json fresh = svc.create_play_session(Json{{"rule_id", column_id}, {"human_first", true}});
  EXPECT_EQ(board_from_json(fresh.at("board")), Board{});
  EXPECT_EQ(fresh.at("status"), "InProgress");
  EXPECT_EQ(fresh.at("to_move"), 1);
  EXPECT_EQ(code_of([&] { svc.create_play_session(Json{{"rule_id", "missing"}}); }), ErrorCode::kUnknownRule);

  const Json agent_first =
      svc.create_play_session(Json{{"rule_id", column_id}, {"human_first", false}, {"depth", 2}});
  ASSERT_EQ(agent_first.at("move_count"), 1);
  const RuleSet rules{canonical_rules()[0]};
  const int expected = choose_move(Board{}, Player::kP1, rules, rules, AgentConfig{});
  EXPECT_EQ(agent_first.at("agent_move"), kCols - 1 - expected);
  EXPECT_EQ(agent_first.at("human"), 2);
}

TEST(ServiceTest, HumanWinHighlightsCells) {
  Service svc(ServiceConfig{});
  const std::string id =
      svc.create_play_session(Json{{"rule_id", svc.rules().put(single_cell_rule())}}).at("id");
  const Json won = svc.submit_move(id, Json{{"column", 2}});
  EXPECT_EQ(won.at("status"), "Won");
  EXPECT_EQ(won.at("winner"), 1);
  EXPECT_EQ(won.at("winning_cells"), Json::parse("[[2,0]]"));
  EXPECT_TRUE(won.at("agent_move").is_null());
  EXPECT_EQ(code_of([&] { svc.submit_move(id, Json{{"column", 3}}); }), ErrorCode::kWrongState);
}

TEST(ServiceTest, IllegalMovesAndDraw) {
  Service svc(ServiceConfig{});
  const std::string id =
      svc.create_play_session(Json{{"rule_id", svc.rules().put(unwinnable_rule())}}).at("id");
  EXPECT_EQ(code_of([&] { svc.submit_move(id, Json{{"column", 7}}); }), ErrorCode::kIllegalColumn);
  EXPECT_EQ(code_of([&] { svc.submit_move(id, Json{{"column", "3"}}); }), ErrorCode::kIllegalColumn);
  Json state = svc.play_state(id);
  bool saw_full_column = false;
  while (state.at("status") == "InProgress") {
    const Board b = board_from_json(state.at("board"));
    for (int c = 0; c < kCols; ++c) {
      if (b.height(c) == kRows && !saw_full_column) {
        EXPECT_EQ(code_of([&] { svc.submit_move(id, Json{{"column", c}}); }), ErrorCode::kIllegalColumn);
        EXPECT_EQ(svc.play_state(id), state);
        saw_full_column = true;
      }
    }
    state = svc.submit_move(id, Json{{"column", legal_actions(b).front()}});
  }
  EXPECT_TRUE(saw_full_column);
  EXPECT_EQ(state.at("status"), "Draw");
  EXPECT_EQ(state.at("move_count"), kCells);
  // Moves alternate and start with the human.
  for (int i = 0; i < kCells; ++i) EXPECT_EQ(state.at("moves")[i].at("player"), i % 2 + 1);
}

TEST(ServiceTest, LongPollWakesOnMove) {
  Service svc(ServiceConfig{});
  const std::string id =
      svc.create_play_session(Json{{"rule_id", svc.rules().put(unwinnable_rule())}}).at("id");
  const auto t0 = std::chrono::steady_clock::now();
  EXPECT_EQ(svc.play_state(id, 0, 50).at("move_count"), 0);
  EXPECT_GE(std::chrono::steady_clock::now() - t0, std::chrono::milliseconds(40));

  Json polled;
  std::thread waiter([&] { polled = svc.play_state(id, 0, 10000); });
  std::this_thread::sleep_for(std::chrono::milliseconds(50));
  const auto t1 = std::chrono::steady_clock::now();
  svc.submit_move(id, Json{{"column", 3}});
  waiter.join();
  EXPECT_LT(std::chrono::steady_clock::now() - t1, std::chrono::seconds(5));
  EXPECT_EQ(polled.at("move_count"), 2);
}

TEST(ServiceTest, TranscriptReplayReproducesTheRuleByteForByte) {
  TempDir tmp;
  ServiceConfig cfg;
  cfg.rules_dir = tmp.path() / "rules";
  cfg.journal_dir = tmp.path() / "journal";
  Service svc(cfg);
  const GroundTruth gt = random_pattern(17, 3, 5);
  const Json done = teach(svc, gt.rule, demonstrate(gt).first);
  const std::string rule_id = done.at("rule_id");
  const std::string first_bytes = canonical_dump(done.at("rule"));

  fs::path journal;
  for (const auto& entry : fs::directory_iterator(cfg.journal_dir)) journal = entry.path();
  const std::vector<Json> events = read_transcript(journal);
  ASSERT_GE(events.size(), 3u);
  EXPECT_EQ(events.front().at("event"), "demo");
  EXPECT_EQ(events.back().at("event"), "final_rule");
  EXPECT_EQ(canonical_dump(events.back().at("rule")), first_bytes);

  Service replay(ServiceConfig{});
  const std::string id = replay.create_teaching_session(Json::object()).at("id");
  Json state;
  for (const Json& e : events) {
    if (e.at("event") == "demo") {
      state = replay.submit_demonstration(
          id, Json{{"board", board_to_json(mirror(board_from_json(e.at("board"))))}, {"winner", e.at("winner")}});
    } else if (e.at("event") == "answer") {
      state = replay.submit_answer(id, Json{{"question_id", e.at("question_id")}, {"answer", e.at("answer")}});
    }
  }
  EXPECT_EQ(state.at("state"), "Done");
  EXPECT_EQ(canonical_dump(state.at("rule")), first_bytes);
  EXPECT_EQ(state.at("rule_id"), rule_id);

  // The persisted file carries the same bytes and survives a restart.
  std::ifstream in(cfg.rules_dir / (rule_id + ".json"));
  const std::string on_disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(on_disk, first_bytes);
  Service restarted(cfg);
  EXPECT_EQ(canonical_dump(restarted.get_rule(rule_id).at("rule")), first_bytes);
}

TEST(ServiceTest, ConcurrentSessionsDoNotInterfere) {
  Service svc(ServiceConfig{});
  constexpr int kThreads = 8;
  std::vector<Json> results(kThreads);
  std::vector<GroundTruth> truths;
  for (int i = 0; i < kThreads; ++i) truths.push_back(random_pattern(500 + i, 2, 5));
  std::vector<std::thread> threads;
  for (int i = 0; i < kThreads; ++i) {
    threads.emplace_back([&, i] {
      for (int round = 0; round < 5; ++round) {
        results[i] = teach(svc, truths[i].rule, demonstrate(truths[i]).first);
      }
    });
  }
  for (auto& t : threads) t.join();
  for (int i = 0; i < kThreads; ++i) {
    const TeachResult alone = teach_with_oracle(truths[i], AblationConfig::full());
    EXPECT_EQ(canonical_dump(results[i].at("rule")), canonical_dump(rule_to_json(alone.rule))) << i;
  }
  EXPECT_LE(svc.list_rules().at("rules").size(), static_cast<size_t>(kThreads));
}

TEST(RuleStoreTest, SkipsUnreadableFiles) {
  TempDir tmp;
  {
    RuleStore store(tmp.path());
    EXPECT_EQ(store.put(canonical_rules()[1]), store.put(canonical_rules()[1]));
  }
  std::ofstream(tmp.path() / "junk.json") << "{not json";
  RuleStore reloaded(tmp.path());
  ASSERT_EQ(reloaded.list().size(), 1u);
  EXPECT_EQ(reloaded.list()[0].second, canonical_rules()[1]);
}

TEST(ServiceTest, ErrorStatusMapping) {
  EXPECT_EQ(http_status(ErrorCode::kUnknownSession), 404);
  EXPECT_EQ(http_status(ErrorCode::kUnknownRule), 404);
  EXPECT_EQ(http_status(ErrorCode::kStaleQuestion), 409);
  EXPECT_EQ(http_status(ErrorCode::kWrongState), 409);
  EXPECT_EQ(http_status(ErrorCode::kInvalidBoard), 400);
  const Json body = error_body(Error(ErrorCode::kInvalidBoard, "floating chip"));
  EXPECT_EQ(body, Json({{"error", "InvalidBoard"}, {"message", "floating chip"}}));
}

class HttpTest : public ::testing::Test {
 protected:
  void SetUp() override {
    server_ = std::make_unique<HttpServer>(svc_);
    port_ = server_->bind("127.0.0.1", 0);
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_->listen(); });
    server_->wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void TearDown() override {
    server_->stop();
    thread_.join();
  }

  Json post(const std::string& path, const Json& body, int expect) {
    auto res = client_->Post(path, body.dump(), "application/json");
    EXPECT_TRUE(res) << path;
    if (!res) return Json();
    EXPECT_EQ(res->status, expect) << path << " " << res->body;
    return Json::parse(res->body);
  }
  Json get(const std::string& path, int expect) {
    auto res = client_->Get(path);
    EXPECT_TRUE(res) << path;
    if (!res) return Json();
    EXPECT_EQ(res->status, expect) << path << " " << res->body;
    return Json::parse(res->body);
  }

  Service svc_{ServiceConfig{}};
  std::unique_ptr<HttpServer> server_;
  std::unique_ptr<httplib::Client> client_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(HttpTest, TeachOverHttp) {
  const WinRule row = canonical_rules()[1];
  const Json created = post("/teach", Json::object(), 201);
  const std::string id = created.at("id");
  EXPECT_EQ(get("/teach/" + id, 200).at("state"), "AwaitingDemo");
  Json state = post("/teach/" + id + "/demo", human_demo(row, {1, 0}), 200);
  Json stale = truthful_answer(row, state);
  stale["question_id"] = 42;
  EXPECT_EQ(post("/teach/" + id + "/answer", stale, 409).at("error"), "StaleQuestion");
  while (state.at("state") == "AwaitingAnswer") {
    Json a = truthful_answer(row, state);
    a["answer"] = a["answer"].get<bool>() ? "yes" : "no";
    state = post("/teach/" + id + "/answer", a, 200);
  }
  ASSERT_EQ(state.at("state"), "Done");
  const std::string rule_id = state.at("rule_id");
  EXPECT_TRUE(equivalent(rule_from_json(state.at("rule")), row, 5000, 2));
  EXPECT_EQ(get("/rules/" + rule_id, 200).at("rule"), state.at("rule"));
  EXPECT_EQ(get("/rules", 200).at("rules").size(), 1u);
  EXPECT_EQ(get("/rules/unknown", 404).at("error"), "UnknownRule");
}

TEST_F(HttpTest, ErrorsAreJson) {
  EXPECT_EQ(get("/teach/none", 404).at("error"), "UnknownSession");
  auto res = client_->Post("/teach", "{oops", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  EXPECT_EQ(Json::parse(res->body).at("error"), "ParseError");
  EXPECT_EQ(post("/teach", Json{{"alternating", false}}, 400).at("error"), "UnsupportedSkeleton");
  auto opt = client_->Options("/teach");
  ASSERT_TRUE(opt);
  EXPECT_EQ(opt->status, 204);
  EXPECT_EQ(opt->get_header_value("Access-Control-Allow-Origin"), "*");
}

TEST_F(HttpTest, PlayOverHttp) {
  const std::string rule_id = svc_.rules().put(single_cell_rule());
  const Json created = post("/play", Json{{"rule_ids", {rule_id}}, {"human_first", false}}, 201);
  const std::string id = created.at("id");
  // The agent opened and won on its first chip.
  EXPECT_EQ(created.at("status"), "Won");
  EXPECT_EQ(created.at("winner"), 1);
  EXPECT_EQ(post("/play/" + id + "/move", Json{{"column", 0}}, 409).at("error"), "WrongState");

  const std::string slow = svc_.rules().put(unwinnable_rule());
  const std::string pid = post("/play", Json{{"rule_id", slow}}, 201).at("id");
  const Json moved = post("/play/" + pid + "/move", Json{{"column", 6}}, 200);
  EXPECT_EQ(moved.at("move_count"), 2);
  EXPECT_EQ(moved.at("moves")[0].at("column"), 6);
  EXPECT_EQ(board_from_json(moved.at("board")).at(6, 0), Cell::kP1);
  EXPECT_EQ(get("/play/" + pid + "?since=1&wait_ms=10", 200).at("move_count"), 2);
  EXPECT_EQ(get("/play/" + pid + "?since=x", 400).at("error"), "ParseError");
  EXPECT_EQ(post("/play/" + pid + "/move", Json{{"column", -1}}, 400).at("error"), "IllegalColumn");
}

}  // namespace
}  // namespace c4learn

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

#pragma once

#include <condition_variable>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "c4learn/agent.hpp"
#include "c4learn/error.hpp"
#include "c4learn/json_io.hpp"
#include "c4learn/learner.hpp"
#include "c4learn/rule_store.hpp"
#include "c4learn/transcript.hpp"

namespace c4learn {

struct ServiceConfig {
  std::filesystem::path rules_dir;    // empty: in-memory rules
  std::filesystem::path journal_dir;  // empty: transcripts are not written
  int budget = kDefaultBudget;
  int max_wait_ms = 30000;  // cap for long-poll requests
};

// Teaching and play sessions behind a JSON-in, JSON-out interface. Boards and
// columns exchanged with clients are in the human (mirrored) frame; the
// conversion happens here and nowhere else. Failures throw c4learn::Error.
class Service {
 public:
  explicit Service(ServiceConfig config);

  Json create_teaching_session(const Json& body);
  Json submit_demonstration(const std::string& id, const Json& body);
  Json submit_answer(const std::string& id, const Json& body);
  Json teaching_state(const std::string& id);

  Json list_rules() const;
  Json get_rule(const std::string& id) const;

  Json create_play_session(const Json& body);
  Json submit_move(const std::string& id, const Json& body);
  // Returns once more than `since` moves exist or `wait_ms` elapses.
  Json play_state(const std::string& id, int since = -1, int wait_ms = 0);

  RuleStore& rules() { return rules_; }

 private:
  enum class TeachState { kAwaitingDemo, kAwaitingAnswer, kDone };
  enum class PlayStatus { kInProgress, kWon, kDraw };

  struct TeachingSession {
    std::mutex mu;
    std::string id;
    GameSkeleton skeleton;
    TeachState state = TeachState::kAwaitingDemo;
    std::optional<Hypothesis> hypothesis;
    std::string rule_id;
    std::optional<WinRule> rule;
    TranscriptWriter journal;
  };

  struct PlaySession {
    std::mutex mu;
    std::condition_variable changed;
    std::string id;
    Board board;
    Player human = Player::kP1;
    Player to_move = Player::kP1;
    RuleSet rules;
    AgentConfig agent_cfg;
    PlayStatus status = PlayStatus::kInProgress;
    Player winner = Player::kP1;
    std::vector<CellCoord> winning_cells;
    std::vector<std::pair<Player, int>> moves;
    std::optional<int> last_agent_move;
  };

  std::string new_id();
  std::shared_ptr<TeachingSession> teaching(const std::string& id);
  std::shared_ptr<PlaySession> playing(const std::string& id);

  // Asks the next question or finalizes; caller holds the session lock.
  Json advance(TeachingSession& s);
  Json teaching_json(const TeachingSession& s) const;
  Json play_json(const PlaySession& s) const;
  // Applies a move and updates status; caller holds the session lock.
  void apply_move(PlaySession& s, int column);

  ServiceConfig config_;
  RuleStore rules_;
  std::mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<TeachingSession>> teaching_;
  std::map<std::string, std::shared_ptr<PlaySession>> playing_;
  std::uint64_t id_state_;
};

// Maps an error code to an HTTP status.
int http_status(ErrorCode code);

Json error_body(const Error& e);

}  // namespace c4learn

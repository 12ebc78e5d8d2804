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

#include "c4learn/service.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#include "c4learn/error.hpp"
#include "c4learn/rng.hpp"

namespace c4learn {

namespace {

const Json& require(const Json& body, const char* key) {
  if (!body.is_object() || !body.contains(key)) {
    throw Error(ErrorCode::kParseError, std::string("missing field '") + key + "'");
  }
  return body.at(key);
}

template <typename T>
T optional_field(const Json& body, const char* key, T fallback) {
  if (!body.is_object() || !body.contains(key) || body.at(key).is_null()) return fallback;
  try {
    return body.at(key).get<T>();
  } catch (const Json::exception&) {
    throw Error(ErrorCode::kParseError, std::string("field '") + key + "' has the wrong type");
  }
}

int to_human(int col) { return kCols - 1 - col; }

Json cells_json(const std::vector<CellCoord>& cells) {
  Json out = Json::array();
  for (const CellCoord& c : cells) out.push_back({to_human(c.col), c.row});
  return out;
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownRule:
    case ErrorCode::kUnknownSession:
      return 404;
    case ErrorCode::kWrongState:
    case ErrorCode::kStaleQuestion:
    case ErrorCode::kNotYourTurn:
      return 409;
    case ErrorCode::kIoError:
      return 500;
    default:
      return 400;
  }
}

Json error_body(const Error& e) {
  std::string message = e.what();
  const std::string prefix = std::string(error_name(e.code())) + ": ";
  if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
  return Json{{"error", error_name(e.code())}, {"message", message}};
}

Service::Service(ServiceConfig config)
    : config_(std::move(config)), rules_(config_.rules_dir), id_state_(std::random_device{}()) {
  id_state_ = (id_state_ << 32) ^ static_cast<std::uint64_t>(
                                       std::chrono::steady_clock::now().time_since_epoch().count());
}

std::string Service::new_id() {
  std::lock_guard lock(sessions_mu_);
  id_state_ = mix_seed(id_state_);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(id_state_));
  return buf;
}

std::shared_ptr<Service::TeachingSession> Service::teaching(const std::string& id) {
  std::lock_guard lock(sessions_mu_);
  auto it = teaching_.find(id);
  if (it == teaching_.end()) throw Error(ErrorCode::kUnknownSession, "no teaching session " + id);
  return it->second;
}

std::shared_ptr<Service::PlaySession> Service::playing(const std::string& id) {
  std::lock_guard lock(sessions_mu_);
  auto it = playing_.find(id);
  if (it == playing_.end()) throw Error(ErrorCode::kUnknownSession, "no play session " + id);
  return it->second;
}

Json Service::create_teaching_session(const Json& body) {
  const int players = optional_field<int>(body, "num_players", 2);
  const bool alternating = optional_field<bool>(body, "alternating", true);
  auto s = std::make_shared<TeachingSession>();
  s->skeleton = init_session(players, alternating);
  s->id = new_id();
  if (!config_.journal_dir.empty()) {
    s->journal = TranscriptWriter(config_.journal_dir / (s->id + ".jsonl"));
  }
  {
    std::lock_guard lock(sessions_mu_);
    teaching_[s->id] = s;
  }
  return teaching_json(*s);
}

Json Service::teaching_json(const TeachingSession& s) const {
  Json j{{"id", s.id}, {"budget", config_.budget}};
  switch (s.state) {
    case TeachState::kAwaitingDemo:
      j["state"] = "AwaitingDemo";
      j["questions_asked"] = 0;
      break;
    case TeachState::kAwaitingAnswer:
      j["state"] = "AwaitingAnswer";
      j["questions_asked"] = s.hypothesis->questions_asked;
      j["question"] = question_to_json(*s.hypothesis->pending, /*human_frame=*/true);
      break;
    case TeachState::kDone:
      j["state"] = "Done";
      j["questions_asked"] = s.hypothesis->questions_asked;
      j["rule_id"] = s.rule_id;
      j["rule"] = rule_to_json(*s.rule);
      break;
  }
  return j;
}

Json Service::advance(TeachingSession& s) {
  std::optional<Question> q;
  try {
    q = next_question(*s.hypothesis, AblationConfig::full());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExhausted) throw;
  }
  if (q) {
    s.state = TeachState::kAwaitingAnswer;
    s.journal.question(*q);
  } else {
    s.rule = finalize(*s.hypothesis);
    s.rule_id = rules_.put(*s.rule);
    s.state = TeachState::kDone;
    s.journal.final_rule(s.rule_id, *s.rule);
  }
  return teaching_json(s);
}

Json Service::submit_demonstration(const std::string& id, const Json& body) {
  auto s = teaching(id);
  std::lock_guard lock(s->mu);
  if (s->state != TeachState::kAwaitingDemo) {
    throw Error(ErrorCode::kWrongState, "session " + id + " already has a demonstration");
  }
  const Board board = mirror(board_from_json(require(body, "board")));
  const Player winner = body.contains("winner") ? player_from_json(body.at("winner")) : Player::kP1;
  s->hypothesis = ingest_demonstration(s->skeleton, board, winner, config_.budget);
  s->journal.demo(board, winner);
  return advance(*s);
}

Json Service::submit_answer(const std::string& id, const Json& body) {
  auto s = teaching(id);
  std::lock_guard lock(s->mu);
  if (s->state != TeachState::kAwaitingAnswer) {
    throw Error(ErrorCode::kWrongState, "session " + id + " is not waiting for an answer");
  }
  const Json& qid = require(body, "question_id");
  if (!qid.is_number_integer()) throw Error(ErrorCode::kParseError, "question_id must be an integer");
  const Answer a = answer_from_json(require(body, "answer"));
  const Question& pending = *s->hypothesis->pending;
  if (qid.get<int>() != pending.id) {
    throw Error(ErrorCode::kStaleQuestion, "question " + std::to_string(qid.get<int>()) +
                                               " is not the outstanding question " +
                                               std::to_string(pending.id));
  }
  const Question q = pending;
  ingest_answer(*s->hypothesis, q, a);
  s->journal.answer(q.id, a);
  return advance(*s);
}

Json Service::teaching_state(const std::string& id) {
  auto s = teaching(id);
  std::lock_guard lock(s->mu);
  return teaching_json(*s);
}

Json Service::list_rules() const {
  Json out = Json::array();
  for (const auto& [id, rule] : rules_.list()) out.push_back({{"id", id}, {"rule", rule_to_json(rule)}});
  return Json{{"rules", out}};
}

Json Service::get_rule(const std::string& id) const {
  auto rule = rules_.get(id);
  if (!rule) throw Error(ErrorCode::kUnknownRule, "no rule " + id);
  return Json{{"id", id}, {"rule", rule_to_json(*rule)}};
}

Json Service::play_json(const PlaySession& s) const {
  Json moves = Json::array();
  for (const auto& [p, col] : s.moves) moves.push_back({{"player", static_cast<int>(p)}, {"column", to_human(col)}});
  Json j{{"id", s.id},
         {"board", board_to_json(mirror(s.board))},
         {"human", static_cast<int>(s.human)},
         {"agent", static_cast<int>(opponent(s.human))},
         {"moves", moves},
         {"move_count", s.moves.size()},
         {"agent_move", s.last_agent_move ? Json(to_human(*s.last_agent_move)) : Json(nullptr)}};
  switch (s.status) {
    case PlayStatus::kInProgress:
      j["status"] = "InProgress";
      j["to_move"] = static_cast<int>(s.to_move);
      break;
    case PlayStatus::kWon:
      j["status"] = "Won";
      j["winner"] = static_cast<int>(s.winner);
      j["winning_cells"] = cells_json(s.winning_cells);
      break;
    case PlayStatus::kDraw:
      j["status"] = "Draw";
      break;
  }
  return j;
}

void Service::apply_move(PlaySession& s, int column) {
  const Player mover = s.to_move;
  s.board = apply_action(s.board, mover, column);
  s.moves.emplace_back(mover, column);
  if (auto w = winner_after_move(s.board, mover, s.rules, s.rules)) {
    s.status = PlayStatus::kWon;
    s.winner = w->first;
    s.winning_cells = *find_match(s.rules[w->second], s.board, w->first);
  } else if (is_full(s.board)) {
    s.status = PlayStatus::kDraw;
  }
  s.to_move = opponent(mover);
  s.changed.notify_all();
}

Json Service::create_play_session(const Json& body) {
  RuleSet rules;
  std::vector<std::string> ids;
  if (body.is_object() && body.contains("rule_ids")) {
    ids = optional_field<std::vector<std::string>>(body, "rule_ids", {});
  } else {
    ids.push_back(optional_field<std::string>(body, "rule_id", ""));
  }
  for (const std::string& rid : ids) {
    auto rule = rules_.get(rid);
    if (!rule) throw Error(ErrorCode::kUnknownRule, "no rule '" + rid + "'");
    rules.push_back(*rule);
  }
  if (rules.empty()) throw Error(ErrorCode::kParseError, "rule_ids must not be empty");
  const bool human_first = optional_field<bool>(body, "human_first", true);
  auto s = std::make_shared<PlaySession>();
  s->id = new_id();
  s->rules = std::move(rules);
  s->human = human_first ? Player::kP1 : Player::kP2;
  s->agent_cfg.depth = std::max(1, optional_field<int>(body, "depth", 2));
  s->agent_cfg.seed = optional_field<std::uint64_t>(body, "seed", 0);
  {
    std::lock_guard lock(sessions_mu_);
    playing_[s->id] = s;
  }
  std::lock_guard lock(s->mu);
  if (!human_first) {
    const int col = choose_move(s->board, s->to_move, s->rules, s->rules, s->agent_cfg);
    apply_move(*s, col);
    s->last_agent_move = col;
  }
  return play_json(*s);
}

Json Service::submit_move(const std::string& id, const Json& body) {
  auto s = playing(id);
  std::lock_guard lock(s->mu);
  if (s->status != PlayStatus::kInProgress) throw Error(ErrorCode::kWrongState, "the game is over");
  if (s->to_move != s->human) throw Error(ErrorCode::kNotYourTurn, "waiting for the agent");
  const Json& col_json = require(body, "column");
  if (!col_json.is_number_integer()) throw Error(ErrorCode::kIllegalColumn, "column must be an integer");
  const int human_col = col_json.get<int>();
  if (!valid_column(human_col)) {
    throw Error(ErrorCode::kIllegalColumn, "column " + std::to_string(human_col) + " is not in 0-6");
  }
  const int col = to_human(human_col);  // the reflection is its own inverse
  if (s->board.height(col) >= kRows) {
    throw Error(ErrorCode::kIllegalColumn, "column " + std::to_string(human_col) + " is full");
  }
  s->last_agent_move.reset();
  apply_move(*s, col);
  if (s->status == PlayStatus::kInProgress) {
    const int reply = choose_move(s->board, s->to_move, s->rules, s->rules, s->agent_cfg);
    apply_move(*s, reply);
    s->last_agent_move = reply;
  }
  return play_json(*s);
}

Json Service::play_state(const std::string& id, int since, int wait_ms) {
  auto s = playing(id);
  std::unique_lock lock(s->mu);
  if (wait_ms > 0 && since >= 0) {
    const auto limit = std::chrono::milliseconds(std::min(wait_ms, config_.max_wait_ms));
    s->changed.wait_for(lock, limit, [&] {
      return static_cast<int>(s->moves.size()) > since || s->status != PlayStatus::kInProgress;
    });
  }
  return play_json(*s);
}

}  // namespace c4learn

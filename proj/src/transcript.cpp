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

#include "c4learn/transcript.hpp"

#include <algorithm>
#include <cctype>

#include "c4learn/error.hpp"

namespace c4learn {

Json question_to_json(const Question& q, bool human_frame) {
  return Json{{"id", q.id},
              {"category", category_name(q.category)},
              {"probe", probe_name(q.probe)},
              {"dimension", dimension_name(q.dimension)},
              {"prompt", q.prompt},
              {"winner", static_cast<int>(q.winner)},
              {"board", board_to_json(human_frame ? mirror(q.hypothetical) : q.hypothetical)}};
}

std::string_view answer_name(Answer a) { return a == Answer::kYes ? "yes" : "no"; }

Answer answer_from_json(const Json& j) {
  if (j.is_boolean()) return j.get<bool>() ? Answer::kYes : Answer::kNo;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "yes" || s == "y") return Answer::kYes;
    if (s == "no" || s == "n") return Answer::kNo;
  }
  throw Error(ErrorCode::kParseError, "answer must be yes or no");
}

TranscriptWriter::TranscriptWriter(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  out_.open(path_, std::ios::app);
  if (!out_) throw Error(ErrorCode::kIoError, "cannot open transcript " + path_.string());
}

void TranscriptWriter::write(const Json& event) {
  if (!out_.is_open()) return;
  out_ << event.dump() << '\n';
  out_.flush();
}

void TranscriptWriter::demo(const Board& board, Player winner) {
  write({{"event", "demo"}, {"board", board_to_json(board)}, {"winner", static_cast<int>(winner)}});
}

void TranscriptWriter::question(const Question& q) {
  write({{"event", "question"}, {"question", question_to_json(q, false)}});
}

void TranscriptWriter::answer(int question_id, Answer a) {
  write({{"event", "answer"}, {"question_id", question_id}, {"answer", answer_name(a)}});
}

void TranscriptWriter::final_rule(const std::string& id, const WinRule& rule) {
  write({{"event", "final_rule"}, {"rule_id", id}, {"rule", rule_to_json(rule)}});
}

std::vector<Json> read_transcript(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::vector<Json> events;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      events.push_back(Json::parse(line));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
    }
  }
  return events;
}

}  // namespace c4learn

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

#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <vector>

#include "c4learn/json_io.hpp"
#include "c4learn/learner.hpp"

namespace c4learn {

// Question payload. With human_frame the board is mirrored for display.
Json question_to_json(const Question& q, bool human_frame);

std::string_view answer_name(Answer a);
// Accepts true/false or "yes"/"no" (any case). Throws ParseError.
Answer answer_from_json(const Json& j);

// Append-only JSON-lines log of one teaching session. Boards are stored in
// the engine frame. Events: demo, question, answer, final_rule.
class TranscriptWriter {
 public:
  TranscriptWriter() = default;  // discards events
  explicit TranscriptWriter(std::filesystem::path path);

  void demo(const Board& board, Player winner);
  void question(const Question& q);
  void answer(int question_id, Answer a);
  void final_rule(const std::string& id, const WinRule& rule);
  const std::filesystem::path& path() const { return path_; }

 private:
  void write(const Json& event);

  std::filesystem::path path_;
  std::ofstream out_;
};

std::vector<Json> read_transcript(const std::filesystem::path& path);

}  // namespace c4learn

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
#include <string>

#include "c4learn/board.hpp"
#include "c4learn/game_tree.hpp"
#include "c4learn/win_rule.hpp"
#include "json.hpp"

namespace c4learn {

using Json = nlohmann::json;

// Parse failures throw ParseError (or InvalidBoard for gravity violations).
Json board_to_json(const Board& board);
Board board_from_json(const Json& j);

Json branch_to_json(const Branch& branch);
Branch branch_from_json(const Json& j);

Json rule_to_json(const WinRule& rule);
// Missing opponent_free / context_free fields default to true.
WinRule rule_from_json(const Json& j);

Player player_from_json(const Json& j);

// Canonical text: sorted keys, compact, trailing newline.
std::string canonical_dump(const Json& j);

// FNV-1a 64 of the canonical rule JSON, as 16 hex digits.
std::string rule_id(const WinRule& rule);

Json read_json_file(const std::filesystem::path& path);
// Writes canonical_dump(j). Throws IoError.
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace c4learn

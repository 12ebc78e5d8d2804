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

#include "c4learn/json_io.hpp"

#include <cstdio>
#include <fstream>

#include "c4learn/error.hpp"

namespace c4learn {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

bool flag(const Json& j, const char* key, std::optional<bool> fallback) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    parse_fail(std::string("missing field '") + key + "'");
  }
  if (!j.at(key).is_boolean()) parse_fail(std::string(key) + " must be a boolean");
  return j.at(key).get<bool>();
}

CellCoord pair_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) parse_fail(std::string(what) + " must be a [col,row] pair");
  return {as_int(j[0], what), as_int(j[1], what)};
}

}  // namespace

Json board_to_json(const Board& board) {
  Json rows = Json::array();
  for (const auto& row : board.to_rows()) rows.push_back(row);
  return Json{{"cells", rows}};
}

Board board_from_json(const Json& j) {
  const Json& cells = field(j, "cells");
  if (!cells.is_array() || cells.size() != kRows) parse_fail("cells must hold 6 rows");
  std::array<std::array<int, kCols>, kRows> rows{};
  for (int r = 0; r < kRows; ++r) {
    if (!cells[r].is_array() || cells[r].size() != kCols) parse_fail("each row must hold 7 cells");
    for (int c = 0; c < kCols; ++c) rows[r][c] = as_int(cells[r][c], "cell");
  }
  return Board::from_rows(rows);
}

Player player_from_json(const Json& j) {
  const int v = as_int(j, "player");
  if (v != 1 && v != 2) parse_fail("player must be 1 or 2");
  return static_cast<Player>(v);
}

Json branch_to_json(const Branch& branch) {
  Json moves = Json::array();
  for (const Move& m : branch.moves) {
    moves.push_back({{"p", static_cast<int>(m.player)},
                     {"a", m.action ? Json(*m.action) : Json(nullptr)}});
  }
  return Json{{"first_player", static_cast<int>(branch.skeleton.first_player)}, {"moves", moves}};
}

Branch branch_from_json(const Json& j) {
  Branch b;
  b.skeleton.first_player = player_from_json(field(j, "first_player"));
  const Json& moves = field(j, "moves");
  if (!moves.is_array()) parse_fail("moves must be an array");
  for (const Json& m : moves) {
    Move move{player_from_json(field(m, "p")), std::nullopt};
    const Json& a = field(m, "a");
    if (!a.is_null()) move.action = as_int(a, "action");
    b.moves.push_back(move);
  }
  check_branch(b);
  return b;
}

Json rule_to_json(const WinRule& rule) {
  Json cells = Json::array();
  for (const CellCoord& c : rule.cells) cells.push_back({c.col, c.row});
  return Json{{"cells", cells},
              {"anchor0", {rule.anchor0.col, rule.anchor0.row}},
              {"h_translate", rule.h_translate},
              {"v_translate", rule.v_translate},
              {"exclusive", rule.exclusive},
              {"monotone", rule.monotone},
              {"rigid", rule.rigid},
              {"opponent_free", rule.opponent_free},
              {"context_free", rule.context_free}};
}

WinRule rule_from_json(const Json& j) {
  const Json& cells = field(j, "cells");
  if (!cells.is_array() || cells.empty()) parse_fail("cells must be a non-empty array");
  std::vector<CellCoord> offsets;
  for (const Json& c : cells) offsets.push_back(pair_from_json(c, "cell offset"));
  const size_t n = offsets.size();
  const CellCoord shift = normalize(offsets);
  if (offsets.size() != n) parse_fail("cell offsets must be distinct");
  WinRule rule;
  rule.cells = std::move(offsets);
  const CellCoord a = pair_from_json(field(j, "anchor0"), "anchor0");
  rule.anchor0 = {a.col + shift.col, a.row + shift.row};
  if (!in_bounds(rule.anchor0.col, rule.anchor0.row) ||
      !in_bounds(rule.anchor0.col + rule.width() - 1, rule.anchor0.row + rule.height() - 1)) {
    parse_fail("anchor0 does not place the pattern on the board");
  }
  rule.h_translate = flag(j, "h_translate", std::nullopt);
  rule.v_translate = flag(j, "v_translate", std::nullopt);
  rule.exclusive = flag(j, "exclusive", std::nullopt);
  rule.monotone = flag(j, "monotone", std::nullopt);
  rule.rigid = flag(j, "rigid", std::nullopt);
  rule.opponent_free = flag(j, "opponent_free", true);
  rule.context_free = flag(j, "context_free", true);
  return rule;
}

std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

std::string rule_id(const WinRule& rule) {
  const std::string text = rule_to_json(rule).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, canonical_dump(j));
}

}  // namespace c4learn

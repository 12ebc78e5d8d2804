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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c4learn/board.hpp"

namespace c4learn {

// A generalized win condition: a normalized cell pattern placed relative to
// an anchor, plus the generalization flags the learner resolves.
struct WinRule {
  std::vector<CellCoord> cells;  // sorted, min col and min row are 0
  CellCoord anchor0;             // where the demonstration placed the pattern
  bool h_translate = false;
  bool v_translate = false;
  bool exclusive = true;   // pattern cells need the winner's chips
  bool monotone = false;   // extra winner chips never spoil a win
  bool rigid = true;       // false: match per-column chip counts only
  // false: an opponent chip in a pattern column is only tolerated beneath
  // the pattern, where the demonstration's support chips sat.
  bool opponent_free = true;
  // false: the cell directly above each pattern column must be empty.
  bool context_free = true;

  int width() const;
  int height() const;

  friend bool operator==(const WinRule&, const WinRule&) = default;
};

// Sorts and shifts offsets so min col and min row are 0. Returns the shift.
CellCoord normalize(std::vector<CellCoord>& cells);

// Builds a rule from absolute cells; anchor0 is their min corner.
WinRule rule_from_cells(std::vector<CellCoord> cells);

std::vector<CellCoord> anchors(const WinRule& rule);

// Absolute cells of the pattern placed at `anchor`.
std::vector<CellCoord> place(const WinRule& rule, CellCoord anchor);

bool match_at(const WinRule& rule, const Board& board, Player player, CellCoord anchor);

bool detect(const WinRule& rule, const Board& board, Player player);

bool detect_any(const std::vector<WinRule>& rules, const Board& board, Player player);

// The cells that satisfied the rule, for highlighting. Non-rigid rules report
// the winner's chips inside the matched column window.
std::optional<std::vector<CellCoord>> find_match(const WinRule& rule, const Board& board, Player player);

// The pattern in `player` chips at `anchor`, with opponent chips filling
// every empty cell beneath a pattern cell. nullopt if it does not fit.
std::optional<Board> placement_board(const WinRule& rule, CellCoord anchor, Player player);

// Column, row, diagonal and anti-diagonal four-in-a-line rules.
std::vector<WinRule> canonical_rules();

// Samples `budget` random-play boards (seeded) and every single placement of
// either pattern, and compares detect for both players.
bool equivalent(const WinRule& a, const WinRule& b, int budget, std::uint64_t seed);

}  // namespace c4learn

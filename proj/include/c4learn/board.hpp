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

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace c4learn {

class Rng;

inline constexpr int kCols = 7;
inline constexpr int kRows = 6;
inline constexpr int kCells = kCols * kRows;

enum class Player : std::uint8_t { kP1 = 1, kP2 = 2 };

constexpr Player opponent(Player p) { return p == Player::kP1 ? Player::kP2 : Player::kP1; }

// Display name used in prompts: P1 plays yellow, P2 plays red.
std::string_view player_color(Player p);

enum class Cell : std::uint8_t { kEmpty = 0, kP1 = 1, kP2 = 2 };

constexpr Cell cell_of(Player p) { return p == Player::kP1 ? Cell::kP1 : Cell::kP2; }

// Column 0 is leftmost in the engine's (robot) frame; row 0 is the bottom.
struct CellCoord {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

constexpr bool in_bounds(int col, int row) {
  return col >= 0 && col < kCols && row >= 0 && row < kRows;
}

constexpr bool valid_column(int col) { return col >= 0 && col < kCols; }

// A 7x6 Connect Four board. Every Board value satisfies the gravity
// invariant; constructors that take raw cells validate it.
class Board {
 public:
  Board() { cells_.fill(Cell::kEmpty); }

  // Rows are bottom row first, 0=empty, 1=P1, 2=P2. Throws InvalidBoard.
  static Board from_rows(const std::array<std::array<int, kCols>, kRows>& rows);

  // Rows are written top row first using '.', 'X' (P1) and 'O' (P2);
  // whitespace is ignored. Missing leading rows are treated as empty.
  static Board from_ascii(std::string_view text);

  Cell at(int col, int row) const { return cells_[index(col, row)]; }
  Cell at(CellCoord c) const { return at(c.col, c.row); }
  int height(int col) const;
  int chip_count() const;
  int count(Player p) const;

  // Bottom row first, 0/1/2.
  std::array<std::array<int, kCols>, kRows> to_rows() const;
  std::string to_ascii() const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  friend Board apply_action(const Board&, Player, int);
  static constexpr int index(int col, int row) { return row * kCols + col; }

  std::array<Cell, kCells> cells_;
};

// Drops a chip of `player` into `column`. Throws ColumnFull / IllegalColumn.
Board apply_action(const Board& board, Player player, int column);

std::vector<int> legal_actions(const Board& board);

bool is_full(const Board& board);

// Reflects the board left-right (robot <-> human perspective).
Board mirror(const Board& board);

std::vector<CellCoord> cells_of(const Board& board, Player player);

std::uint64_t board_hash(const Board& board);

// Alternating uniformly random moves from the empty board, P1 first.
Board random_play_board(Rng& rng, int plies);

}  // namespace c4learn

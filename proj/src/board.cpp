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

#include "c4learn/board.hpp"

#include <algorithm>
#include <cctype>

#include "c4learn/error.hpp"
#include "c4learn/rng.hpp"

namespace c4learn {

std::string_view player_color(Player p) { return p == Player::kP1 ? "yellow" : "red"; }

Board Board::from_rows(const std::array<std::array<int, kCols>, kRows>& rows) {
  Board b;
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) {
      int v = rows[r][c];
      if (v < 0 || v > 2) {
        throw Error(ErrorCode::kInvalidBoard,
                    "cell (" + std::to_string(c) + "," + std::to_string(r) + ") has value " +
                        std::to_string(v));
      }
      b.cells_[index(c, r)] = static_cast<Cell>(v);
    }
  }
  for (int c = 0; c < kCols; ++c) {
    for (int r = 1; r < kRows; ++r) {
      if (b.at(c, r) != Cell::kEmpty && b.at(c, r - 1) == Cell::kEmpty) {
        throw Error(ErrorCode::kInvalidBoard,
                    "floating chip at (" + std::to_string(c) + "," + std::to_string(r) + ")");
      }
    }
  }
  return b;
}

Board Board::from_ascii(std::string_view text) {
  std::vector<std::array<int, kCols>> top_down;
  std::array<int, kCols> row{};
  int filled = 0;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    int v;
    switch (ch) {
      case '.': v = 0; break;
      case 'X': case 'x': case '1': v = 1; break;
      case 'O': case 'o': case '2': v = 2; break;
      default: throw Error(ErrorCode::kInvalidBoard, std::string("unexpected character '") + ch + "'");
    }
    row[filled++] = v;
    if (filled == kCols) {
      top_down.push_back(row);
      filled = 0;
    }
  }
  if (filled != 0 || top_down.size() > static_cast<size_t>(kRows)) {
    throw Error(ErrorCode::kInvalidBoard, "ascii board must be whole rows of 7, at most 6 rows");
  }
  std::array<std::array<int, kCols>, kRows> rows{};
  for (size_t i = 0; i < top_down.size(); ++i) {
    rows[top_down.size() - 1 - i] = top_down[i];
  }
  return from_rows(rows);
}

int Board::height(int col) const {
  int h = 0;
  while (h < kRows && at(col, h) != Cell::kEmpty) ++h;
  return h;
}

int Board::chip_count() const {
  int n = 0;
  for (Cell c : cells_) n += c != Cell::kEmpty;
  return n;
}

int Board::count(Player p) const {
  int n = 0;
  for (Cell c : cells_) n += c == cell_of(p);
  return n;
}

std::array<std::array<int, kCols>, kRows> Board::to_rows() const {
  std::array<std::array<int, kCols>, kRows> rows{};
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) rows[r][c] = static_cast<int>(at(c, r));
  }
  return rows;
}

std::string Board::to_ascii() const {
  static constexpr char kGlyph[] = {'.', 'X', 'O'};
  std::string out;
  out.reserve(kRows * (kCols + 1));
  for (int r = kRows - 1; r >= 0; --r) {
    for (int c = 0; c < kCols; ++c) out += kGlyph[static_cast<int>(at(c, r))];
    out += '\n';
  }
  return out;
}

Board apply_action(const Board& board, Player player, int column) {
  if (!valid_column(column)) {
    throw Error(ErrorCode::kIllegalColumn, "column " + std::to_string(column) + " is not in 0-6");
  }
  int h = board.height(column);
  if (h >= kRows) {
    throw Error(ErrorCode::kColumnFull, "column " + std::to_string(column) + " is full");
  }
  Board next = board;
  next.cells_[Board::index(column, h)] = cell_of(player);
  return next;
}

std::vector<int> legal_actions(const Board& board) {
  std::vector<int> out;
  for (int c = 0; c < kCols; ++c) {
    if (board.height(c) < kRows) out.push_back(c);
  }
  return out;
}

bool is_full(const Board& board) { return board.chip_count() == kCells; }

Board mirror(const Board& board) {
  auto rows = board.to_rows();
  for (auto& row : rows) std::reverse(row.begin(), row.end());
  return Board::from_rows(rows);
}

std::vector<CellCoord> cells_of(const Board& board, Player player) {
  std::vector<CellCoord> out;
  for (int c = 0; c < kCols; ++c) {
    for (int r = 0; r < kRows; ++r) {
      if (board.at(c, r) == cell_of(player)) out.push_back({c, r});
    }
  }
  return out;
}

std::uint64_t board_hash(const Board& board) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int i = 0; i < kCells; ++i) {
    h ^= static_cast<std::uint64_t>(board.at(i % kCols, i / kCols));
    h *= 1099511628211ULL;
  }
  return h;
}

Board random_play_board(Rng& rng, int plies) {
  Board b;
  Player p = Player::kP1;
  for (int i = 0; i < plies && !is_full(b); ++i) {
    b = apply_action(b, p, rng.pick(legal_actions(b)));
    p = opponent(p);
  }
  return b;
}

}  // namespace c4learn

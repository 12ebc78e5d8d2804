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

#include "c4learn/win_rule.hpp"

#include <algorithm>
#include <array>

#include "c4learn/rng.hpp"

namespace c4learn {

namespace {

constexpr int kNoCell = -1;

// Highest pattern row per pattern column, kNoCell for columns without cells.
std::array<int, kCols> column_tops(const WinRule& rule) {
  std::array<int, kCols> top;
  top.fill(kNoCell);
  for (const CellCoord& c : rule.cells) top[c.col] = std::max(top[c.col], c.row);
  return top;
}

bool is_pattern_cell(const WinRule& rule, int dc, int dr) {
  return std::binary_search(rule.cells.begin(), rule.cells.end(), CellCoord{dc, dr});
}

bool rigid_match_at(const WinRule& rule, const Board& board, Player player, CellCoord a) {
  const Cell mine = cell_of(player);
  const Cell theirs = cell_of(opponent(player));
  for (const CellCoord& c : rule.cells) {
    const Cell got = board.at(a.col + c.col, a.row + c.row);
    if (rule.exclusive ? got != mine : got == Cell::kEmpty) return false;
  }
  if (!rule.monotone || !rule.opponent_free) {
    const std::array<int, kCols> top = column_tops(rule);
    for (int x = 0; x < kCols; ++x) {
      const int dc = x - a.col;
      const bool pattern_col = dc >= 0 && dc < kCols && top[dc] != kNoCell;
      for (int y = 0; y < board.height(x); ++y) {
        const Cell got = board.at(x, y);
        if (pattern_col && is_pattern_cell(rule, dc, y - a.row)) continue;
        if (!rule.monotone && got == mine) return false;
        if (!rule.opponent_free && got == theirs && pattern_col) {
          const bool in_support = y >= a.row - rule.anchor0.row && y < a.row + top[dc];
          if (!in_support) return false;
        }
      }
    }
  }
  if (!rule.context_free) {
    const std::array<int, kCols> top = column_tops(rule);
    for (int dc = 0; dc < kCols; ++dc) {
      if (top[dc] == kNoCell) continue;
      const int x = a.col + dc;
      const int y = a.row + top[dc] + 1;
      if (in_bounds(x, y) && board.at(x, y) != Cell::kEmpty) return false;
    }
  }
  return true;
}

std::vector<int> window_columns(const WinRule& rule) {
  std::vector<int> out;
  if (!rule.h_translate) {
    out.push_back(rule.anchor0.col);
    return out;
  }
  for (int x = 0; x + rule.width() <= kCols; ++x) out.push_back(x);
  return out;
}

// Per-column winner counts against the pattern's per-column counts.
bool count_match_at(const WinRule& rule, const Board& board, Player player, int x) {
  const Cell mine = cell_of(player);
  std::array<int, kCols> need{};
  for (const CellCoord& c : rule.cells) ++need[c.col];
  for (int col = 0; col < kCols; ++col) {
    int have = 0;
    for (int y = 0; y < board.height(col); ++y) have += board.at(col, y) == mine;
    const int dc = col - x;
    if (dc < 0 || dc >= rule.width()) {
      if (!rule.monotone && have > 0) return false;
      continue;
    }
    if (rule.monotone ? have < need[dc] : have != need[dc]) return false;
  }
  return true;
}

}  // namespace

int WinRule::width() const {
  int w = 0;
  for (const CellCoord& c : cells) w = std::max(w, c.col + 1);
  return w;
}

int WinRule::height() const {
  int h = 0;
  for (const CellCoord& c : cells) h = std::max(h, c.row + 1);
  return h;
}

CellCoord normalize(std::vector<CellCoord>& cells) {
  if (cells.empty()) return {};
  CellCoord lo = cells.front();
  for (const CellCoord& c : cells) {
    lo.col = std::min(lo.col, c.col);
    lo.row = std::min(lo.row, c.row);
  }
  for (CellCoord& c : cells) {
    c.col -= lo.col;
    c.row -= lo.row;
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return lo;
}

WinRule rule_from_cells(std::vector<CellCoord> cells) {
  WinRule rule;
  rule.anchor0 = normalize(cells);
  rule.cells = std::move(cells);
  return rule;
}

std::vector<CellCoord> anchors(const WinRule& rule) {
  if (!rule.h_translate && !rule.v_translate) return {rule.anchor0};
  std::vector<CellCoord> out;
  for (int c = 0; c + rule.width() <= kCols; ++c) {
    if (!rule.h_translate && c != rule.anchor0.col) continue;
    for (int r = 0; r + rule.height() <= kRows; ++r) {
      if (!rule.v_translate && r != rule.anchor0.row) continue;
      out.push_back({c, r});
    }
  }
  return out;
}

std::vector<CellCoord> place(const WinRule& rule, CellCoord anchor) {
  std::vector<CellCoord> out;
  out.reserve(rule.cells.size());
  for (const CellCoord& c : rule.cells) out.push_back({anchor.col + c.col, anchor.row + c.row});
  return out;
}

bool match_at(const WinRule& rule, const Board& board, Player player, CellCoord anchor) {
  if (rule.cells.empty()) return false;
  if (!in_bounds(anchor.col, anchor.row) ||
      !in_bounds(anchor.col + rule.width() - 1, anchor.row + rule.height() - 1)) {
    return false;
  }
  return rigid_match_at(rule, board, player, anchor);
}

bool detect(const WinRule& rule, const Board& board, Player player) {
  return find_match(rule, board, player).has_value();
}

bool detect_any(const std::vector<WinRule>& rules, const Board& board, Player player) {
  return std::any_of(rules.begin(), rules.end(),
                     [&](const WinRule& r) { return detect(r, board, player); });
}

std::optional<std::vector<CellCoord>> find_match(const WinRule& rule, const Board& board,
                                                 Player player) {
  if (rule.cells.empty()) return std::nullopt;
  if (!rule.rigid) {
    for (int x : window_columns(rule)) {
      if (x < 0 || x + rule.width() > kCols) continue;
      if (!count_match_at(rule, board, player, x)) continue;
      std::vector<CellCoord> hit;
      for (const CellCoord& c : cells_of(board, player)) {
        if (c.col >= x && c.col < x + rule.width()) hit.push_back(c);
      }
      return hit;
    }
    return std::nullopt;
  }
  for (const CellCoord& a : anchors(rule)) {
    if (match_at(rule, board, player, a)) return place(rule, a);
  }
  return std::nullopt;
}

std::vector<WinRule> canonical_rules() {
  std::vector<std::vector<CellCoord>> shapes(4);
  for (int i = 0; i < 4; ++i) {
    shapes[0].push_back({0, i});
    shapes[1].push_back({i, 0});
    shapes[2].push_back({i, i});
    shapes[3].push_back({i, 3 - i});
  }
  std::vector<WinRule> out;
  for (auto& cells : shapes) {
    WinRule r = rule_from_cells(cells);
    r.anchor0 = {0, 0};
    r.h_translate = r.v_translate = r.exclusive = r.monotone = r.rigid = true;
    r.opponent_free = r.context_free = true;
    out.push_back(r);
  }
  return out;
}

std::optional<Board> placement_board(const WinRule& rule, CellCoord a, Player player) {
  std::array<std::array<int, kCols>, kRows> rows{};
  for (const CellCoord& c : place(rule, a)) {
    if (!in_bounds(c.col, c.row)) return std::nullopt;
    rows[c.row][c.col] = static_cast<int>(player);
  }
  for (int x = 0; x < kCols; ++x) {
    int top = -1;
    for (int y = 0; y < kRows; ++y) {
      if (rows[y][x] != 0) top = y;
    }
    for (int y = 0; y < top; ++y) {
      if (rows[y][x] == 0) rows[y][x] = static_cast<int>(opponent(player));
    }
  }
  return Board::from_rows(rows);
}

bool equivalent(const WinRule& a, const WinRule& b, int budget, std::uint64_t seed) {
  auto agree = [&](const Board& board) {
    for (Player p : {Player::kP1, Player::kP2}) {
      if (detect(a, board, p) != detect(b, board, p)) return false;
    }
    return true;
  };
  for (const WinRule* r : {&a, &b}) {
    if (r->cells.empty()) continue;
    for (int c = 0; c + r->width() <= kCols; ++c) {
      for (int row = 0; row + r->height() <= kRows; ++row) {
        for (Player p : {Player::kP1, Player::kP2}) {
          auto board = placement_board(*r, {c, row}, p);
          if (board && !agree(*board)) return false;
        }
      }
    }
  }
  Rng rng(seed);
  for (int i = 0; i < budget; ++i) {
    if (!agree(random_play_board(rng, rng.between(0, kCells)))) return false;
  }
  return true;
}

}  // namespace c4learn

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

// Brute-force Connect Four line scanner used as an independent oracle. It
// deliberately shares nothing with the pattern machinery under test: it reads
// raw cells and walks each direction explicitly.

#pragma once

#include <array>
#include <functional>
#include <set>
#include <vector>

#include "c4learn/board.hpp"

namespace c4learn::testing {

// Column, row, diagonal, anti-diagonal: the order of canonical_rules().
inline constexpr std::array<std::array<int, 2>, 4> kLineDirections{{{0, 1}, {1, 0}, {1, 1}, {1, -1}}};

inline bool has_line(const Board& b, Player p, int direction) {
  const int dc = kLineDirections[direction][0];
  const int dr = kLineDirections[direction][1];
  const Cell want = p == Player::kP1 ? Cell::kP1 : Cell::kP2;
  for (int c = 0; c < kCols; ++c) {
    for (int r = 0; r < kRows; ++r) {
      int run = 0;
      for (int k = 0; k < 4; ++k) {
        const int cc = c + k * dc;
        const int rr = r + k * dr;
        if (cc < 0 || cc >= kCols || rr < 0 || rr >= kRows || b.at(cc, rr) != want) break;
        ++run;
      }
      if (run == 4) return true;
    }
  }
  return false;
}

inline bool has_any_line(const Board& b, Player p) {
  for (int d = 0; d < 4; ++d) {
    if (has_line(b, p, d)) return true;
  }
  return false;
}

inline Player side_to_move(const Board& b) {
  return b.count(Player::kP1) == b.count(Player::kP2) ? Player::kP1 : Player::kP2;
}

// Columns where `p` dropping a chip creates a four-in-a-line.
inline std::vector<int> winning_columns(const Board& b, Player p) {
  std::vector<int> out;
  for (int c : legal_actions(b)) {
    if (has_any_line(apply_action(b, p, c), p)) out.push_back(c);
  }
  return out;
}

// Visits every distinct board reachable from the empty board within
// `max_plies` alternating moves, P1 first. Play does not stop at a line.
inline void for_each_reachable(int max_plies, const std::function<void(const Board&)>& visit) {
  std::set<std::array<std::array<int, kCols>, kRows>> seen;
  std::vector<Board> frontier{Board{}};
  seen.insert(Board{}.to_rows());
  visit(Board{});
  for (int ply = 0; ply < max_plies; ++ply) {
    const Player p = ply % 2 == 0 ? Player::kP1 : Player::kP2;
    std::vector<Board> next;
    for (const Board& b : frontier) {
      for (int c : legal_actions(b)) {
        Board child = apply_action(b, p, c);
        if (seen.insert(child.to_rows()).second) {
          visit(child);
          next.push_back(child);
        }
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace c4learn::testing

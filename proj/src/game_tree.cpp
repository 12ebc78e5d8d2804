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

#include "c4learn/game_tree.hpp"

#include <string>

#include "c4learn/error.hpp"

namespace c4learn {

Player turn_owner(const Branch& branch, int position) {
  return position % 2 == 0 ? branch.skeleton.first_player : opponent(branch.skeleton.first_player);
}

void check_branch(const Branch& branch) {
  for (size_t i = 0; i < branch.moves.size(); ++i) {
    const Move& m = branch.moves[i];
    if (m.player != turn_owner(branch, static_cast<int>(i))) {
      throw Error(ErrorCode::kInvalidBranch, "players do not alternate at move " + std::to_string(i));
    }
    if (m.action && !valid_column(*m.action)) {
      throw Error(ErrorCode::kInvalidBranch, "action " + std::to_string(*m.action) + " is not in 0-6");
    }
  }
}

Branch branch_from_demo(const Board& board, Player winner) {
  if (board.count(winner) == 0) {
    throw Error(ErrorCode::kEmptyDemonstration, "the winner has no chips on the board");
  }
  // cells_of is column-major, bottom-up, which is the placement preference.
  const std::vector<CellCoord> chips[2] = {cells_of(board, winner), cells_of(board, opponent(winner))};
  std::vector<bool> placed[2] = {std::vector<bool>(chips[0].size()), std::vector<bool>(chips[1].size())};
  size_t remaining = chips[0].size() + chips[1].size();

  Branch branch;
  branch.skeleton.first_player = winner;
  std::array<int, kCols> height{};
  for (int turn = 0; remaining > 0; ++turn) {
    const int side = turn % 2;
    const Player p = side == 0 ? winner : opponent(winner);
    Move move{p, std::nullopt};
    for (size_t k = 0; k < chips[side].size(); ++k) {
      const CellCoord c = chips[side][k];
      if (!placed[side][k] && height[c.col] == c.row) {
        placed[side][k] = true;
        ++height[c.col];
        --remaining;
        move.action = c.col;
        break;
      }
    }
    branch.moves.push_back(move);
  }
  return branch;
}

Branch translate(const Branch& branch, Player player, int offset) {
  check_branch(branch);
  Branch out = branch;
  for (Move& m : out.moves) {
    if (m.player != player || !m.action) continue;
    const int shifted = *m.action + offset;
    if (!valid_column(shifted)) {
      throw Error(ErrorCode::kOutOfRange, "action " + std::to_string(*m.action) + " shifted by " +
                                              std::to_string(offset) + " leaves 0-6");
    }
    m.action = shifted;
  }
  return out;
}

Branch add_action(const Branch& branch, int action, Player player, int position) {
  check_branch(branch);
  const int size = static_cast<int>(branch.moves.size());
  if (position < 0 || position > size) {
    throw Error(ErrorCode::kIllegalInsertion, "position " + std::to_string(position) + " outside 0.." +
                                                  std::to_string(size));
  }
  if (!valid_column(action)) {
    throw Error(ErrorCode::kIllegalInsertion, "action " + std::to_string(action) + " is not in 0-6");
  }
  Branch out = branch;
  auto at = out.moves.begin() + position;
  const Move move{player, action};
  if (turn_owner(branch, position) == player) {
    if (position < size) {
      out.moves.insert(at, {move, Move{opponent(player), std::nullopt}});
    } else {
      out.moves.insert(at, move);
    }
  } else {
    out.moves.insert(at, {Move{opponent(player), std::nullopt}, move});
  }
  try {
    to_board(out);
  } catch (const Error&) {
    throw Error(ErrorCode::kIllegalInsertion, "column " + std::to_string(action) + " would overflow");
  }
  return out;
}

Branch remove_action(const Branch& branch, int action, Player player) {
  check_branch(branch);
  int idx = -1;
  for (int i = static_cast<int>(branch.moves.size()) - 1; i >= 0; --i) {
    const Move& m = branch.moves[i];
    if (m.player == player && m.action == action) {
      idx = i;
      break;
    }
  }
  if (idx < 0) {
    throw Error(ErrorCode::kNoSuchAction, "player " + std::to_string(static_cast<int>(player)) +
                                              " never played " + std::to_string(action));
  }
  Branch out = branch;
  auto& mv = out.moves;
  const int last = static_cast<int>(mv.size()) - 1;
  if (idx == last) {
    // Dropping the final move; a dangling Unknown before it goes too.
    mv.pop_back();
    if (!mv.empty() && !mv.back().known()) mv.pop_back();
  } else if (!mv[idx + 1].known()) {
    mv.erase(mv.begin() + idx, mv.begin() + idx + 2);
  } else if (idx > 0 && !mv[idx - 1].known()) {
    mv.erase(mv.begin() + idx - 1, mv.begin() + idx + 1);
  } else {
    mv[idx].action.reset();
  }
  return out;
}

Board to_board(const Branch& branch) {
  Board b;
  for (size_t i = 0; i < branch.moves.size(); ++i) {
    const Move& m = branch.moves[i];
    if (!m.action) continue;
    if (!valid_column(*m.action) || b.height(*m.action) >= kRows) {
      throw Error(ErrorCode::kIllegalReplay,
                  "move " + std::to_string(i) + " targets column " + std::to_string(*m.action));
    }
    b = apply_action(b, m.player, *m.action);
  }
  return b;
}

}  // namespace c4learn

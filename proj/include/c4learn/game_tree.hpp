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

#include <optional>
#include <vector>

#include "c4learn/board.hpp"

namespace c4learn {

struct GameSkeleton {
  int num_players = 2;
  bool alternating = true;
  Player first_player = Player::kP1;

  friend bool operator==(const GameSkeleton&, const GameSkeleton&) = default;
};

// A single turn in a branch. An empty action means the move was not shown
// (an "Unknown" move) and is skipped when replaying onto a board.
struct Move {
  Player player = Player::kP1;
  std::optional<int> action;

  bool known() const { return action.has_value(); }
  friend bool operator==(const Move&, const Move&) = default;
};

// One branch of the extensive-form tree: strictly alternating moves starting
// with skeleton.first_player.
struct Branch {
  GameSkeleton skeleton;
  std::vector<Move> moves;

  friend bool operator==(const Branch&, const Branch&) = default;
};

// Owner of the turn slot at `position`.
Player turn_owner(const Branch& branch, int position);

// Throws InvalidBranch if players do not alternate or an action is not in 0-6.
void check_branch(const Branch& branch);

// Orders the demonstration's chips into an alternating branch whose replay
// reproduces the board. The winner moves first; a turn with no placeable chip
// for its owner becomes Unknown. Throws EmptyDemonstration.
Branch branch_from_demo(const Board& board, Player winner);

// Shifts every known action of `player` by `offset`. Throws OutOfRange.
Branch translate(const Branch& branch, Player player, int offset);

// Inserts a known move at turn slot `position` (0..size). An Unknown move of
// the other player is inserted alongside it to keep alternation. Throws
// IllegalInsertion on a bad position, action or column overflow.
Branch add_action(const Branch& branch, int action, Player player, int position);

// Removes the last known move of `player` with `action`, collapsing it with an
// adjacent Unknown of the other player. Throws NoSuchAction.
Branch remove_action(const Branch& branch, int action, Player player);

// Replays the known moves. Throws IllegalReplay on a full column.
Board to_board(const Branch& branch);

}  // namespace c4learn

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
#include <utility>
#include <vector>

#include "c4learn/board.hpp"
#include "c4learn/win_rule.hpp"

namespace c4learn {

using RuleSet = std::vector<WinRule>;

enum class Policy { kRandom, kMinimax };

struct AgentConfig {
  Policy policy = Policy::kMinimax;
  int depth = 2;
  std::uint64_t seed = 0;
};

// Best fraction of a pattern held by `player` at one anchor whose remaining
// cells are all empty. Anchors follow the rule's translation flags.
double partial_completion(const WinRule& rule, const Board& board, Player player);

// Leaf estimate in [-0.5, 0.5] from `me`'s point of view.
double evaluate(const Board& board, Player me, const RuleSet& mine, const RuleSet& theirs);

// Throws NoLegalMove on a full board. Ties go to the lowest column.
int choose_move(const Board& board, Player me, const RuleSet& mine, const RuleSet& theirs,
                const AgentConfig& cfg);

struct Outcome {
  bool draw = true;
  Player winner = Player::kP1;
  int rule_index = -1;  // index into the winner's rule set
  int ply = 0;          // 1-based ply of the deciding move (42 for a draw)
};

struct GameRecord {
  std::vector<int> moves;
  Outcome outcome;
  std::vector<Board> boards;  // after each ply, when requested
};

// The first rule in `rules` that detects for `player`, or -1.
int first_detecting(const RuleSet& rules, const Board& board, Player player);

// Checks the mover first, then the other player.
std::optional<std::pair<Player, int>> winner_after_move(const Board& board, Player mover,
                                                        const RuleSet& rules_p1,
                                                        const RuleSet& rules_p2);

GameRecord play_game(const RuleSet& rules_p1, const RuleSet& rules_p2, const AgentConfig& cfg1,
                     const AgentConfig& cfg2, bool keep_boards = false);

}  // namespace c4learn

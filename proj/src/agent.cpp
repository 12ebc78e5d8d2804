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

#include "c4learn/agent.hpp"

#include <algorithm>
#include <limits>

#include "c4learn/error.hpp"
#include "c4learn/rng.hpp"

namespace c4learn {

namespace {

struct SearchContext {
  Player me;
  const RuleSet& mine;
  const RuleSet& theirs;
};

// Terminal score after `mover` moved, or nullopt. Quicker wins score higher.
std::optional<double> terminal_value(const SearchContext& ctx, const Board& b, Player mover,
                                     int ply) {
  const double magnitude = 1.0 - 0.001 * ply;
  auto mine = [&] { return detect_any(ctx.mine, b, ctx.me); };
  auto theirs = [&] { return detect_any(ctx.theirs, b, opponent(ctx.me)); };
  if (mover == ctx.me) {
    if (mine()) return magnitude;
    if (theirs()) return -magnitude;
  } else {
    if (theirs()) return -magnitude;
    if (mine()) return magnitude;
  }
  if (is_full(b)) return 0.0;
  return std::nullopt;
}

double minimax(const SearchContext& ctx, const Board& b, Player to_move, int depth, int ply) {
  if (depth == 0) return evaluate(b, ctx.me, ctx.mine, ctx.theirs);
  const bool maximizing = to_move == ctx.me;
  double best = maximizing ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
  for (int c : legal_actions(b)) {
    const Board next = apply_action(b, to_move, c);
    const auto term = terminal_value(ctx, next, to_move, ply + 1);
    const double v = term ? *term : minimax(ctx, next, opponent(to_move), depth - 1, ply + 1);
    best = maximizing ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

}  // namespace

double partial_completion(const WinRule& rule, const Board& board, Player player) {
  const Cell mine = cell_of(player);
  const double size = static_cast<double>(rule.cells.size());
  double best = 0.0;
  for (const CellCoord& a : anchors(rule)) {
    int held = 0;
    bool open = true;
    for (const CellCoord& c : place(rule, a)) {
      const Cell got = board.at(c);
      if (got == mine) {
        ++held;
      } else if (got != Cell::kEmpty) {
        open = false;
        break;
      }
    }
    if (open) best = std::max(best, held / size);
  }
  return best;
}

double evaluate(const Board& board, Player me, const RuleSet& mine, const RuleSet& theirs) {
  double own = 0.0;
  double their = 0.0;
  for (const WinRule& r : mine) own = std::max(own, partial_completion(r, board, me));
  for (const WinRule& r : theirs) their = std::max(their, partial_completion(r, board, opponent(me)));
  // Halved so that no leaf estimate competes with a decided game.
  return 0.5 * (own - their);
}

int choose_move(const Board& board, Player me, const RuleSet& mine, const RuleSet& theirs,
                const AgentConfig& cfg) {
  const std::vector<int> legal = legal_actions(board);
  if (legal.empty()) throw Error(ErrorCode::kNoLegalMove, "the board is full");
  if (cfg.policy == Policy::kRandom) {
    Rng rng(derive_seed(cfg.seed, board_hash(board)));
    return rng.pick(legal);
  }
  const SearchContext ctx{me, mine, theirs};
  const int depth = std::max(1, cfg.depth);
  int best_col = legal.front();
  double best = -std::numeric_limits<double>::infinity();
  for (int c : legal) {
    const Board next = apply_action(board, me, c);
    const auto term = terminal_value(ctx, next, me, 1);
    const double v = term ? *term : minimax(ctx, next, opponent(me), depth - 1, 1);
    if (v > best) {
      best = v;
      best_col = c;
    }
  }
  return best_col;
}

int first_detecting(const RuleSet& rules, const Board& board, Player player) {
  for (size_t i = 0; i < rules.size(); ++i) {
    if (detect(rules[i], board, player)) return static_cast<int>(i);
  }
  return -1;
}

std::optional<std::pair<Player, int>> winner_after_move(const Board& board, Player mover,
                                                        const RuleSet& rules_p1,
                                                        const RuleSet& rules_p2) {
  for (Player p : {mover, opponent(mover)}) {
    const int idx = first_detecting(p == Player::kP1 ? rules_p1 : rules_p2, board, p);
    if (idx >= 0) return std::pair{p, idx};
  }
  return std::nullopt;
}

GameRecord play_game(const RuleSet& rules_p1, const RuleSet& rules_p2, const AgentConfig& cfg1,
                     const AgentConfig& cfg2, bool keep_boards) {
  GameRecord rec;
  Board b;
  Player p = Player::kP1;
  for (int ply = 1; ply <= kCells; ++ply) {
    const bool first = p == Player::kP1;
    const int col = choose_move(b, p, first ? rules_p1 : rules_p2, first ? rules_p2 : rules_p1,
                                first ? cfg1 : cfg2);
    b = apply_action(b, p, col);
    rec.moves.push_back(col);
    if (keep_boards) rec.boards.push_back(b);
    if (auto w = winner_after_move(b, p, rules_p1, rules_p2)) {
      rec.outcome = Outcome{false, w->first, w->second, ply};
      return rec;
    }
    p = opponent(p);
  }
  rec.outcome = Outcome{true, Player::kP1, -1, kCells};
  return rec;
}

}  // namespace c4learn

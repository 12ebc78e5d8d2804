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

#include <gtest/gtest.h>

#include <set>

#include "c4learn/board.hpp"
#include "c4learn/json_io.hpp"
#include "c4learn/oracle.hpp"
#include "c4learn/rng.hpp"
#include "c4learn/win_rule.hpp"
#include "support/line_scanner.hpp"

namespace c4learn {
namespace {

using testing::for_each_reachable;
using testing::has_line;

WinRule column_rule() { return canonical_rules()[0]; }
WinRule row_rule() { return canonical_rules()[1]; }

// Counts in-bounds placements of a pattern by trying every absolute origin.
int count_placements(const WinRule& rule) {
  int n = 0;
  for (int c = 0; c < kCols; ++c) {
    for (int r = 0; r < kRows; ++r) {
      bool fits = true;
      for (const CellCoord& cell : rule.cells) fits = fits && in_bounds(c + cell.col, r + cell.row);
      n += fits;
    }
  }
  return n;
}

// A random pattern with random flags; `h` fixes h_translate when set.
WinRule random_rule(Rng& rng, std::optional<bool> h = std::nullopt) {
  WinRule r = random_pattern(rng.next(), 1, 6).rule;
  r.h_translate = h.value_or(rng.below(2));
  r.v_translate = rng.below(2);
  r.exclusive = rng.below(2);
  r.monotone = rng.below(2);
  r.rigid = rng.below(4) != 0;
  r.opponent_free = rng.below(2);
  r.context_free = rng.below(2);
  r.anchor0 = {rng.between(0, kCols - r.width()), rng.between(0, kRows - r.height())};
  return r;
}

Board shift_columns(const Board& b, int k) {
  std::array<std::array<int, kCols>, kRows> rows{};
  const auto src = b.to_rows();
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) {
      if (src[r][c] != 0) rows[r][c + k] = src[r][c];
    }
  }
  return Board::from_rows(rows);
}

TEST(LineScannerTest, FindsEachDirection) {
  const Board col = Board::from_ascii("X . . . . . .\nX . . . . . .\nX . . . . . .\nX . . . . . .");
  const Board row = Board::from_ascii(". O O O O . .");
  const Board diag = Board::from_ascii(R"(
    . . . X . . .
    . . X O . . .
    . X O O . . .
    X O O X . . .)");
  const Board anti = mirror(diag);
  EXPECT_TRUE(has_line(col, Player::kP1, 0));
  EXPECT_FALSE(has_line(col, Player::kP1, 1));
  EXPECT_TRUE(has_line(row, Player::kP2, 1));
  EXPECT_FALSE(has_line(row, Player::kP1, 1));
  EXPECT_TRUE(has_line(diag, Player::kP1, 2));
  EXPECT_FALSE(has_line(diag, Player::kP1, 3));
  EXPECT_TRUE(has_line(anti, Player::kP1, 3));
  EXPECT_FALSE(has_line(Board::from_ascii("X X X . X . ."), Player::kP1, 1));
}

TEST(WinRuleTest, AnchorCountsMatchPlacementEnumeration) {
  EXPECT_EQ(anchors(column_rule()).size(), 21u);
  EXPECT_EQ(anchors(row_rule()).size(), 24u);
  for (const WinRule& r : canonical_rules()) {
    EXPECT_EQ(static_cast<int>(anchors(r).size()), count_placements(r));
  }
}

TEST(WinRuleTest, AnchorsFollowTranslationFlags) {
  WinRule r = row_rule();
  r.anchor0 = {2, 3};
  r.h_translate = r.v_translate = false;
  EXPECT_EQ(anchors(r), (std::vector<CellCoord>{{2, 3}}));
  r.h_translate = true;
  for (const CellCoord& a : anchors(r)) EXPECT_EQ(a.row, 3);
  EXPECT_EQ(anchors(r).size(), 4u);
  r.h_translate = false;
  r.v_translate = true;
  for (const CellCoord& a : anchors(r)) EXPECT_EQ(a.col, 2);
  EXPECT_EQ(anchors(r).size(), 6u);
}

TEST(WinRuleTest, DetectColumnDemo) {
  Board b;
  for (int i = 0; i < 4; ++i) b = apply_action(b, Player::kP1, 5);
  EXPECT_TRUE(detect(column_rule(), b, Player::kP1));
  EXPECT_FALSE(detect(column_rule(), b, Player::kP2));
  EXPECT_FALSE(detect(row_rule(), b, Player::kP1));
  EXPECT_EQ(*find_match(column_rule(), b, Player::kP1),
            (std::vector<CellCoord>{{5, 0}, {5, 1}, {5, 2}, {5, 3}}));
  for (const WinRule& r : canonical_rules()) EXPECT_FALSE(detect(r, Board{}, Player::kP1));
}

TEST(WinRuleTest, CanonicalRules) {
  const auto rules = canonical_rules();
  ASSERT_EQ(rules.size(), 4u);
  for (const WinRule& r : rules) {
    EXPECT_EQ(r.cells.size(), 4u);
    EXPECT_TRUE(r.h_translate && r.v_translate && r.exclusive && r.monotone && r.rigid);
  }
  EXPECT_EQ(rules[3].cells, (std::vector<CellCoord>{{0, 3}, {1, 2}, {2, 1}, {3, 0}}));
}

TEST(WinRuleTest, Equivalence) {
  for (const WinRule& r : canonical_rules()) EXPECT_TRUE(equivalent(r, r, 500, 1));
  EXPECT_FALSE(equivalent(column_rule(), row_rule(), 500, 1));
  WinRule pinned = column_rule();
  pinned.h_translate = false;
  EXPECT_FALSE(equivalent(pinned, column_rule(), 500, 1));
}

TEST(WinRuleTest, NonExclusiveAcceptsAnyChip) {
  WinRule r = row_rule();
  r.exclusive = false;
  const Board mixed = Board::from_ascii("X O X X . . .");
  EXPECT_TRUE(detect(r, mixed, Player::kP1));
  EXPECT_FALSE(detect(row_rule(), mixed, Player::kP1));
}

TEST(WinRuleTest, NonMonotoneRejectsExtraWinnerChips) {
  WinRule r = row_rule();
  r.monotone = false;
  EXPECT_TRUE(detect(r, Board::from_ascii("X X X X O . ."), Player::kP1));
  EXPECT_FALSE(detect(r, Board::from_ascii("X X X X O . X"), Player::kP1));
}

TEST(WinRuleTest, NonRigidMatchesColumnCounts) {
  WinRule r = rule_from_cells({{0, 0}, {1, 0}, {1, 1}});
  r.h_translate = true;
  r.rigid = false;
  r.monotone = false;
  // Same per-column counts with the chips stacked differently.
  EXPECT_TRUE(detect(r, Board::from_ascii(". . . . X . .\n. . . X O . .\n. . . O X . ."), Player::kP1));
  EXPECT_FALSE(detect(r, Board::from_ascii(". . . X X X ."), Player::kP1));
}

TEST(WinRuleTest, ContextAndOpponentConstraints) {
  WinRule r = row_rule();
  r.context_free = false;
  EXPECT_TRUE(detect(r, Board::from_ascii("X X X X . . ."), Player::kP1));
  EXPECT_FALSE(detect(r, Board::from_ascii("O . . . . . .\nX X X X . . ."), Player::kP1));

  WinRule floating = rule_from_cells({{0, 1}, {1, 1}});
  floating.opponent_free = false;
  floating.h_translate = true;
  // Support chips beneath the pattern are fine; one above it is not.
  EXPECT_TRUE(detect(floating, Board::from_ascii("X X . . . . .\nO O . . . . ."), Player::kP1));
  EXPECT_FALSE(detect(floating, Board::from_ascii("O . . . . . .\nX X . . . . .\nO O . . . . ."), Player::kP1));
}

TEST(WinRuleTest, JsonRoundTripAndDefaults) {
  for (const WinRule& r : canonical_rules()) EXPECT_EQ(rule_from_json(rule_to_json(r)), r);
  Json j = rule_to_json(row_rule());
  j.erase("opponent_free");
  j.erase("context_free");
  EXPECT_EQ(rule_from_json(j), row_rule());
  j["cells"] = Json::array({Json::array({2, 1}), Json::array({3, 1})});
  const WinRule shifted = rule_from_json(j);
  EXPECT_EQ(shifted.cells, (std::vector<CellCoord>{{0, 0}, {1, 0}}));
  EXPECT_EQ(rule_id(shifted), rule_id(rule_from_json(rule_to_json(shifted))));
}

TEST(WinRuleTest, PlacementBoardAddsSupport) {
  const WinRule r = rule_from_cells({{0, 0}, {1, 0}, {2, 0}});
  const auto b = placement_board(r, {1, 2}, Player::kP1);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->count(Player::kP1), 3);
  EXPECT_EQ(b->count(Player::kP2), 6);
  EXPECT_FALSE(placement_board(r, {5, 0}, Player::kP1).has_value());
}

// Canonical rules agree with the scanner on every board within six plies.
TEST(WinRulePropertyTest, CanonicalMatchesScannerExhaustively) {
  const auto rules = canonical_rules();
  int boards = 0;
  int disagreements = 0;
  for_each_reachable(6, [&](const Board& b) {
    ++boards;
    for (int d = 0; d < 4; ++d) {
      for (Player p : {Player::kP1, Player::kP2}) disagreements += detect(rules[d], b, p) != has_line(b, p, d);
    }
  });
  EXPECT_GT(boards, 10000);
  EXPECT_EQ(disagreements, 0);
}

TEST(WinRulePropertyTest, CanonicalMatchesScannerOnRandomBoards) {
  const auto rules = canonical_rules();
  Rng rng(123);
  int positives = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Board b = random_play_board(rng, rng.between(7, kCells));
    for (int d = 0; d < 4; ++d) {
      for (Player p : {Player::kP1, Player::kP2}) {
        const bool want = has_line(b, p, d);
        positives += want;
        ASSERT_EQ(detect(rules[d], b, p), want) << b.to_ascii();
      }
    }
  }
  EXPECT_GT(positives, 1000);
}

TEST(WinRulePropertyTest, TranslationClosure) {
  Rng rng(8);
  int checked = 0;
  for (int trial = 0; checked < 10000 && trial < 200000; ++trial) {
    const WinRule r = random_rule(rng, true);
    const auto anchor_list = anchors(r);
    auto placed = placement_board(r, rng.pick(anchor_list), Player::kP1);
    if (!placed) continue;
    Board b = *placed;
    for (int extra = rng.below(4); extra > 0; --extra) {
      const auto legal = legal_actions(b);
      b = apply_action(b, rng.below(2) ? Player::kP1 : Player::kP2, rng.pick(legal));
    }
    if (!detect(r, b, Player::kP1)) continue;
    int lo = kCols, hi = -1;
    for (int c = 0; c < kCols; ++c) {
      if (b.height(c) > 0) lo = std::min(lo, c), hi = std::max(hi, c);
    }
    for (int k = -lo; k + hi < kCols; ++k) {
      ASSERT_TRUE(detect(r, shift_columns(b, k), Player::kP1)) << rule_to_json(r) << "\n" << b.to_ascii();
    }
    ++checked;
  }
  EXPECT_EQ(checked, 10000);
}

// Holds for monotone rules that place no demand on the cell above the
// pattern; a chip stacked there is a context change, not an extra chip.
TEST(WinRulePropertyTest, MonotoneRulesSurviveExtraWinnerChips) {
  Rng rng(9);
  int checked = 0;
  for (int trial = 0; checked < 10000 && trial < 200000; ++trial) {
    WinRule r = random_rule(rng);
    r.monotone = true;
    r.context_free = true;
    Board b = random_play_board(rng, rng.between(0, 30));
    if (!detect(r, b, Player::kP1)) {
      auto placed = placement_board(r, rng.pick(anchors(r)), Player::kP1);
      if (!placed || !detect(r, *placed, Player::kP1)) continue;
      b = *placed;
    }
    const auto legal = legal_actions(b);
    if (legal.empty()) continue;
    ASSERT_TRUE(detect(r, apply_action(b, Player::kP1, rng.pick(legal)), Player::kP1)) << rule_to_json(r);
    ++checked;
  }
  EXPECT_EQ(checked, 10000);
}

TEST(WinRulePropertyTest, ExclusiveMatchBreaksWhenAPatternChipChangesColor) {
  Rng rng(10);
  int checked = 0;
  for (int trial = 0; checked < 10000 && trial < 200000; ++trial) {
    WinRule r = random_rule(rng);
    r.exclusive = true;
    r.rigid = true;
    const CellCoord a = rng.pick(anchors(r));
    auto placed = placement_board(r, a, Player::kP1);
    if (!placed || !match_at(r, *placed, Player::kP1, a)) continue;
    const CellCoord flip = rng.pick(place(r, a));
    auto rows = placed->to_rows();
    rows[flip.row][flip.col] = 2;
    ASSERT_FALSE(match_at(r, Board::from_rows(rows), Player::kP1, a));
    ++checked;
  }
  EXPECT_EQ(checked, 10000);
}

}  // namespace
}  // namespace c4learn

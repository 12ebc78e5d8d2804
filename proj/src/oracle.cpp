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

#include "c4learn/oracle.hpp"

#include <algorithm>

#include "c4learn/error.hpp"
#include "c4learn/rng.hpp"

namespace c4learn {

std::pair<Board, Player> demonstrate_at(const WinRule& rule, CellCoord anchor) {
  auto board = placement_board(rule, anchor, Player::kP1);
  if (!board) {
    throw Error(ErrorCode::kOutOfRange, "pattern does not fit at (" + std::to_string(anchor.col) +
                                            "," + std::to_string(anchor.row) + ")");
  }
  return {*board, Player::kP1};
}

std::pair<Board, Player> demonstrate(const GroundTruth& gt) {
  std::vector<CellCoord> all = anchors(gt.rule);
  std::vector<CellCoord> roomy;
  for (const CellCoord& a : all) {
    if (a.row + gt.rule.height() < kRows) roomy.push_back(a);
  }
  Rng rng(derive_seed(gt.rng_seed, 0xde30));
  return demonstrate_at(gt.rule, rng.pick(roomy.empty() ? all : roomy));
}

Answer answer(const GroundTruth& gt, const Question& q) {
  return detect(gt.rule, q.hypothetical, q.winner) ? Answer::kYes : Answer::kNo;
}

NoisyOracle::NoisyOracle(GroundTruth gt, double flip_p, std::uint64_t seed)
    : gt_(std::move(gt)), flip_p_(flip_p), state_(seed) {}

Answer NoisyOracle::answer(const Question& q) {
  Answer a = c4learn::answer(gt_, q);
  state_ = mix_seed(state_);
  Rng rng(state_);
  if (rng.unit() < flip_p_) a = a == Answer::kYes ? Answer::kNo : Answer::kYes;
  return a;
}

GroundTruth random_pattern(std::uint64_t seed, int min_cells, int max_cells) {
  Rng rng(derive_seed(seed, 0x9a77));
  const int n = rng.between(min_cells, max_cells);
  int w, h;
  do {
    w = rng.between(1, 4);
    h = rng.between(1, 4);
  } while (w * h < n);
  std::vector<CellCoord> box;
  for (int c = 0; c < w; ++c) {
    for (int r = 0; r < h; ++r) box.push_back({c, r});
  }
  // Partial Fisher-Yates: the first n entries are a uniform n-subset.
  for (int i = 0; i < n; ++i) {
    std::swap(box[i], box[i + rng.below(static_cast<int>(box.size()) - i)]);
  }
  box.resize(n);
  GroundTruth gt;
  gt.rule = rule_from_cells(box);
  gt.rule.h_translate = gt.rule.v_translate = gt.rule.exclusive = true;
  gt.rule.monotone = gt.rule.rigid = gt.rule.opponent_free = gt.rule.context_free = true;
  gt.rng_seed = seed;
  return gt;
}

TeachResult teach_with_oracle(const GroundTruth& gt, const AblationConfig& config, int budget,
                              std::optional<std::pair<Board, Player>> demo) {
  const auto [board, winner] = demo ? *demo : demonstrate(gt);
  Hypothesis h = ingest_demonstration(init_session(2, true), board, winner, budget);
  TeachResult out;
  out.demo = board;
  while (true) {
    std::optional<Question> q;
    try {
      q = next_question(h, config);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExhausted) throw;
      out.budget_exhausted = true;
      break;
    }
    if (!q) break;
    const Answer a = answer(gt, *q);
    ingest_answer(h, *q, a);
    out.transcript.emplace_back(*q, a);
  }
  out.rule = finalize(h);
  return out;
}

}  // namespace c4learn

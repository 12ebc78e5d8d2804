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

#include "c4learn/learner.hpp"
#include "c4learn/win_rule.hpp"

namespace c4learn {

struct GroundTruth {
  WinRule rule;
  std::uint64_t rng_seed = 0;
};

// Winner (P1) chips on one anchoring of the pattern, opponent support below.
// The anchor is drawn from rng_seed, preferring anchors that leave a free row
// above the pattern.
std::pair<Board, Player> demonstrate(const GroundTruth& gt);

// Same, at a chosen anchor. Throws OutOfRange if the pattern does not fit.
std::pair<Board, Player> demonstrate_at(const WinRule& rule, CellCoord anchor);

Answer answer(const GroundTruth& gt, const Question& q);

// Answers truthfully, except each answer flips with probability `flip_p`.
class NoisyOracle {
 public:
  NoisyOracle(GroundTruth gt, double flip_p, std::uint64_t seed);
  Answer answer(const Question& q);

 private:
  GroundTruth gt_;
  double flip_p_;
  std::uint64_t state_;
};

// A random normalized pattern of min_cells..max_cells cells inside a box of
// up to 4x4, with every generalization flag set.
GroundTruth random_pattern(std::uint64_t seed, int min_cells, int max_cells);

struct TeachResult {
  WinRule rule;
  std::vector<std::pair<Question, Answer>> transcript;
  bool budget_exhausted = false;
  Board demo;
};

// Runs a full session against the truthful oracle. When `demo` is empty the
// oracle demonstrates.
TeachResult teach_with_oracle(const GroundTruth& gt, const AblationConfig& config,
                              int budget = kDefaultBudget,
                              std::optional<std::pair<Board, Player>> demo = std::nullopt);

}  // namespace c4learn

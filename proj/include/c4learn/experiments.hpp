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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "c4learn/agent.hpp"
#include "c4learn/json_io.hpp"
#include "c4learn/learner.hpp"
#include "c4learn/win_rule.hpp"

namespace c4learn {

// How a learned rule fared in one game that the ground truth decided.
enum class Verdict { kDraw, kCorrect, kMissed, kFalseFire };

// Replays a finished game and compares the learned rule's first detection
// with the ground truth's deciding ply and player.
Verdict judge_game(const GameRecord& truth_game, const WinRule& learned);

// A seeded random-vs-random game whose end is decided by `truth`.
GameRecord truth_game(const WinRule& truth, std::uint64_t game_seed);

struct CellResult {
  std::string condition;
  std::string disabled_group;  // "none" for the full protocol
  int games = 0;
  int draws = 0;
  int correct = 0;
  int missed = 0;
  int false_fire = 0;
  std::vector<int> questions;  // per teaching session

  void add(Verdict v);
  // Fraction of decided games judged correct; nullopt if every game drew.
  std::optional<double> accuracy() const;
};

struct ExperimentReport {
  std::string kind;  // "variants" or "ablation"
  std::uint64_t seed = 0;
  int games_per = 0;
  std::vector<CellResult> cells;
  Json details;  // learned and ground-truth rules

  // Sum over cells; used for the variant experiment's overall line.
  CellResult total() const;
};

// Runs fn(0..n-1) on `workers` threads. Each index runs exactly once.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

inline constexpr int kVariantMinCells = 3;
inline constexpr int kVariantMaxCells = 5;

ExperimentReport run_variant_experiment(int n_patterns, int games_per, std::uint64_t seed,
                                        int workers = 1, int min_cells = kVariantMinCells,
                                        int max_cells = kVariantMaxCells);

// Names used in ablation reports, in canonical_rules() order.
const std::vector<std::string>& condition_names();

ExperimentReport run_ablation(int games_per, std::uint64_t seed, int workers = 1);

Json report_to_json(const ExperimentReport& report);
std::string report_to_csv(const ExperimentReport& report);
// Rows are disabled groups, columns are win conditions, values in percent.
std::string ablation_table(const ExperimentReport& report);
std::string variant_summary(const ExperimentReport& report);

}  // namespace c4learn

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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "c4learn/board.hpp"
#include "c4learn/game_tree.hpp"
#include "c4learn/win_rule.hpp"

namespace c4learn {

inline constexpr int kDefaultBudget = 15;

enum class Category { kP1Count, kP1Translate, kP2Actions, kEitherActions };

// Question constructions, in the order they are asked.
enum class Probe {
  kRemoveOne,
  kAddSuperset,
  kPerturbOne,
  kTranslateAll,
  kCollideInPattern,
  kOpponentElsewhere,
  kOpponentOutside,  // clarifier, only after a No to kCollideInPattern
  kFillerBeneath,
  kFillerElsewhere,
  kFillerInterposed,
};

// The generalization element each probe settles.
enum class Dimension {
  kCount,
  kMonotone,
  kGeometry,
  kHTranslate,
  kExclusive,
  kOpponentFree,
  kOpponentOutside,
  kVTranslate,
  kContextFree,
  kRigid,
};

enum class Answer { kNo, kYes };

std::string_view category_name(Category c);
std::string_view probe_name(Probe p);
std::string_view dimension_name(Dimension d);
Category category_of(Probe p);
Dimension dimension_of(Probe p);
const std::vector<Probe>& all_probes();
const std::vector<Category>& all_categories();
Category category_from_name(std::string_view name);

struct AblationConfig {
  std::set<Category> enabled{Category::kP1Count, Category::kP1Translate, Category::kP2Actions,
                             Category::kEitherActions};

  static AblationConfig full() { return {}; }
  static AblationConfig without(Category c) {
    AblationConfig cfg;
    cfg.enabled.erase(c);
    return cfg;
  }
  bool allows(Category c) const { return enabled.count(c) > 0; }
};

struct Question {
  int id = 0;  // 1-based ordinal within the session
  Probe probe = Probe::kRemoveOne;
  Category category = Category::kP1Count;
  Dimension dimension = Dimension::kCount;
  Branch branch;      // the manipulated demonstration
  Board hypothetical;  // to_board(branch), engine frame
  Player winner = Player::kP1;
  std::string prompt;
};

struct Hypothesis {
  GameSkeleton skeleton;
  Player winner = Player::kP1;
  Branch demo_branch;
  Board demo_board;
  std::vector<CellCoord> pattern;  // normalized winner cells
  CellCoord anchor0;
  std::map<Dimension, bool> resolved;
  std::set<Dimension> moot;  // no informative question could be built
  bool clarifier_scheduled = false;
  int questions_asked = 0;
  int budget = kDefaultBudget;
  std::optional<Question> pending;
};

// Only two-player alternating games are supported. Throws UnsupportedSkeleton.
GameSkeleton init_session(int num_players_answer, bool alternating_answer);

// Throws EmptyDemonstration.
Hypothesis ingest_demonstration(const GameSkeleton& skeleton, const Board& board, Player winner,
                                int budget = kDefaultBudget);

// Next question, or nullopt once every enabled dimension is settled. Probes
// that cannot yield an informative board are marked moot. Throws
// BudgetExhausted when the budget is spent with questions still to ask.
std::optional<Question> next_question(Hypothesis& h, const AblationConfig& config);

// Throws StaleQuestion unless q is the outstanding question.
void ingest_answer(Hypothesis& h, const Question& q, Answer a);

// Unsettled dimensions take the most specific (demonstration-literal) value.
WinRule finalize(const Hypothesis& h);

}  // namespace c4learn

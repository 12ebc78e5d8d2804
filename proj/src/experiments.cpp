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

#include "c4learn/experiments.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "c4learn/oracle.hpp"
#include "c4learn/rng.hpp"

namespace c4learn {

namespace {

std::string format_fraction(std::optional<double> v, const char* fmt, double scale) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, fmt, *v * scale);
  return buf;
}

Json cell_to_json(const CellResult& c) {
  const auto acc = c.accuracy();
  return Json{{"condition", c.condition},
              {"disabled_group", c.disabled_group},
              {"games", c.games},
              {"draws", c.draws},
              {"correct", c.correct},
              {"missed", c.missed},
              {"false_fire", c.false_fire},
              {"questions", c.questions},
              {"accuracy", acc ? Json(*acc) : Json(nullptr)}};
}

}  // namespace

void CellResult::add(Verdict v) {
  ++games;
  switch (v) {
    case Verdict::kDraw: ++draws; break;
    case Verdict::kCorrect: ++correct; break;
    case Verdict::kMissed: ++missed; break;
    case Verdict::kFalseFire: ++false_fire; break;
  }
}

std::optional<double> CellResult::accuracy() const {
  const int decided = games - draws;
  if (decided == 0) return std::nullopt;
  return static_cast<double>(correct) / decided;
}

CellResult ExperimentReport::total() const {
  CellResult t;
  t.condition = "all";
  t.disabled_group = "none";
  for (const CellResult& c : cells) {
    t.games += c.games;
    t.draws += c.draws;
    t.correct += c.correct;
    t.missed += c.missed;
    t.false_fire += c.false_fire;
    t.questions.insert(t.questions.end(), c.questions.begin(), c.questions.end());
  }
  return t;
}

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  workers = std::max(1, std::min(workers, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

GameRecord truth_game(const WinRule& truth, std::uint64_t game_seed) {
  const RuleSet rules{truth};
  AgentConfig a{Policy::kRandom, 1, derive_seed(game_seed, 1)};
  AgentConfig b{Policy::kRandom, 1, derive_seed(game_seed, 2)};
  return play_game(rules, rules, a, b, /*keep_boards=*/true);
}

Verdict judge_game(const GameRecord& game, const WinRule& learned) {
  if (game.outcome.draw) return Verdict::kDraw;
  const RuleSet rules{learned};
  Player mover = Player::kP1;
  for (size_t i = 0; i < game.boards.size(); ++i) {
    const int ply = static_cast<int>(i) + 1;
    if (auto w = winner_after_move(game.boards[i], mover, rules, rules)) {
      if (ply < game.outcome.ply || w->first != game.outcome.winner) return Verdict::kFalseFire;
      return Verdict::kCorrect;
    }
    mover = opponent(mover);
  }
  return Verdict::kMissed;
}

ExperimentReport run_variant_experiment(int n_patterns, int games_per, std::uint64_t seed,
                                        int workers, int min_cells, int max_cells) {
  ExperimentReport report;
  report.kind = "variants";
  report.seed = seed;
  report.games_per = games_per;
  report.cells.resize(n_patterns);
  std::vector<Json> rules(n_patterns);
  parallel_for(n_patterns, workers, [&](int i) {
    const GroundTruth gt = random_pattern(derive_seed(seed, 0x7a11, i), min_cells, max_cells);
    const TeachResult taught = teach_with_oracle(gt, AblationConfig::full());
    CellResult& cell = report.cells[i];
    char name[32];
    std::snprintf(name, sizeof name, "pattern_%02d", i);
    cell.condition = name;
    cell.disabled_group = "none";
    cell.questions.push_back(static_cast<int>(taught.transcript.size()));
    for (int g = 0; g < games_per; ++g) {
      cell.add(judge_game(truth_game(gt.rule, derive_seed(seed, 0x9a3e + i, g)), taught.rule));
    }
    rules[i] = Json{{"condition", cell.condition},
                    {"truth", rule_to_json(gt.rule)},
                    {"learned", rule_to_json(taught.rule)},
                    {"budget_exhausted", taught.budget_exhausted}};
  });
  report.details = Json{{"min_cells", min_cells}, {"max_cells", max_cells}, {"rules", rules}};
  return report;
}

const std::vector<std::string>& condition_names() {
  static const std::vector<std::string> names{"column", "row", "diagonal", "anti_diagonal"};
  return names;
}

ExperimentReport run_ablation(int games_per, std::uint64_t seed, int workers) {
  const std::vector<WinRule> truths = canonical_rules();
  const int n_cond = static_cast<int>(truths.size());
  std::vector<std::string> groups{"none"};
  std::vector<AblationConfig> configs{AblationConfig::full()};
  for (Category c : all_categories()) {
    groups.emplace_back(category_name(c));
    configs.push_back(AblationConfig::without(c));
  }
  const int n_group = static_cast<int>(groups.size());

  // Teach every (condition, group) from the same bottom-row demonstration.
  std::vector<TeachResult> taught(n_cond * n_group);
  std::vector<Json> demos(n_cond);
  for (int k = 0; k < n_cond; ++k) {
    std::vector<CellCoord> bottom;
    for (int c = 0; c + truths[k].width() <= kCols; ++c) bottom.push_back({c, 0});
    Rng rng(derive_seed(seed, 0xab1a, k));
    const CellCoord anchor = rng.pick(bottom);
    const auto demo = demonstrate_at(truths[k], anchor);
    demos[k] = Json{{"condition", condition_names()[k]}, {"anchor", {anchor.col, anchor.row}}};
    for (int g = 0; g < n_group; ++g) {
      taught[k * n_group + g] = teach_with_oracle(GroundTruth{truths[k], seed}, configs[g],
                                                  kDefaultBudget, demo);
    }
  }

  // Games depend only on (condition, game index), so every group is judged
  // on the same games.
  std::vector<std::vector<Verdict>> verdicts(n_cond * games_per);
  parallel_for(n_cond * games_per, workers, [&](int t) {
    const int k = t / games_per;
    const int game = t % games_per;
    const GameRecord rec = truth_game(truths[k], derive_seed(seed, 0x6a3e + k, game));
    for (int g = 0; g < n_group; ++g) {
      verdicts[t].push_back(judge_game(rec, taught[k * n_group + g].rule));
    }
  });

  ExperimentReport report;
  report.kind = "ablation";
  report.seed = seed;
  report.games_per = games_per;
  std::vector<Json> rules;
  for (int g = 0; g < n_group; ++g) {
    for (int k = 0; k < n_cond; ++k) {
      CellResult cell;
      cell.condition = condition_names()[k];
      cell.disabled_group = groups[g];
      const TeachResult& tr = taught[k * n_group + g];
      cell.questions.push_back(static_cast<int>(tr.transcript.size()));
      for (int game = 0; game < games_per; ++game) cell.add(verdicts[k * games_per + game][g]);
      report.cells.push_back(cell);
      rules.push_back(Json{{"condition", cell.condition},
                           {"disabled_group", cell.disabled_group},
                           {"learned", rule_to_json(tr.rule)}});
    }
  }
  report.details = Json{{"demos", demos}, {"rules", rules}};
  return report;
}

Json report_to_json(const ExperimentReport& report) {
  Json cells = Json::array();
  for (const CellResult& c : report.cells) cells.push_back(cell_to_json(c));
  Json j{{"kind", report.kind},
         {"seed", report.seed},
         {"games_per", report.games_per},
         {"cells", cells},
         {"details", report.details}};
  if (report.kind == "variants") j["total"] = cell_to_json(report.total());
  return j;
}

std::string report_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "condition,disabled_group,games,draws,accuracy\n";
  auto row = [&](const CellResult& c) {
    out << c.condition << ',' << c.disabled_group << ',' << c.games << ',' << c.draws << ','
        << format_fraction(c.accuracy(), "%.4f", 1.0) << '\n';
  };
  for (const CellResult& c : report.cells) row(c);
  if (report.kind == "variants") row(report.total());
  return out.str();
}

std::string ablation_table(const ExperimentReport& report) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-24s", "disabled group");
  out << buf;
  for (const std::string& name : condition_names()) {
    std::snprintf(buf, sizeof buf, "%14s", name.c_str());
    out << buf;
  }
  out << '\n';
  std::string current;
  for (const CellResult& c : report.cells) {
    if (c.disabled_group != current) {
      if (!current.empty()) out << '\n';
      current = c.disabled_group;
      std::snprintf(buf, sizeof buf, "%-24s",
                    current == "none" ? "none (full protocol)" : current.c_str());
      out << buf;
    }
    const std::string pct = format_fraction(c.accuracy(), "%.2f", 100.0);
    std::snprintf(buf, sizeof buf, "%14s", pct.empty() ? "n/a" : pct.c_str());
    out << buf;
  }
  out << '\n';
  return out.str();
}

std::string variant_summary(const ExperimentReport& report) {
  const CellResult t = report.total();
  int max_q = 0;
  for (int q : t.questions) max_q = std::max(max_q, q);
  std::ostringstream out;
  out << "patterns: " << report.cells.size() << "  games: " << t.games << "  draws: " << t.draws
      << "  correct: " << t.correct << "  missed: " << t.missed
      << "  false fires: " << t.false_fire << "  accuracy: "
      << format_fraction(t.accuracy(), "%.2f%%", 100.0) << "  max questions: " << max_q << '\n';
  return out.str();
}

}  // namespace c4learn

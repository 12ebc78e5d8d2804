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

// c4learn: teach win conditions, play against learned rules, run the
// experiment harness, or serve the HTTP API.

#include <algorithm>
#include <csignal>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "c4learn/agent.hpp"
#include "c4learn/error.hpp"
#include "c4learn/experiments.hpp"
#include "c4learn/http_server.hpp"
#include "c4learn/json_io.hpp"
#include "c4learn/learner.hpp"
#include "c4learn/oracle.hpp"
#include "c4learn/render.hpp"
#include "c4learn/service.hpp"
#include "c4learn/transcript.hpp"

namespace {

using namespace c4learn;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct TeachOptions {
  std::string oracle;
  bool interactive = false;
  std::string demo;
  std::string out;
  int budget = kDefaultBudget;
  std::uint64_t seed = 0;
  bool robot_view = false;
  bool check = false;
  std::vector<std::string> disable;
};

struct PlayOptions {
  std::vector<std::string> rules;
  int depth = 2;
  std::string first = "human";
  std::uint64_t seed = 0;
  bool robot_view = false;
};

struct ExperimentOptions {
  std::string kind;
  std::uint64_t seed = 7;
  int n = 50;
  int games = 0;
  std::string out;
  int workers = 0;
};

struct ServeOptions {
  std::string listen = "127.0.0.1:8080";
  std::string rules_dir = "rules";
  std::string journal_dir;
};

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  line.erase(0, line.find_first_not_of(" \t\r"));
  line.erase(line.find_last_not_of(" \t\r") + 1);
  return true;
}

std::optional<Answer> parse_answer(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "y" || s == "yes") return Answer::kYes;
  if (s == "n" || s == "no") return Answer::kNo;
  return std::nullopt;
}

// Interactive demonstration: "y <col>" or "r <col>" drops a chip (human
// columns), "undo" takes back the last chip, "done" finishes.
Board read_demo(std::istream& in, std::ostream& out, bool robot_view) {
  std::vector<std::pair<Player, int>> drops;
  auto current = [&] {
    Board b;
    for (const auto& [p, c] : drops) b = apply_action(b, p, c);
    return b;
  };
  out << "Can you please show me a way to win? Drop chips with 'y <col>' (yellow, the\n"
         "winner) or 'r <col>' (red support), 'undo' to take one back, 'done' to finish.\n";
  while (true) {
    out << render_board(current(), !robot_view) << "demo> " << std::flush;
    std::string line;
    if (!read_line(in, line)) throw Error(ErrorCode::kEmptyDemonstration, "input ended during the demo");
    if (line == "done") {
      Board b = current();
      if (b.count(Player::kP1) == 0) {
        out << "Place at least one yellow chip first.\n";
        continue;
      }
      return b;
    }
    if (line == "undo") {
      if (!drops.empty()) drops.pop_back();
      continue;
    }
    std::istringstream words(line);
    std::string color;
    int col = -1;
    words >> color >> col;
    const bool yellow = color == "y" || color == "yellow";
    const bool red = color == "r" || color == "red";
    if ((!yellow && !red) || !valid_column(col)) {
      out << "Expected 'y <col>', 'r <col>', 'undo' or 'done'.\n";
      continue;
    }
    const int engine_col = robot_view ? col : kCols - 1 - col;
    if (current().height(engine_col) >= kRows) {
      out << "Column " << col << " is full.\n";
      continue;
    }
    drops.emplace_back(yellow ? Player::kP1 : Player::kP2, engine_col);
  }
}

int cmd_teach(const TeachOptions& opt) {
  AblationConfig config;
  for (const std::string& name : opt.disable) config.enabled.erase(category_from_name(name));

  std::optional<GroundTruth> gt;
  if (!opt.oracle.empty()) gt = GroundTruth{rule_from_json(read_json_file(opt.oracle)), opt.seed};

  Board demo;
  Player winner = Player::kP1;
  if (!opt.demo.empty()) {
    const Json j = read_json_file(opt.demo);
    const Board shown = board_from_json(j.contains("board") ? j.at("board") : j);
    demo = opt.robot_view ? shown : mirror(shown);
    if (j.contains("winner")) winner = player_from_json(j.at("winner"));
  } else if (gt) {
    std::tie(demo, winner) = demonstrate(*gt);
  } else {
    demo = read_demo(std::cin, std::cout, opt.robot_view);
  }

  std::cout << "Demonstration (" << player_color(winner) << " wins):\n"
            << render_board(demo, !opt.robot_view);
  Hypothesis h = ingest_demonstration(init_session(2, true), demo, winner, opt.budget);
  while (true) {
    std::optional<Question> q;
    try {
      q = next_question(h, config);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExhausted) throw;
      std::cout << "Question budget of " << opt.budget << " used up; keeping the specific defaults.\n";
      break;
    }
    if (!q) break;
    std::cout << "\nQ" << q->id << " [" << category_name(q->category) << "/" << probe_name(q->probe)
              << "] " << q->prompt << "\n"
              << render_board(q->hypothetical, !opt.robot_view);
    Answer a;
    if (gt) {
      a = answer(*gt, *q);
      std::cout << "> " << answer_name(a) << "\n";
    } else {
      while (true) {
        std::cout << "(y/n)> " << std::flush;
        std::string line;
        if (!read_line(std::cin, line)) throw Error(ErrorCode::kParseError, "input ended before an answer");
        if (auto parsed = parse_answer(line)) {
          a = *parsed;
          break;
        }
        std::cout << "Please answer y or n.\n";
      }
    }
    ingest_answer(h, *q, a);
  }
  const WinRule rule = finalize(h);
  const Json j = rule_to_json(rule);
  std::cout << "\nLearned rule " << rule_id(rule) << " after " << h.questions_asked << " questions:\n"
            << j.dump() << "\n";
  if (!opt.out.empty()) {
    write_json_file(opt.out, j);
    std::cout << "wrote " << opt.out << "\n";
  }
  if (opt.check && gt) {
    const bool same = equivalent(rule, gt->rule, 10000, opt.seed);
    std::cout << "equivalent to oracle rule: " << (same ? "yes" : "no") << "\n";
    if (!same) return kExitRuntime;
  }
  return kExitOk;
}

int cmd_play(const PlayOptions& opt) {
  RuleSet rules;
  for (const std::string& path : opt.rules) rules.push_back(rule_from_json(read_json_file(path)));
  const Player human = opt.first == "human" ? Player::kP1 : Player::kP2;
  const AgentConfig cfg{Policy::kMinimax, opt.depth, opt.seed};
  Board b;
  Player to_move = Player::kP1;
  std::cout << "You are " << player_color(human) << " (" << (human == Player::kP1 ? 'Y' : 'R')
            << "). Columns are numbered under the board.\n";
  while (true) {
    int col;
    if (to_move == human) {
      std::cout << render_board(b, !opt.robot_view) << "your move> " << std::flush;
      std::string line;
      if (!read_line(std::cin, line)) {
        std::cout << "\nGame abandoned.\n";
        return kExitRuntime;
      }
      int shown = -1;
      try {
        size_t used = 0;
        shown = std::stoi(line, &used);
        if (used != line.size()) shown = -1;
      } catch (const std::exception&) {
      }
      if (!valid_column(shown)) {
        std::cout << "Enter a column number from 0 to 6.\n";
        continue;
      }
      col = opt.robot_view ? shown : kCols - 1 - shown;
      if (b.height(col) >= kRows) {
        std::cout << "Column " << shown << " is full.\n";
        continue;
      }
    } else {
      col = choose_move(b, to_move, rules, rules, cfg);
      std::cout << "Robot plays column " << (opt.robot_view ? col : kCols - 1 - col) << ".\n";
    }
    b = apply_action(b, to_move, col);
    if (auto w = winner_after_move(b, to_move, rules, rules)) {
      const auto cells = *find_match(rules[w->second], b, w->first);
      std::cout << render_board(b, !opt.robot_view, cells)
                << (w->first == human ? "You win!\n" : "The robot wins.\n");
      return kExitOk;
    }
    if (is_full(b)) {
      std::cout << render_board(b, !opt.robot_view) << "Draw: the board is full.\n";
      return kExitOk;
    }
    to_move = opponent(to_move);
  }
}

int cmd_experiment(const ExperimentOptions& opt) {
  const int workers = opt.workers > 0 ? opt.workers
                                      : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  ExperimentReport report;
  if (opt.kind == "variants") {
    report = run_variant_experiment(opt.n, opt.games > 0 ? opt.games : 10, opt.seed, workers);
    std::cout << variant_summary(report);
  } else {
    report = run_ablation(opt.games > 0 ? opt.games : 30, opt.seed, workers);
    std::cout << ablation_table(report);
  }
  if (!opt.out.empty()) {
    std::filesystem::path base(opt.out);
    if (base.extension() == ".json" || base.extension() == ".csv") base.replace_extension();
    const std::string stem = base.string();
    write_json_file(stem + ".json", report_to_json(report));
    write_text_file(stem + ".csv", report_to_csv(report));
    std::cout << "wrote " << stem << ".json and " << stem << ".csv\n";
  }
  return kExitOk;
}

HttpServer* g_server = nullptr;

int cmd_serve(const ServeOptions& opt) {
  const auto colon = opt.listen.rfind(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--listen", "expected host:port");
  const std::string host = opt.listen.substr(0, colon);
  int port;
  try {
    port = std::stoi(opt.listen.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--listen", "port must be a number");
  }
  ServiceConfig cfg;
  cfg.rules_dir = opt.rules_dir;
  cfg.journal_dir = opt.journal_dir.empty() ? std::filesystem::path(opt.rules_dir) / "transcripts"
                                            : std::filesystem::path(opt.journal_dir);
  Service service(cfg);
  HttpServer server(service);
  const int bound = server.bind(host, port);
  if (bound < 0) throw Error(ErrorCode::kIoError, "cannot listen on " + opt.listen);
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (g_server) g_server->stop();
  });
  std::signal(SIGTERM, [](int) {
    if (g_server) g_server->stop();
  });
  std::cout << "serving on " << host << ":" << bound << " with rules in " << cfg.rules_dir.string()
            << " (" << service.rules().list().size() << " loaded)" << std::endl;
  server.listen();
  g_server = nullptr;
  return kExitOk;
}

int cmd_canonical(const std::string& out_dir) {
  for (size_t i = 0; i < canonical_rules().size(); ++i) {
    const std::filesystem::path path =
        std::filesystem::path(out_dir) / ("canonical_" + condition_names()[i] + ".json");
    write_json_file(path, rule_to_json(canonical_rules()[i]));
    std::cout << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learn Connect Four win conditions from one demonstration and yes/no questions"};
  app.require_subcommand(1);

  TeachOptions teach;
  auto* t = app.add_subcommand("teach", "Teach a win condition (oracle-driven or interactive)");
  auto* oracle_opt = t->add_option("--oracle", teach.oracle, "Ground-truth rule file that answers questions")
                         ->check(CLI::ExistingFile);
  auto* inter_opt = t->add_flag("--interactive", teach.interactive, "Answer questions at the terminal");
  oracle_opt->excludes(inter_opt);
  t->add_option("--demo", teach.demo, "Demonstration board JSON (human view unless --robot-view)")
      ->check(CLI::ExistingFile);
  t->add_option("--out", teach.out, "Where to write the learned rule JSON");
  t->add_option("--budget", teach.budget, "Question budget")->check(CLI::Range(1, 100));
  t->add_option("--seed", teach.seed, "Seed for the oracle's demonstration");
  t->add_flag("--robot-view", teach.robot_view, "Show and read boards in the engine's frame");
  t->add_flag("--check", teach.check, "Verify the learned rule against the oracle rule");
  t->add_option("--disable", teach.disable, "Question categories to skip")
      ->check(CLI::IsMember({"p1_count", "p1_translate", "p2_actions", "either_actions"}));

  PlayOptions play;
  auto* p = app.add_subcommand("play", "Play against the depth-limited minimax agent");
  p->add_option("--rule", play.rules, "Rule file(s) both players win by")->required()->check(CLI::ExistingFile);
  p->add_option("--depth", play.depth, "Search depth")->check(CLI::Range(1, 6));
  p->add_option("--first", play.first, "Who moves first")->check(CLI::IsMember({"human", "agent"}));
  p->add_option("--seed", play.seed, "Agent seed");
  p->add_flag("--robot-view", play.robot_view, "Use the engine's column numbering");

  ExperimentOptions exp;
  auto* e = app.add_subcommand("experiment", "Run the variant or ablation experiment");
  e->add_option("kind", exp.kind, "variants or ablation")->required()->check(CLI::IsMember({"variants", "ablation"}));
  e->add_option("--seed", exp.seed, "Experiment seed");
  e->add_option("--n", exp.n, "Number of random patterns (variants)")->check(CLI::PositiveNumber);
  e->add_option("--games", exp.games, "Games per pattern or per ablation cell")->check(CLI::PositiveNumber);
  e->add_option("--out", exp.out, "Report path prefix; writes .json and .csv");
  e->add_option("--workers", exp.workers, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

  ServeOptions serve;
  auto* s = app.add_subcommand("serve", "Serve the teaching and play HTTP API");
  s->add_option("--listen", serve.listen, "host:port")->envname("C4LEARN_LISTEN");
  s->add_option("--rules-dir", serve.rules_dir, "Rule store directory")->envname("C4LEARN_RULES_DIR");
  s->add_option("--journal-dir", serve.journal_dir, "Transcript directory (default: <rules-dir>/transcripts)");

  std::string canonical_dir;
  auto* c = app.add_subcommand("canonical", "Write the four canonical rule files");
  c->add_option("--out-dir", canonical_dir, "Directory for the rule files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*t) {
      if (teach.oracle.empty() && !teach.interactive) {
        std::cerr << "teach: one of --oracle or --interactive is required\n";
        return kExitUsage;
      }
      return cmd_teach(teach);
    }
    if (*p) return cmd_play(play);
    if (*e) return cmd_experiment(exp);
    if (*s) return cmd_serve(serve);
    if (*c) return cmd_canonical(canonical_dir);
  } catch (const CLI::ParseError& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

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

// Python bindings. Values cross the boundary as JSON text using the same
// schemas as the rule files and the HTTP API; the c4learn package decodes
// them into plain Python objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "c4learn/agent.hpp"
#include "c4learn/board.hpp"
#include "c4learn/error.hpp"
#include "c4learn/experiments.hpp"
#include "c4learn/json_io.hpp"
#include "c4learn/learner.hpp"
#include "c4learn/oracle.hpp"
#include "c4learn/render.hpp"
#include "c4learn/service.hpp"
#include "c4learn/transcript.hpp"
#include "c4learn/win_rule.hpp"

namespace py = pybind11;

namespace c4learn {
namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Board board_arg(const std::string& text) { return board_from_json(parse(text)); }
WinRule rule_arg(const std::string& text) { return rule_from_json(parse(text)); }

Player player_arg(int p) { return player_from_json(Json(p)); }

RuleSet rules_arg(const std::string& text) {
  const Json j = parse(text);
  RuleSet out;
  if (j.is_array()) {
    for (const Json& r : j) out.push_back(rule_from_json(r));
  } else {
    out.push_back(rule_from_json(j));
  }
  return out;
}

AblationConfig config_arg(const std::vector<std::string>& disabled) {
  AblationConfig cfg;
  for (const std::string& name : disabled) cfg.enabled.erase(category_from_name(name));
  return cfg;
}

std::string teach(const std::string& rule, std::uint64_t seed, int budget,
                  const std::vector<std::string>& disabled) {
  const TeachResult r = teach_with_oracle(GroundTruth{rule_arg(rule), seed}, config_arg(disabled), budget);
  Json questions = Json::array();
  for (const auto& [q, a] : r.transcript) {
    Json qj = question_to_json(q, /*human_frame=*/false);
    qj["answer"] = answer_name(a);
    questions.push_back(qj);
  }
  return Json{{"rule", rule_to_json(r.rule)},
              {"rule_id", rule_id(r.rule)},
              {"questions", questions},
              {"budget_exhausted", r.budget_exhausted},
              {"demo", board_to_json(r.demo)}}
      .dump();
}

// A teaching session driven step by step from Python.
class Learner {
 public:
  Learner(const std::string& board, int winner, int budget, const std::vector<std::string>& disabled)
      : h_(ingest_demonstration(init_session(2, true), board_arg(board), player_arg(winner), budget)),
        config_(config_arg(disabled)) {}

  // JSON question in the engine frame, or None when learning is complete.
  std::optional<std::string> next_question() {
    try {
      const auto q = c4learn::next_question(h_, config_);
      if (!q) return std::nullopt;
      return question_to_json(*q, false).dump();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kBudgetExhausted) return std::nullopt;
      throw;
    }
  }

  void answer(int question_id, bool yes) {
    if (!h_.pending || h_.pending->id != question_id) {
      throw Error(ErrorCode::kStaleQuestion, "question " + std::to_string(question_id) + " is not outstanding");
    }
    ingest_answer(h_, *h_.pending, yes ? Answer::kYes : Answer::kNo);
  }

  int questions_asked() const { return h_.questions_asked; }
  std::string finalize() const { return rule_to_json(c4learn::finalize(h_)).dump(); }

 private:
  Hypothesis h_;
  AblationConfig config_;
};

}  // namespace
}  // namespace c4learn

PYBIND11_MODULE(_c4learn, m) {
  using namespace c4learn;
  m.doc() = "Connect Four win-condition learning core";

  static py::exception<Error> error_type(m, "C4LearnError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      exc.attr("code") = std::string(error_name(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("canonical_rules", [] {
    Json out = Json::array();
    for (const WinRule& r : canonical_rules()) out.push_back(rule_to_json(r));
    return out.dump();
  });
  m.def("rule_id", [](const std::string& rule) { return rule_id(rule_arg(rule)); });
  m.def("apply_action", [](const std::string& board, int player, int column) {
    return board_to_json(apply_action(board_arg(board), player_arg(player), column)).dump();
  });
  m.def("legal_actions", [](const std::string& board) { return legal_actions(board_arg(board)); });
  m.def("mirror", [](const std::string& board) { return board_to_json(mirror(board_arg(board))).dump(); });
  m.def("render", [](const std::string& board, bool human_view) {
    return render_board(board_arg(board), human_view);
  });
  m.def("detect", [](const std::string& rule, const std::string& board, int player) {
    return detect(rule_arg(rule), board_arg(board), player_arg(player));
  });
  m.def("equivalent", [](const std::string& a, const std::string& b, int budget, std::uint64_t seed) {
    return equivalent(rule_arg(a), rule_arg(b), budget, seed);
  });
  m.def("random_pattern", [](std::uint64_t seed, int min_cells, int max_cells) {
    return rule_to_json(random_pattern(seed, min_cells, max_cells).rule).dump();
  });
  m.def("demonstrate", [](const std::string& rule, std::uint64_t seed) {
    const auto [board, winner] = demonstrate(GroundTruth{rule_arg(rule), seed});
    return Json{{"board", board_to_json(board)}, {"winner", static_cast<int>(winner)}}.dump();
  });
  m.def("teach_with_oracle", &teach, py::arg("rule"), py::arg("seed") = 0, py::arg("budget") = kDefaultBudget,
        py::arg("disabled") = std::vector<std::string>{});
  m.def(
      "choose_move",
      [](const std::string& board, int player, const std::string& rules, int depth, std::uint64_t seed) {
        const RuleSet set = rules_arg(rules);
        return choose_move(board_arg(board), player_arg(player), set, set,
                           AgentConfig{Policy::kMinimax, depth, seed});
      },
      py::arg("board"), py::arg("player"), py::arg("rules"), py::arg("depth") = 2, py::arg("seed") = 0);
  m.def(
      "run_variant_experiment",
      [](int n, int games, std::uint64_t seed, int workers) {
        py::gil_scoped_release release;
        const ExperimentReport r = run_variant_experiment(n, games, seed, workers);
        return Json{{"report", report_to_json(r)}, {"csv", report_to_csv(r)}}.dump();
      },
      py::arg("n_patterns") = 50, py::arg("games_per") = 10, py::arg("seed") = 7, py::arg("workers") = 1);
  m.def(
      "run_ablation",
      [](int games, std::uint64_t seed, int workers) {
        py::gil_scoped_release release;
        const ExperimentReport r = run_ablation(games, seed, workers);
        return Json{{"report", report_to_json(r)}, {"csv", report_to_csv(r)}, {"table", ablation_table(r)}}.dump();
      },
      py::arg("games_per") = 30, py::arg("seed") = 7, py::arg("workers") = 1);

  py::class_<Learner>(m, "Learner")
      .def(py::init<const std::string&, int, int, const std::vector<std::string>&>(), py::arg("board"),
           py::arg("winner") = 1, py::arg("budget") = kDefaultBudget,
           py::arg("disabled") = std::vector<std::string>{})
      .def("next_question", &Learner::next_question)
      .def("answer", &Learner::answer, py::arg("question_id"), py::arg("yes"))
      .def_property_readonly("questions_asked", &Learner::questions_asked)
      .def("finalize", &Learner::finalize);

  py::class_<Service>(m, "Service")
      .def(py::init([](const std::string& rules_dir, const std::string& journal_dir, int budget) {
             return std::make_unique<Service>(ServiceConfig{rules_dir, journal_dir, budget});
           }),
           py::arg("rules_dir") = "", py::arg("journal_dir") = "", py::arg("budget") = kDefaultBudget)
      .def("create_teaching_session",
           [](Service& s, const std::string& body) { return s.create_teaching_session(parse(body)).dump(); })
      .def("submit_demonstration",
           [](Service& s, const std::string& id, const std::string& body) {
             return s.submit_demonstration(id, parse(body)).dump();
           })
      .def("submit_answer",
           [](Service& s, const std::string& id, const std::string& body) {
             return s.submit_answer(id, parse(body)).dump();
           })
      .def("teaching_state", [](Service& s, const std::string& id) { return s.teaching_state(id).dump(); })
      .def("list_rules", [](const Service& s) { return s.list_rules().dump(); })
      .def("get_rule", [](const Service& s, const std::string& id) { return s.get_rule(id).dump(); })
      .def("create_play_session",
           [](Service& s, const std::string& body) { return s.create_play_session(parse(body)).dump(); })
      .def("submit_move",
           [](Service& s, const std::string& id, const std::string& body) {
             return s.submit_move(id, parse(body)).dump();
           })
      .def("play_state", [](Service& s, const std::string& id) { return s.play_state(id).dump(); });
}

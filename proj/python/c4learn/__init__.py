# Copyright 2026 The c4learn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Learn Connect Four win conditions from one demonstration and yes/no questions.

Boards are ``{"cells": [[int] * 7] * 6}`` dicts, bottom row first, in the
engine frame (column 0 leftmost from the robot's side). Rules use the rule
file schema. Players are 1 (yellow) and 2 (red).
"""

import json

from . import _c4learn
from ._c4learn import C4LearnError

__all__ = [
        "C4LearnError",
        "Learner",
        "Service",
        "apply_action",
        "canonical_rules",
        "choose_move",
        "demonstrate",
        "detect",
        "empty_board",
        "equivalent",
        "legal_actions",
        "mirror",
        "random_pattern",
        "render",
        "rule_id",
        "run_ablation",
        "run_variant_experiment",
        "teach_with_oracle",
]


def _dump(value):
    return json.dumps(value)


def empty_board():
    return {"cells": [[0] * 7 for _ in range(6)]}


def canonical_rules():
    """Column, row, diagonal and anti-diagonal rules, in that order."""
    return json.loads(_c4learn.canonical_rules())


def rule_id(rule):
    return _c4learn.rule_id(_dump(rule))


def apply_action(board, player, column):
    return json.loads(_c4learn.apply_action(_dump(board), player, column))


def legal_actions(board):
    return _c4learn.legal_actions(_dump(board))


def mirror(board):
    return json.loads(_c4learn.mirror(_dump(board)))


def render(board, human_view=True):
    return _c4learn.render(_dump(board), human_view)


def detect(rule, board, player=1):
    return _c4learn.detect(_dump(rule), _dump(board), player)


def equivalent(a, b, budget=10000, seed=0):
    return _c4learn.equivalent(_dump(a), _dump(b), budget, seed)


def random_pattern(seed, min_cells=3, max_cells=5):
    return json.loads(_c4learn.random_pattern(seed, min_cells, max_cells))


def demonstrate(rule, seed=0):
    """Returns (board, winner) for a seeded placement of the rule's pattern."""
    out = json.loads(_c4learn.demonstrate(_dump(rule), seed))
    return out["board"], out["winner"]


def teach_with_oracle(rule, seed=0, budget=15, disabled=()):
    """Teaches `rule` to a fresh learner with truthful answers.

    Returns a dict with the learned ``rule``, its ``rule_id``, the asked
    ``questions`` (each with its ``answer``), ``budget_exhausted`` and the
    ``demo`` board.
    """
    return json.loads(_c4learn.teach_with_oracle(_dump(rule), seed, budget, list(disabled)))


def choose_move(board, player, rules, depth=2, seed=0):
    return _c4learn.choose_move(_dump(board), player, _dump(rules), depth, seed)


def run_variant_experiment(n_patterns=50, games_per=10, seed=7, workers=1):
    return json.loads(_c4learn.run_variant_experiment(n_patterns, games_per, seed, workers))


def run_ablation(games_per=30, seed=7, workers=1):
    return json.loads(_c4learn.run_ablation(games_per, seed, workers))


class Learner:
    """Step-by-step teaching session over a demonstration board."""

    def __init__(self, board, winner=1, budget=15, disabled=()):
        self._impl = _c4learn.Learner(_dump(board), winner, budget, list(disabled))

    def next_question(self):
        text = self._impl.next_question()
        return None if text is None else json.loads(text)

    def answer(self, question_id, yes):
        self._impl.answer(question_id, bool(yes))

    @property
    def questions_asked(self):
        return self._impl.questions_asked

    def finalize(self):
        return json.loads(self._impl.finalize())


class Service:
    """In-process teaching and play service with dict payloads.

    Boards and columns exchanged here are in the human (mirrored) frame, as
    over HTTP.
    """

    def __init__(self, rules_dir="", journal_dir="", budget=15):
        self._impl = _c4learn.Service(str(rules_dir), str(journal_dir), budget)

    def create_teaching_session(self, body=None):
        return json.loads(self._impl.create_teaching_session(_dump(body or {})))

    def submit_demonstration(self, session_id, body):
        return json.loads(self._impl.submit_demonstration(session_id, _dump(body)))

    def submit_answer(self, session_id, body):
        return json.loads(self._impl.submit_answer(session_id, _dump(body)))

    def teaching_state(self, session_id):
        return json.loads(self._impl.teaching_state(session_id))

    def list_rules(self):
        return json.loads(self._impl.list_rules())

    def get_rule(self, rule_id_):
        return json.loads(self._impl.get_rule(rule_id_))

    def create_play_session(self, body):
        return json.loads(self._impl.create_play_session(_dump(body)))

    def submit_move(self, session_id, body):
        return json.loads(self._impl.submit_move(session_id, _dump(body)))

    def play_state(self, session_id):
        return json.loads(self._impl.play_state(session_id))

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

#include "c4learn/learner.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "c4learn/error.hpp"

namespace c4learn {

namespace {

struct ProbeInfo {
  Probe probe;
  Category category;
  Dimension dimension;
  const char* name;
};

constexpr ProbeInfo kProbes[] = {
    {Probe::kRemoveOne, Category::kP1Count, Dimension::kCount, "remove_one"},
    {Probe::kAddSuperset, Category::kP1Count, Dimension::kMonotone, "add_superset"},
    {Probe::kPerturbOne, Category::kP1Translate, Dimension::kGeometry, "perturb_one"},
    {Probe::kTranslateAll, Category::kP1Translate, Dimension::kHTranslate, "translate_all"},
    {Probe::kCollideInPattern, Category::kP2Actions, Dimension::kExclusive, "collide_in_pattern"},
    {Probe::kOpponentElsewhere, Category::kP2Actions, Dimension::kOpponentFree, "opponent_elsewhere"},
    {Probe::kOpponentOutside, Category::kP2Actions, Dimension::kOpponentOutside, "opponent_outside"},
    {Probe::kFillerBeneath, Category::kEitherActions, Dimension::kVTranslate, "filler_beneath"},
    {Probe::kFillerElsewhere, Category::kEitherActions, Dimension::kContextFree, "filler_elsewhere"},
    {Probe::kFillerInterposed, Category::kEitherActions, Dimension::kRigid, "filler_interposed"},
};

const ProbeInfo& info(Probe p) { return kProbes[static_cast<int>(p)]; }

// Most specific value, used when a dimension is never settled.
bool literal_default(Dimension d) {
  switch (d) {
    case Dimension::kCount:
    case Dimension::kGeometry:
    case Dimension::kExclusive:
    case Dimension::kRigid:
      return true;
    default:
      return false;
  }
}

bool settled(const Hypothesis& h, Dimension d) { return h.resolved.count(d) || h.moot.count(d); }

bool value_or(const Hypothesis& h, Dimension d, bool unsettled) {
  if (auto it = h.resolved.find(d); it != h.resolved.end()) return it->second;
  if (h.moot.count(d)) return literal_default(d);
  return unsettled;
}

// The rule as currently believed, with unsettled flags at their most general
// value, optionally forcing one dimension.
WinRule working_rule(const Hypothesis& h, std::optional<std::pair<Dimension, bool>> force = {}) {
  auto val = [&](Dimension d) {
    if (force && force->first == d) return force->second;
    return value_or(h, d, true);
  };
  WinRule r;
  r.cells = h.pattern;
  r.anchor0 = h.anchor0;
  r.h_translate = val(Dimension::kHTranslate);
  r.v_translate = val(Dimension::kVTranslate);
  r.exclusive = val(Dimension::kExclusive);
  r.monotone = val(Dimension::kMonotone);
  r.rigid = val(Dimension::kRigid);
  r.opponent_free = val(Dimension::kOpponentFree) && val(Dimension::kOpponentOutside);
  r.context_free = val(Dimension::kContextFree);
  return r;
}

std::vector<int> pattern_columns(const Hypothesis& h) {
  std::vector<int> cols;
  for (const CellCoord& c : h.pattern) cols.push_back(h.anchor0.col + c.col);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

bool is_pattern_column(const Hypothesis& h, int col) {
  const auto cols = pattern_columns(h);
  return std::find(cols.begin(), cols.end(), col) != cols.end();
}

// Indices of the winner's known moves, last first.
std::vector<int> winner_moves_last_first(const Hypothesis& h) {
  std::vector<int> out;
  for (int i = static_cast<int>(h.demo_branch.moves.size()) - 1; i >= 0; --i) {
    const Move& m = h.demo_branch.moves[i];
    if (m.player == h.winner && m.known()) out.push_back(i);
  }
  return out;
}

int size_of(const Branch& b) { return static_cast<int>(b.moves.size()); }

Branch append(const Branch& b, int col, Player p) { return add_action(b, col, p, size_of(b)); }

// Candidate builders. Each returns boards in preference order; a builder
// step that violates the board's capacity just drops that candidate.
using Candidates = std::vector<Branch>;

void try_add(Candidates& out, const std::function<Branch()>& make) {
  try {
    out.push_back(make());
  } catch (const Error&) {
  }
}

Candidates remove_one(const Hypothesis& h) {
  Candidates out;
  if (h.pattern.size() < 2) return out;
  const auto moves = winner_moves_last_first(h);
  const int col = *h.demo_branch.moves[moves.front()].action;
  try_add(out, [&] { return remove_action(h.demo_branch, col, h.winner); });
  return out;
}

Candidates add_superset(const Hypothesis& h) {
  const auto pcols = pattern_columns(h);
  const int lo = pcols.front();
  const int hi = pcols.back();
  std::vector<int> outside;
  for (int c = 0; c < kCols; ++c) {
    if (!is_pattern_column(h, c)) outside.push_back(c);
  }
  auto dist = [&](int c) { return c < lo ? lo - c : c - hi; };
  std::stable_sort(outside.begin(), outside.end(), [&](int a, int b) { return dist(a) > dist(b); });
  Candidates out;
  for (int c : outside) try_add(out, [&] { return append(h.demo_branch, c, h.winner); });
  for (int c : pcols) try_add(out, [&] { return append(h.demo_branch, c, h.winner); });
  return out;
}

Candidates perturb_one(const Hypothesis& h) {
  Candidates out;
  const int from = *h.demo_branch.moves[winner_moves_last_first(h).front()].action;
  Branch removed;
  try {
    removed = remove_action(h.demo_branch, from, h.winner);
  } catch (const Error&) {
    return out;
  }
  const int start = (h.anchor0.col + 3) % kCols;
  for (int k = 0; k < kCols; ++k) {
    const int t = (start + k) % kCols;
    if (t == from) continue;
    try_add(out, [&] { return append(removed, t, h.winner); });
  }
  return out;
}

Candidates translate_all(const Hypothesis& h) {
  Candidates out;
  for (int step = 1; step < kCols; ++step) {
    for (int offset : {step, -step}) {
      try_add(out, [&] {
        Branch b = translate(h.demo_branch, h.winner, offset);
        b = translate(b, opponent(h.winner), offset);
        to_board(b);
        return b;
      });
    }
  }
  return out;
}

// Same cells as the demo, with one winner chip recoloured to the opponent.
Candidates collide_in_pattern(const Hypothesis& h) {
  Candidates out;
  const Player opp = opponent(h.winner);
  for (int idx : winner_moves_last_first(h)) {
    const int col = *h.demo_branch.moves[idx].action;
    Branch prefix = h.demo_branch;
    prefix.moves.resize(idx + 1);
    const int row = to_board(prefix).height(col) - 1;
    auto rows = h.demo_board.to_rows();
    rows[row][col] = static_cast<int>(opp);
    const Board target = Board::from_rows(rows);
    try {
      const Branch removed = remove_action(h.demo_branch, col, h.winner);
      for (int pos = 0; pos <= size_of(removed); ++pos) {
        try {
          Branch b = add_action(removed, col, opp, pos);
          if (to_board(b) == target) {
            out.push_back(b);
            break;
          }
        } catch (const Error&) {
        }
      }
    } catch (const Error&) {
    }
  }
  return out;
}

Candidates opponent_elsewhere(const Hypothesis& h) {
  Candidates out;
  auto pcols = pattern_columns(h);
  for (auto it = pcols.rbegin(); it != pcols.rend(); ++it) {
    const int c = *it;
    try_add(out, [&] { return append(h.demo_branch, c, opponent(h.winner)); });
  }
  return out;
}

Candidates opponent_outside(const Hypothesis& h) {
  Candidates out;
  Branch b = h.demo_branch;
  bool any = false;
  for (int c = 0; c < kCols; ++c) {
    if (is_pattern_column(h, c) || h.demo_board.height(c) >= kRows) continue;
    b = append(b, c, opponent(h.winner));
    any = true;
  }
  if (any) out.push_back(b);
  return out;
}

// The demo with every pattern column moved by `dy` rows: raised columns get
// an opponent chip at the bottom, lowered columns lose their bottom chip.
std::optional<Board> shifted_demo(const Hypothesis& h, int dy) {
  const Player opp = opponent(h.winner);
  auto rows = h.demo_board.to_rows();
  std::array<std::array<int, kCols>, kRows> out = rows;
  for (int c : pattern_columns(h)) {
    const int height = h.demo_board.height(c);
    if (height + dy > kRows || (dy < 0 && rows[0][c] != static_cast<int>(opp))) return std::nullopt;
    for (int r = 0; r < kRows; ++r) {
      const int src = r - dy;
      out[r][c] = src >= 0 && src < kRows ? rows[src][c] : static_cast<int>(opp);
      if (r >= height + dy) out[r][c] = 0;
    }
  }
  return Board::from_rows(out);
}

Candidates filler_beneath(const Hypothesis& h) {
  Candidates out;
  const Player opp = opponent(h.winner);
  const auto pcols = pattern_columns(h);
  auto keep_if = [&](const Branch& b, int dy) {
    const auto want = shifted_demo(h, dy);
    if (want && to_board(b) == *want) out.push_back(b);
  };
  // Raise every pattern column by one opponent chip slid in underneath.
  try {
    Branch b = h.demo_branch;
    for (int c : pcols) {
      int first = 0;
      while (!(b.moves[first].action == c)) ++first;
      b = add_action(b, c, opp, first);
    }
    keep_if(b, 1);
  } catch (const Error&) {
  }
  // Without headroom, lower the pattern by dropping one support chip.
  try {
    Branch b = h.demo_branch;
    for (int c : pcols) b = remove_action(b, c, opp);
    keep_if(b, -1);
  } catch (const Error&) {
  }
  return out;
}

Candidates filler_elsewhere(const Hypothesis& h) {
  Candidates out;
  const Player opp = opponent(h.winner);
  const auto pcols = pattern_columns(h);
  int far = -1;
  for (int c = 0; c < kCols; ++c) {
    if (is_pattern_column(h, c)) continue;
    const int d = c < pcols.front() ? pcols.front() - c : c - pcols.back();
    const int best = far < 0 ? -1 : (far < pcols.front() ? pcols.front() - far : far - pcols.back());
    if (d > best) far = c;
  }
  try_add(out, [&] {
    Branch b = h.demo_branch;
    for (int c : pcols) b = append(b, c, opp);
    if (far >= 0) {
      b = append(b, far, h.winner);
      b = append(b, far, opp);
    }
    return b;
  });
  try_add(out, [&] {
    Branch b = h.demo_branch;
    for (int c : pcols) b = append(b, c, h.winner);
    return b;
  });
  try_add(out, [&] {
    Branch b = h.demo_branch;
    for (int c : pcols) b = append(b, c, opp);
    return b;
  });
  return out;
}

Candidates filler_interposed(const Hypothesis& h) {
  Candidates out;
  for (int idx : winner_moves_last_first(h)) {
    const int col = *h.demo_branch.moves[idx].action;
    try_add(out, [&] { return add_action(h.demo_branch, col, opponent(h.winner), idx); });
  }
  return out;
}

Candidates candidates_for(const Hypothesis& h, Probe p) {
  switch (p) {
    case Probe::kRemoveOne: return remove_one(h);
    case Probe::kAddSuperset: return add_superset(h);
    case Probe::kPerturbOne: return perturb_one(h);
    case Probe::kTranslateAll: return translate_all(h);
    case Probe::kCollideInPattern: return collide_in_pattern(h);
    case Probe::kOpponentElsewhere: return opponent_elsewhere(h);
    case Probe::kOpponentOutside: return opponent_outside(h);
    case Probe::kFillerBeneath: return filler_beneath(h);
    case Probe::kFillerElsewhere: return filler_elsewhere(h);
    case Probe::kFillerInterposed: return filler_interposed(h);
  }
  return {};
}

// A question is only worth asking if its answer would change the rule.
bool informative(const Hypothesis& h, Probe p, const Board& board) {
  if (board == h.demo_board) return false;
  const Dimension d = dimension_of(p);
  switch (d) {
    case Dimension::kCount:
      return h.pattern.size() >= 2;
    case Dimension::kGeometry:
      return !detect(working_rule(h), board, h.winner);
    case Dimension::kOpponentOutside: {
      bool outside = false;
      for (const CellCoord& c : cells_of(board, opponent(h.winner))) {
        outside = outside || !is_pattern_column(h, c.col);
      }
      return outside && detect(working_rule(h), board, h.winner);
    }
    default:
      return detect(working_rule(h, std::pair{d, true}), board, h.winner) !=
             detect(working_rule(h, std::pair{d, false}), board, h.winner);
  }
}

bool p1_settled(const Hypothesis& h) {
  for (Dimension d : {Dimension::kCount, Dimension::kMonotone, Dimension::kGeometry,
                      Dimension::kHTranslate}) {
    if (!settled(h, d)) return false;
  }
  return true;
}

void resolve(Hypothesis& h, Dimension d, bool value) { h.resolved.emplace(d, value); }

}  // namespace

std::string_view category_name(Category c) {
  switch (c) {
    case Category::kP1Count: return "p1_count";
    case Category::kP1Translate: return "p1_translate";
    case Category::kP2Actions: return "p2_actions";
    case Category::kEitherActions: return "either_actions";
  }
  return "";
}

Category category_from_name(std::string_view name) {
  for (Category c : all_categories()) {
    if (category_name(c) == name) return c;
  }
  throw Error(ErrorCode::kParseError, "unknown question category '" + std::string(name) + "'");
}

std::string_view probe_name(Probe p) { return info(p).name; }

std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::kCount: return "count";
    case Dimension::kMonotone: return "monotone";
    case Dimension::kGeometry: return "geometry";
    case Dimension::kHTranslate: return "h_translate";
    case Dimension::kExclusive: return "exclusive";
    case Dimension::kOpponentFree: return "opponent_free";
    case Dimension::kOpponentOutside: return "opponent_outside";
    case Dimension::kVTranslate: return "v_translate";
    case Dimension::kContextFree: return "context_free";
    case Dimension::kRigid: return "rigid";
  }
  return "";
}

Category category_of(Probe p) { return info(p).category; }
Dimension dimension_of(Probe p) { return info(p).dimension; }

const std::vector<Probe>& all_probes() {
  static const std::vector<Probe> probes = [] {
    std::vector<Probe> v;
    for (const ProbeInfo& i : kProbes) v.push_back(i.probe);
    return v;
  }();
  return probes;
}

const std::vector<Category>& all_categories() {
  static const std::vector<Category> cats{Category::kP1Count, Category::kP1Translate,
                                          Category::kP2Actions, Category::kEitherActions};
  return cats;
}

GameSkeleton init_session(int num_players_answer, bool alternating_answer) {
  if (num_players_answer != 2 || !alternating_answer) {
    throw Error(ErrorCode::kUnsupportedSkeleton,
                "only two-player alternating games are supported (got " +
                    std::to_string(num_players_answer) + " players, alternating=" +
                    (alternating_answer ? "true" : "false") + ")");
  }
  return GameSkeleton{};
}

Hypothesis ingest_demonstration(const GameSkeleton& skeleton, const Board& board, Player winner,
                                int budget) {
  if (skeleton.num_players != 2 || !skeleton.alternating) {
    throw Error(ErrorCode::kUnsupportedSkeleton, "only two-player alternating games are supported");
  }
  Hypothesis h;
  h.skeleton = skeleton;
  h.skeleton.first_player = winner;
  h.winner = winner;
  h.demo_branch = branch_from_demo(board, winner);
  h.demo_board = board;
  h.pattern = cells_of(board, winner);
  h.anchor0 = normalize(h.pattern);
  h.budget = budget;
  return h;
}

std::optional<Question> next_question(Hypothesis& h, const AblationConfig& config) {
  if (h.pending) return h.pending;
  for (Probe p : all_probes()) {
    const Category cat = category_of(p);
    const Dimension d = dimension_of(p);
    if (!config.allows(cat) || settled(h, d)) continue;
    if (p == Probe::kOpponentOutside && !h.clarifier_scheduled) continue;
    // Context questions presuppose a confirmed winner pattern.
    if ((cat == Category::kP2Actions || cat == Category::kEitherActions) && !p1_settled(h)) break;

    std::optional<Branch> chosen;
    for (const Branch& b : candidates_for(h, p)) {
      if (informative(h, p, to_board(b))) {
        chosen = b;
        break;
      }
    }
    if (!chosen) {
      h.moot.insert(d);
      continue;
    }
    if (h.questions_asked >= h.budget) {
      throw Error(ErrorCode::kBudgetExhausted,
                  "all " + std::to_string(h.budget) + " questions used with " +
                      std::string(dimension_name(d)) + " unresolved");
    }
    Question q;
    q.id = h.questions_asked + 1;
    q.probe = p;
    q.category = cat;
    q.dimension = d;
    q.branch = *chosen;
    q.hypothetical = to_board(*chosen);
    q.winner = h.winner;
    q.prompt = "Is this a win for " + std::string(player_color(h.winner)) + "?";
    h.pending = q;
    return q;
  }
  return std::nullopt;
}

void ingest_answer(Hypothesis& h, const Question& q, Answer a) {
  if (!h.pending || q.id != h.questions_asked + 1 || q.id != h.pending->id ||
      q.probe != h.pending->probe || !(q.hypothetical == h.pending->hypothetical)) {
    throw Error(ErrorCode::kStaleQuestion, "question " + std::to_string(q.id) +
                                               " is not the outstanding question");
  }
  h.pending.reset();
  ++h.questions_asked;
  const bool yes = a == Answer::kYes;
  switch (q.probe) {
    case Probe::kRemoveOne:
      if (yes) {
        // The removed chip was not needed: continue from the smaller pattern.
        h.demo_branch = q.branch;
        h.demo_board = q.hypothetical;
        h.pattern = cells_of(h.demo_board, h.winner);
        h.anchor0 = normalize(h.pattern);
      } else {
        resolve(h, Dimension::kCount, true);
      }
      break;
    case Probe::kAddSuperset:
      resolve(h, Dimension::kMonotone, yes);
      break;
    case Probe::kPerturbOne:
      resolve(h, Dimension::kGeometry, !yes);
      if (yes) {
        resolve(h, Dimension::kRigid, false);
        resolve(h, Dimension::kHTranslate, true);
      }
      break;
    case Probe::kTranslateAll:
      resolve(h, Dimension::kHTranslate, yes);
      break;
    case Probe::kCollideInPattern:
      resolve(h, Dimension::kExclusive, !yes);
      if (yes) {
        resolve(h, Dimension::kOpponentFree, true);
        resolve(h, Dimension::kOpponentOutside, true);
      } else {
        h.clarifier_scheduled = true;
      }
      break;
    case Probe::kOpponentElsewhere:
      resolve(h, Dimension::kOpponentFree, yes);
      break;
    case Probe::kOpponentOutside:
      resolve(h, Dimension::kOpponentOutside, yes);
      break;
    case Probe::kFillerBeneath:
      resolve(h, Dimension::kVTranslate, yes);
      break;
    case Probe::kFillerElsewhere:
      resolve(h, Dimension::kContextFree, yes);
      break;
    case Probe::kFillerInterposed:
      resolve(h, Dimension::kRigid, !yes);
      break;
  }
}

WinRule finalize(const Hypothesis& h) {
  auto get = [&](Dimension d) {
    auto it = h.resolved.find(d);
    return it != h.resolved.end() ? it->second : literal_default(d);
  };
  WinRule r;
  r.cells = h.pattern;
  r.anchor0 = h.anchor0;
  r.h_translate = get(Dimension::kHTranslate);
  r.v_translate = get(Dimension::kVTranslate);
  r.exclusive = get(Dimension::kExclusive);
  r.monotone = get(Dimension::kMonotone);
  r.rigid = get(Dimension::kRigid);
  r.opponent_free = get(Dimension::kOpponentFree) && get(Dimension::kOpponentOutside);
  r.context_free = get(Dimension::kContextFree);
  return r;
}

}  // namespace c4learn

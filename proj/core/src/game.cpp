// Copyright 2026 The offnash Authors
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

#include "offnash/game.hpp"

#include <algorithm>

namespace offnash {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::pp: return "pp";
    case Regime::mp: return "mp";
    case Regime::pm: return "pm";
    case Regime::mm: return "mm";
  }
  throw input_error("unknown regime");
}

Regime regime_from_name(const std::string& name) {
  if (name == "pp") return Regime::pp;
  if (name == "mp") return Regime::mp;
  if (name == "pm") return Regime::pm;
  if (name == "mm") return Regime::mm;
  throw input_error("unknown regime: " + name);
}

namespace {

std::vector<std::string> default_labels(int n, int player) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i < 26) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)) +
                       std::to_string(player));
    } else {
      labels.push_back((player == 1 ? "r" : "c") + std::to_string(i));
    }
  }
  return labels;
}

}  // namespace

StageGame make_game(Matrix u1, Matrix u2, std::vector<std::string> row_labels,
                    std::vector<std::string> col_labels) {
  const int rows = static_cast<int>(u1.size());
  if (rows < 1) throw input_error("game needs at least one row");
  const int cols = static_cast<int>(u1[0].size());
  if (cols < 1) throw input_error("game needs at least one column");
  auto check = [&](const Matrix& u, const char* name) {
    if (static_cast<int>(u.size()) != rows)
      throw input_error(std::string(name) + ": row count mismatch");
    for (const auto& row : u)
      if (static_cast<int>(row.size()) != cols)
        throw input_error(std::string(name) + ": column count mismatch");
  };
  check(u1, "u1");
  check(u2, "u2");
  if (row_labels.empty()) row_labels = default_labels(rows, 1);
  if (col_labels.empty()) col_labels = default_labels(cols, 2);
  if (static_cast<int>(row_labels.size()) != rows ||
      static_cast<int>(col_labels.size()) != cols)
    throw input_error("label count does not match matrix dimensions");
  return StageGame{rows, cols, std::move(u1), std::move(u2),
                   std::move(row_labels), std::move(col_labels)};
}

std::vector<int> MixedStrategy::support() const {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(probs.size()); ++i)
    if (probs[i] > 0) s.push_back(i);
  return s;
}

bool MixedStrategy::is_pure() const {
  int positive = 0;
  for (const Rational& p : probs)
    if (p > 0) ++positive;
  return positive == 1;
}

int MixedStrategy::pure_index() const {
  for (int i = 0; i < static_cast<int>(probs.size()); ++i)
    if (probs[i] > 0) return i;
  throw input_error("pure_index on an empty strategy");
}

MixedStrategy MixedStrategy::pure(int size, int index) {
  if (index < 0 || index >= size) throw input_error("pure index out of range");
  MixedStrategy s;
  s.probs.assign(size, Rational(0));
  s.probs[index] = 1;
  return s;
}

void validate_strategy(const MixedStrategy& s, int size) {
  if (static_cast<int>(s.probs.size()) != size)
    throw input_error("strategy length does not match action count");
  Rational sum = 0;
  for (const Rational& p : s.probs) {
    if (p < 0) throw input_error("strategy has a negative probability");
    sum += p;
  }
  if (sum != 1) throw input_error("strategy probabilities do not sum to 1");
}

Profile pure_profile(const StageGame& g, int row, int col) {
  return Profile{MixedStrategy::pure(g.rows, row),
                 MixedStrategy::pure(g.cols, col)};
}

namespace {

void validate_profile(const StageGame& g, const Profile& p) {
  validate_strategy(p.s1, g.rows);
  validate_strategy(p.s2, g.cols);
}

const Matrix& payoffs_of(const StageGame& g, int who) {
  if (who == 1) return g.u1;
  if (who == 2) return g.u2;
  throw input_error("player index must be 1 or 2");
}

}  // namespace

Rational expected_payoff(const StageGame& g, int who, const Profile& p) {
  validate_profile(g, p);
  const Matrix& u = payoffs_of(g, who);
  Rational total = 0;
  for (int i = 0; i < g.rows; ++i) {
    if (p.s1.probs[i] == 0) continue;
    for (int j = 0; j < g.cols; ++j) {
      if (p.s2.probs[j] == 0) continue;
      total += p.s1.probs[i] * p.s2.probs[j] * u[i][j];
    }
  }
  return total;
}

Rational payoff_against(const StageGame& g, int who, int action,
                        const Profile& p) {
  validate_profile(g, p);
  const Matrix& u = payoffs_of(g, who);
  Rational total = 0;
  if (who == 1) {
    if (action < 0 || action >= g.rows) throw input_error("row out of range");
    for (int j = 0; j < g.cols; ++j)
      if (p.s2.probs[j] != 0) total += p.s2.probs[j] * u[action][j];
  } else {
    if (action < 0 || action >= g.cols) throw input_error("column out of range");
    for (int i = 0; i < g.rows; ++i)
      if (p.s1.probs[i] != 0) total += p.s1.probs[i] * u[i][action];
  }
  return total;
}

bool is_best_response(const StageGame& g, int who, const Profile& p) {
  const Rational own = expected_payoff(g, who, p);
  const int actions = who == 1 ? g.rows : g.cols;
  for (int a = 0; a < actions; ++a)
    if (payoff_against(g, who, a, p) > own) return false;
  return true;
}

bool is_stage_nash(const StageGame& g, const Profile& p, Regime regime) {
  validate_profile(g, p);
  const bool p1_pure_only = regime == Regime::pp || regime == Regime::pm;
  const bool p2_pure_only = regime == Regime::pp || regime == Regime::mp;
  if (p1_pure_only && !p.s1.is_pure())
    throw input_error("regime requires a pure strategy for player 1");
  if (p2_pure_only && !p.s2.is_pure())
    throw input_error("regime requires a pure strategy for player 2");
  return is_best_response(g, 1, p) && is_best_response(g, 2, p);
}

StageGame transpose(const StageGame& g) {
  Matrix u1(g.cols, std::vector<Rational>(g.rows));
  Matrix u2(g.cols, std::vector<Rational>(g.rows));
  for (int i = 0; i < g.rows; ++i) {
    for (int j = 0; j < g.cols; ++j) {
      u1[j][i] = g.u2[i][j];
      u2[j][i] = g.u1[i][j];
    }
  }
  return make_game(std::move(u1), std::move(u2), g.col_labels, g.row_labels);
}

}  // namespace offnash

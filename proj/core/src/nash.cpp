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

#include "offnash/nash.hpp"

#include <algorithm>
#include <set>

#include "offnash/linalg.hpp"

namespace offnash::nash {

bool PureNashSet::contains(int row, int col) const {
  return std::find(profiles.begin(), profiles.end(),
                   std::make_pair(row, col)) != profiles.end();
}

PureNashSet pure_nash(const StageGame& g) {
  PureNashSet result;
  for (int i = 0; i < g.rows; ++i) {
    for (int j = 0; j < g.cols; ++j) {
      if (is_stage_nash(g, pure_profile(g, i, j), Regime::pp))
        result.profiles.emplace_back(i, j);
    }
  }
  return result;
}

namespace {

std::vector<int> argmax_rows(const StageGame& g, int col) {
  Rational best = g.u1[0][col];
  for (int i = 1; i < g.rows; ++i) best = std::max(best, g.u1[i][col]);
  std::vector<int> rows;
  for (int i = 0; i < g.rows; ++i)
    if (g.u1[i][col] == best) rows.push_back(i);
  return rows;
}

}  // namespace

lp::LinearProgram best_response_region(const StageGame& g, int col,
                                       const std::vector<int>& allowed_rows) {
  lp::LinearProgram prog;
  prog.objective.assign(g.rows, Rational(0));
  prog.nonneg.assign(g.rows, true);
  lp::Constraint sum;
  sum.row.assign(g.rows, Rational(1));
  sum.relation = lp::Relation::eq;
  sum.rhs = 1;
  prog.constraints.push_back(std::move(sum));
  for (int j = 0; j < g.cols; ++j) {
    if (j == col) continue;
    lp::Constraint c;
    c.row.resize(g.rows);
    for (int i = 0; i < g.rows; ++i) c.row[i] = g.u2[i][col] - g.u2[i][j];
    c.relation = lp::Relation::ge;
    c.rhs = 0;
    prog.constraints.push_back(std::move(c));
  }
  if (!allowed_rows.empty()) {
    for (int i = 0; i < g.rows; ++i) {
      if (std::find(allowed_rows.begin(), allowed_rows.end(), i) !=
          allowed_rows.end())
        continue;
      lp::Constraint zero;
      zero.row.assign(g.rows, Rational(0));
      zero.row[i] = 1;
      zero.relation = lp::Relation::eq;
      zero.rhs = 0;
      prog.constraints.push_back(std::move(zero));
    }
  }
  return prog;
}

std::vector<MixedPureComponent> mixed_pure_components(const StageGame& g) {
  std::vector<MixedPureComponent> components;
  components.reserve(g.cols);
  for (int j = 0; j < g.cols; ++j) {
    MixedPureComponent c;
    c.col = j;
    c.br_rows = argmax_rows(g, j);
    c.v1_value = g.u1[c.br_rows.front()][j];

    lp::LinearProgram region = best_response_region(g, j, c.br_rows);
    std::vector<Rational> u2_form(g.rows);
    for (int i = 0; i < g.rows; ++i) u2_form[i] = g.u2[i][j];
    lp::Bounds bounds = lp::max_and_min(region, u2_form);
    c.nonempty = bounds.feasible;
    if (c.nonempty) {
      c.u2_min = bounds.min;
      c.u2_max = bounds.max;
      MixedStrategy lo, hi;
      lo.probs = bounds.arg_min;
      hi.probs = bounds.arg_max;
      c.u2_min_point = std::move(lo);
      c.u2_max_point = std::move(hi);
    }
    for (int jp = 0; jp < g.cols; ++jp) {
      if (jp == j) continue;
      std::vector<Rational> row(c.br_rows.size());
      for (size_t k = 0; k < c.br_rows.size(); ++k)
        row[k] = g.u2[c.br_rows[k]][j] - g.u2[c.br_rows[k]][jp];
      c.polytope_ge.emplace_back(std::move(row), Rational(0));
    }
    components.push_back(std::move(c));
  }
  return components;
}

bool component_contains(const StageGame& g, const MixedPureComponent& c,
                        const MixedStrategy& s1) {
  validate_strategy(s1, g.rows);
  for (int i = 0; i < g.rows; ++i) {
    if (s1.probs[i] == 0) continue;
    if (std::find(c.br_rows.begin(), c.br_rows.end(), i) == c.br_rows.end())
      return false;
  }
  for (int jp = 0; jp < g.cols; ++jp) {
    Rational gap = 0;
    for (int i = 0; i < g.rows; ++i)
      if (s1.probs[i] != 0) gap += s1.probs[i] * (g.u2[i][c.col] - g.u2[i][jp]);
    if (gap < 0) return false;
  }
  return true;
}

namespace {

// Vertices of {(x, v) : x >= 0, sum x = 1, (U^T x)_j <= v for all j}
// by exhaustive enumeration of tight-constraint subsets. dim = n + 1;
// the sum constraint is always tight, so we pick dim - 1 more from the
// n nonnegativity and k response constraints.
std::vector<std::vector<Rational>> polytope_vertices(
    const std::vector<std::vector<Rational>>& response_rows, int n) {
  const int k = static_cast<int>(response_rows.size());
  const int dim = n + 1;
  const int total = n + k;
  std::vector<std::vector<Rational>> vertices;
  std::set<std::vector<Rational>> seen;

  std::vector<int> pick;
  auto feasible = [&](const std::vector<Rational>& p) {
    for (int i = 0; i < n; ++i)
      if (p[i] < 0) return false;
    for (int c = 0; c < k; ++c) {
      Rational lhs = 0;
      for (int i = 0; i < n; ++i) lhs += response_rows[c][i] * p[i];
      if (lhs > p[n]) return false;
    }
    return true;
  };
  auto try_basis = [&]() {
    // rows: sum(x) = 1 plus the picked tight constraints
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    {
      std::vector<Rational> row(dim, Rational(0));
      for (int i = 0; i < n; ++i) row[i] = 1;
      a.push_back(std::move(row));
      b.push_back(1);
    }
    for (int idx : pick) {
      std::vector<Rational> row(dim, Rational(0));
      if (idx < n) {
        row[idx] = 1;
        b.push_back(0);
      } else {
        for (int i = 0; i < n; ++i) row[i] = response_rows[idx - n][i];
        row[n] = -1;
        b.push_back(0);
      }
      a.push_back(std::move(row));
    }
    auto sol = solve_square(std::move(a), std::move(b));
    if (!sol || !feasible(*sol)) return;
    if (seen.insert(*sol).second) vertices.push_back(*sol);
  };
  // choose dim - 1 of the `total` inequality constraints
  std::vector<int> idx(dim - 1);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == dim - 1) {
      pick.assign(idx.begin(), idx.end());
      try_basis();
      return;
    }
    for (int i = start; i <= total - (dim - 1 - depth); ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  if (dim - 1 <= total) rec(rec, 0, 0);
  return vertices;
}

}  // namespace

std::vector<ExtremeEquilibrium> extreme_equilibria(const StageGame& g) {
  // Player 1's polytope constrains x by player 2's payoffs; vertex
  // coordinates are (x, v2). Symmetrically for player 2.
  std::vector<std::vector<Rational>> rows1(g.cols,
                                           std::vector<Rational>(g.rows));
  for (int j = 0; j < g.cols; ++j)
    for (int i = 0; i < g.rows; ++i) rows1[j][i] = g.u2[i][j];
  std::vector<std::vector<Rational>> rows2(g.rows,
                                           std::vector<Rational>(g.cols));
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) rows2[i][j] = g.u1[i][j];

  auto xs = polytope_vertices(rows1, g.rows);
  auto ys = polytope_vertices(rows2, g.cols);

  std::vector<ExtremeEquilibrium> result;
  for (const auto& xv : xs) {
    MixedStrategy s1;
    s1.probs.assign(xv.begin(), xv.begin() + g.rows);
    for (const auto& yv : ys) {
      MixedStrategy s2;
      s2.probs.assign(yv.begin(), yv.begin() + g.cols);
      Profile p{s1, s2};
      if (!is_best_response(g, 1, p) || !is_best_response(g, 2, p)) continue;
      ExtremeEquilibrium eq;
      eq.s1 = s1;
      eq.s2 = s2;
      eq.pay1 = expected_payoff(g, 1, p);
      eq.pay2 = expected_payoff(g, 2, p);
      result.push_back(std::move(eq));
    }
  }
  std::sort(result.begin(), result.end(),
            [](const ExtremeEquilibrium& a, const ExtremeEquilibrium& b) {
              if (a.s1 != b.s1) return a.s1 < b.s1;
              return a.s2 < b.s2;
            });
  result.erase(std::unique(result.begin(), result.end(),
                           [](const ExtremeEquilibrium& a,
                              const ExtremeEquilibrium& b) {
                             return a.s1 == b.s1 && a.s2 == b.s2;
                           }),
               result.end());
  return result;
}

namespace {

void finalize(VSummary& v) {
  auto dedup = [](std::vector<Rational>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  };
  dedup(v.v1_values);
  dedup(v.v2_values);
  v.empty = v.v1_values.empty();
  if (!v.empty) {
    v.v1_min = v.v1_values.front();
    v.v1_max = v.v1_values.back();
    v.v2_min = v.v2_values.front();
    v.v2_max = v.v2_values.back();
    v.v1_unique = v.v1_values.size() == 1;
    v.v2_unique = v.v2_values.size() == 1;
  }
}

VSummary v_summary_mp(const StageGame& g) {
  VSummary v;
  v.regime = Regime::mp;
  for (const MixedPureComponent& c : mixed_pure_components(g)) {
    if (!c.nonempty) continue;
    v.v1_values.push_back(c.v1_value);
    v.v2_values.push_back(c.u2_min);
    v.v2_values.push_back(c.u2_max);
  }
  finalize(v);
  return v;
}

}  // namespace

VSummary v_summary(const StageGame& g, Regime regime) {
  VSummary v;
  v.regime = regime;
  switch (regime) {
    case Regime::pp: {
      for (auto [i, j] : pure_nash(g).profiles) {
        v.v1_values.push_back(g.u1[i][j]);
        v.v2_values.push_back(g.u2[i][j]);
      }
      finalize(v);
      return v;
    }
    case Regime::mp:
      return v_summary_mp(g);
    case Regime::pm: {
      // transpose the game, apply mp logic, swap the players back
      VSummary t = v_summary_mp(transpose(g));
      v = t;
      v.regime = Regime::pm;
      std::swap(v.v1_values, v.v2_values);
      std::swap(v.v1_unique, v.v2_unique);
      std::swap(v.v1_min, v.v2_min);
      std::swap(v.v1_max, v.v2_max);
      return v;
    }
    case Regime::mm: {
      for (const ExtremeEquilibrium& eq : extreme_equilibria(g)) {
        v.v1_values.push_back(eq.pay1);
        v.v2_values.push_back(eq.pay2);
      }
      finalize(v);
      if (v.empty)
        throw std::logic_error("mixed-mixed equilibrium set cannot be empty");
      return v;
    }
  }
  throw input_error("unknown regime");
}

}  // namespace offnash::nash

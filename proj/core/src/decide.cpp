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

#include "offnash/decide.hpp"

#include <algorithm>
#include <stdexcept>

namespace offnash::decide {

DifferenceSet make_difference_set(const std::vector<Rational>& v1_values) {
  DifferenceSet d;
  for (const Rational& a : v1_values)
    for (const Rational& b : v1_values) d.values.push_back(a - b);
  std::sort(d.values.begin(), d.values.end());
  d.values.erase(std::unique(d.values.begin(), d.values.end()), d.values.end());
  std::vector<Rational> nonzero;
  for (const Rational& v : d.values)
    if (v > 0) nonzero.push_back(v);
  if (!nonzero.empty()) d.gcd = rational_gcd(nonzero);
  return d;
}

bool subset_sum_reachable(const Rational& x, const DifferenceSet& d) {
  if (!d.gcd) return x == 0;
  return is_integer(x / *d.gcd);
}

bool exist_off(const StageGame& g) {
  for (int j = 0; j < g.cols; ++j)
    for (int i = 1; i < g.rows; ++i)
      if (g.u1[i][j] != g.u1[0][j]) return true;
  for (int i = 0; i < g.rows; ++i)
    for (int j = 1; j < g.cols; ++j)
      if (g.u2[i][j] != g.u2[i][0]) return true;
  return false;
}

namespace {

Rational col_max_u1(const StageGame& g, int col) {
  Rational best = g.u1[0][col];
  for (int i = 1; i < g.rows; ++i) best = std::max(best, g.u1[i][col]);
  return best;
}

Rational row_max_u2(const StageGame& g, int row) {
  Rational best = g.u2[row][0];
  for (int j = 1; j < g.cols; ++j) best = std::max(best, g.u2[row][j]);
  return best;
}

ColThreat flip(const RowThreat& t) {
  return ColThreat{t.col, t.row, t.better_row};
}

}  // namespace

std::optional<OffProfile> find_pure_off_profile(const StageGame& g) {
  nash::PureNashSet ne = nash::pure_nash(g);
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j)
      if (!ne.contains(i, j)) return OffProfile{i, j};
  return std::nullopt;
}

// Column-major so the earliest column wins.
std::optional<RowThreat> find_pure_row_threat(const StageGame& g) {
  for (int j = 0; j < g.cols; ++j) {
    Rational cmax = col_max_u1(g, j);
    for (int i = 0; i < g.rows; ++i) {
      if (g.u1[i][j] >= cmax) continue;
      if (g.u2[i][j] != row_max_u2(g, i)) continue;  // j not a BR to i
      for (int better = 0; better < g.rows; ++better) {
        if (g.u1[better][j] == cmax)
          return RowThreat{i, better, j};
      }
    }
  }
  return std::nullopt;
}

std::optional<MixedRowThreat> exist_off_2best(const StageGame& g) {
  for (int j = 0; j < g.cols; ++j) {
    Rational cmax = col_max_u1(g, j);
    for (int i = 0; i < g.rows; ++i) {
      if (g.u1[i][j] >= cmax) continue;
      lp::LinearProgram prog = nash::best_response_region(g, j);
      prog.objective.assign(g.rows, Rational(0));
      prog.objective[i] = 1;
      lp::LpOutcome out = lp::solve(prog);
      if (out.optimal() && out.value > 0) {
        MixedRowThreat t;
        t.sigma1.probs = out.point;
        t.col = j;
        t.bad_row = i;
        return t;
      }
    }
  }
  return std::nullopt;
}

std::optional<MixedColThreat> exist_off_1best(const StageGame& g) {
  auto t = exist_off_2best(transpose(g));
  if (!t) return std::nullopt;
  MixedColThreat flipped;
  flipped.sigma2 = std::move(t->sigma1);
  flipped.row = t->col;
  flipped.bad_col = t->bad_row;
  return flipped;
}

namespace {

// 0 = no equilibrium, 1 = unique payoff value, 2 = several values.
int multiplicity(bool empty, bool unique) {
  if (empty) return 0;
  return unique ? 1 : 2;
}

Verdict decide_pure_pure_with(const StageGame& g, const nash::VSummary& v) {
  Verdict verdict;
  verdict.regime = Regime::pp;
  const int m1 = multiplicity(v.empty, v.v1_unique);
  const int m2 = multiplicity(v.empty, v.v2_unique);
  if (m1 == 2 && m2 == 2) {
    if (auto off = find_pure_off_profile(g)) {
      verdict.in_ls = true;
      verdict.case_id = 1;
      verdict.evidence = *off;
    }
  } else if (m1 == 2 && m2 == 1) {
    if (auto t = find_pure_row_threat(g)) {
      verdict.in_ls = true;
      verdict.case_id = 2;
      verdict.evidence = *t;
    }
  } else if (m1 == 1 && m2 == 2) {
    if (auto t = find_pure_row_threat(transpose(g))) {
      verdict.in_ls = true;
      verdict.case_id = 3;
      verdict.evidence = flip(*t);
    }
  }
  return verdict;
}

Verdict decide_mixed_mixed_with(const StageGame& g, const nash::VSummary& v) {
  Verdict verdict;
  verdict.regime = Regime::mm;
  const int m1 = multiplicity(v.empty, v.v1_unique);
  const int m2 = multiplicity(v.empty, v.v2_unique);
  if (m1 == 2 && m2 == 2) {
    if (auto off = find_pure_off_profile(g)) {
      verdict.in_ls = true;
      verdict.case_id = 1;
      verdict.evidence = *off;
    }
  } else if (m1 == 2 && m2 == 1) {
    if (auto t = exist_off_2best(g)) {
      verdict.in_ls = true;
      verdict.case_id = 2;
      verdict.evidence = *t;
    }
  } else if (m1 == 1 && m2 == 2) {
    if (auto t = exist_off_1best(g)) {
      verdict.in_ls = true;
      verdict.case_id = 3;
      verdict.evidence = *t;
    }
  }
  return verdict;
}

// The (column, anchor) family of exact programs for the mixed-pure
// middle case. For anchor a and column j, the support may only touch
// rows whose u1 gap to a (in column j) is a sum of equilibrium payoff
// differences; subject to j being a best response, we maximize
// min(mass on a, mass on rows below the column max) through the
// epigraph variable t. A positive optimum certifies the existence of a
// qualifying mixed strategy; strictness is exactly "optimum > 0".
std::optional<MixedRowThreat> mixed_row_threat(const StageGame& g,
                                               const DifferenceSet& d) {
  if (auto pure = find_pure_row_threat(g)) {
    MixedRowThreat t;
    t.sigma1 = MixedStrategy::pure(g.rows, pure->row);
    t.col = pure->col;
    t.bad_row = pure->row;
    t.anchor = pure->row;
    return t;
  }
  for (int j = 0; j < g.cols; ++j) {
    Rational cmax = col_max_u1(g, j);
    bool has_gap = false;
    for (int i = 0; i < g.rows; ++i)
      if (g.u1[i][j] < cmax) has_gap = true;
    if (!has_gap) continue;
    for (int anchor = 0; anchor < g.rows; ++anchor) {
      std::vector<int> allowed;
      for (int i = 0; i < g.rows; ++i)
        if (subset_sum_reachable(g.u1[anchor][j] - g.u1[i][j], d))
          allowed.push_back(i);
      // variables: x_0..x_{rows-1}, t
      lp::LinearProgram prog = nash::best_response_region(g, j, allowed);
      const int n = g.rows;
      prog.objective.assign(n + 1, Rational(0));
      prog.objective[n] = 1;
      prog.nonneg.assign(n + 1, true);
      for (auto& con : prog.constraints) con.row.resize(n + 1, Rational(0));
      {
        lp::Constraint c;  // x_anchor - t >= 0
        c.row.assign(n + 1, Rational(0));
        c.row[anchor] = 1;
        c.row[n] = -1;
        c.relation = lp::Relation::ge;
        c.rhs = 0;
        prog.constraints.push_back(std::move(c));
      }
      {
        lp::Constraint c;  // sum of below-max rows - t >= 0
        c.row.assign(n + 1, Rational(0));
        for (int i = 0; i < n; ++i)
          if (g.u1[i][j] < cmax) c.row[i] = 1;
        c.row[n] = -1;
        c.relation = lp::Relation::ge;
        c.rhs = 0;
        prog.constraints.push_back(std::move(c));
      }
      lp::LpOutcome out = lp::solve(prog);
      if (!out.optimal() || out.value <= 0) continue;
      MixedRowThreat t;
      t.sigma1.probs.assign(out.point.begin(), out.point.begin() + n);
      t.col = j;
      t.anchor = anchor;
      for (int i = 0; i < n; ++i) {
        if (t.sigma1.probs[i] > 0 && g.u1[i][j] < cmax) {
          t.bad_row = i;
          break;
        }
      }
      return t;
    }
  }
  return std::nullopt;
}

// Mixed-pure case with a unique value for player 1: player 2 needs a
// strict gap at some best-response vertex. The inner maximization is
// linear over the simplex of best-response rows, so scanning its pure
// vertices is complete.
std::optional<ColThreat> mixed_pure_col_threat(const StageGame& g) {
  for (int j = 0; j < g.cols; ++j) {
    Rational cmax = col_max_u1(g, j);
    for (int i = 0; i < g.rows; ++i) {
      if (g.u1[i][j] != cmax) continue;  // i must be a best response to j
      for (int jp = 0; jp < g.cols; ++jp) {
        if (g.u2[i][jp] > g.u2[i][j]) return ColThreat{i, j, jp};
      }
    }
  }
  return std::nullopt;
}

Verdict decide_mixed_pure_with(const StageGame& g, const nash::VSummary& v) {
  Verdict verdict;
  verdict.regime = Regime::mp;
  const int m1 = multiplicity(v.empty, v.v1_unique);
  const int m2 = multiplicity(v.empty, v.v2_unique);
  if (m1 == 2 && m2 == 2) {
    // any off profile works here, and a pure one exists iff any exists
    if (auto off = find_pure_off_profile(g)) {
      verdict.in_ls = true;
      verdict.case_id = 1;
      verdict.evidence = *off;
    }
  } else if (m1 == 2 && m2 == 1) {
    if (auto t = mixed_row_threat(g, make_difference_set(v.v1_values))) {
      verdict.in_ls = true;
      verdict.case_id = 2;
      verdict.evidence = *t;
    }
  } else if (m1 == 1 && m2 == 2) {
    if (auto t = mixed_pure_col_threat(g)) {
      verdict.in_ls = true;
      verdict.case_id = 3;
      verdict.evidence = *t;
    }
  }
  return verdict;
}

}  // namespace

Evidence transpose_evidence(const Evidence& e) {
  if (std::holds_alternative<OffProfile>(e)) {
    const auto& p = std::get<OffProfile>(e);
    return OffProfile{p.col, p.row};
  }
  if (std::holds_alternative<RowThreat>(e)) {
    const auto& t = std::get<RowThreat>(e);
    return ColThreat{t.col, t.row, t.better_row};
  }
  if (std::holds_alternative<ColThreat>(e)) {
    const auto& t = std::get<ColThreat>(e);
    return RowThreat{t.col, t.better_col, t.row};
  }
  if (std::holds_alternative<MixedRowThreat>(e)) {
    const auto& t = std::get<MixedRowThreat>(e);
    MixedColThreat f;
    f.sigma2 = t.sigma1;
    f.row = t.col;
    f.bad_col = t.bad_row;
    f.anchor = t.anchor;
    return f;
  }
  if (std::holds_alternative<MixedColThreat>(e)) {
    const auto& t = std::get<MixedColThreat>(e);
    MixedRowThreat f;
    f.sigma1 = t.sigma2;
    f.col = t.row;
    f.bad_row = t.bad_col;
    f.anchor = t.anchor;
    return f;
  }
  return e;
}

Verdict decide_pure_pure(const StageGame& g) {
  return decide_pure_pure_with(g, nash::v_summary(g, Regime::pp));
}

Verdict decide_mixed_mixed(const StageGame& g) {
  return decide_mixed_mixed_with(g, nash::v_summary(g, Regime::mm));
}

Verdict decide_mixed_pure(const StageGame& g) {
  return decide_mixed_pure_with(g, nash::v_summary(g, Regime::mp));
}

Verdict decide(const StageGame& g, Regime regime) {
  switch (regime) {
    case Regime::pp: return decide_pure_pure(g);
    case Regime::mp: return decide_mixed_pure(g);
    case Regime::mm: return decide_mixed_mixed(g);
    case Regime::pm: {
      Verdict t = decide_mixed_pure(transpose(g));
      Verdict verdict;
      verdict.regime = Regime::pm;
      verdict.in_ls = t.in_ls;
      verdict.case_id = t.case_id == 2 ? 3 : (t.case_id == 3 ? 2 : t.case_id);
      verdict.evidence = transpose_evidence(t.evidence);
      return verdict;
    }
  }
  throw input_error("unknown regime");
}

Classification classify(const StageGame& g) {
  Classification c;
  c.v_pp = nash::v_summary(g, Regime::pp);
  c.v_mp = nash::v_summary(g, Regime::mp);
  c.v_mm = nash::v_summary(g, Regime::mm);
  c.pp = decide_pure_pure_with(g, c.v_pp);
  c.mp = decide_mixed_pure_with(g, c.v_mp);
  c.mm = decide_mixed_mixed_with(g, c.v_mm);

  c.delta.pp_in_ls = c.pp.in_ls;
  c.delta.mp_in_ls = c.mp.in_ls;
  c.delta.mm_in_ls = c.mm.in_ls;
  if ((c.pp.in_ls && !c.mp.in_ls) || (c.mp.in_ls && !c.mm.in_ls))
    throw std::logic_error("classification violates the inclusion chain");

  auto bucket = [](const nash::VSummary& v) {
    return std::make_pair(multiplicity(v.empty, v.v1_unique),
                          multiplicity(v.empty, v.v2_unique));
  };
  if (!c.pp.in_ls && c.mp.in_ls) {
    c.delta.boundary = DeltaLabel::Boundary::pp_mp;
    auto [m1, m2] = bucket(c.v_pp);
    if (m1 == 0 && m2 == 0)
      c.delta.case_id = 1;
    else if (m1 == 1 && m2 == 1)
      c.delta.case_id = 2;
    else if (m1 == 2 && m2 == 1)
      c.delta.case_id = 3;
    else
      throw std::logic_error("pure-to-mixed gap in an impossible value bucket");
  } else if (!c.mp.in_ls && c.mm.in_ls) {
    c.delta.boundary = DeltaLabel::Boundary::mp_mm;
    auto [m1, m2] = bucket(c.v_mp);
    if (m1 == 0 && m2 == 0)
      c.delta.case_id = 1;
    else if (m1 == 1 && m2 == 1)
      c.delta.case_id = 2;
    else if (m1 == 2 && m2 == 1)
      c.delta.case_id = 3;
    else if (m1 == 1 && m2 == 2)
      c.delta.case_id = 4;
    else
      throw std::logic_error("mixed-access gap in an impossible value bucket");
  }
  return c;
}

}  // namespace offnash::decide

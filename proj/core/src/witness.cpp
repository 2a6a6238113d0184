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

#include "offnash/witness.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "offnash/verify.hpp"

namespace offnash::witness {

bool OutcomeClass::matches(int row, int col) const {
  if (rows && std::find(rows->begin(), rows->end(), row) == rows->end())
    return false;
  if (cols && std::find(cols->begin(), cols->end(), col) == cols->end())
    return false;
  return true;
}

StrategyMachine transpose_machine(const StrategyMachine& m) {
  StrategyMachine t;
  t.horizon = m.horizon;
  t.start = m.start;
  t.states.reserve(m.states.size());
  for (const MachineState& st : m.states) {
    MachineState flipped;
    flipped.emit = Profile{st.emit.s2, st.emit.s1};
    for (const Transition& tr : st.transitions) {
      Transition f;
      f.on.rows = tr.on.cols;
      f.on.cols = tr.on.rows;
      f.next = tr.next;
      flipped.transitions.push_back(std::move(f));
    }
    t.states.push_back(std::move(flipped));
  }
  return t;
}

namespace {

using decide::ColThreat;
using decide::Evidence;
using decide::MixedColThreat;
using decide::MixedRowThreat;
using decide::OffProfile;
using decide::RowThreat;
using decide::Verdict;

// A stage equilibrium usable as continuation play.
struct NeRep {
  Profile profile;
  Rational u1, u2;
};

std::vector<NeRep> collect_reps(const StageGame& g, Regime regime) {
  std::vector<NeRep> reps;
  if (regime == Regime::pp) {
    for (auto [i, j] : nash::pure_nash(g).profiles) {
      reps.push_back(
          NeRep{pure_profile(g, i, j), g.u1[i][j], g.u2[i][j]});
    }
  } else if (regime == Regime::mp) {
    for (const auto& c : nash::mixed_pure_components(g)) {
      if (!c.nonempty) continue;
      MixedStrategy col = MixedStrategy::pure(g.cols, c.col);
      Profile lo{c.u2_min_point, col};
      Profile hi{c.u2_max_point, col};
      reps.push_back(NeRep{lo, c.v1_value, c.u2_min});
      if (c.u2_max != c.u2_min)
        reps.push_back(NeRep{hi, c.v1_value, c.u2_max});
    }
  } else if (regime == Regime::mm) {
    for (const auto& eq : nash::extreme_equilibria(g))
      reps.push_back(NeRep{Profile{eq.s1, eq.s2}, eq.pay1, eq.pay2});
  } else {
    throw input_error("collect_reps: pm is handled via transpose");
  }
  return reps;
}

// First strict improvement wins, so ties resolve to the earliest rep.
template <typename Key>
const NeRep& pick_extreme(const std::vector<NeRep>& reps, Key key, bool want_max) {
  if (reps.empty()) throw std::logic_error("witness: no equilibria to play");
  const NeRep* best = &reps.front();
  for (const NeRep& r : reps) {
    if (want_max ? key(r) > key(*best) : key(r) < key(*best)) best = &r;
  }
  return *best;
}

const NeRep& max_u1(const std::vector<NeRep>& r) {
  return pick_extreme(r, [](const NeRep& x) { return x.u1; }, true);
}
const NeRep& min_u1(const std::vector<NeRep>& r) {
  return pick_extreme(r, [](const NeRep& x) { return x.u1; }, false);
}
const NeRep& max_u2(const std::vector<NeRep>& r) {
  return pick_extreme(r, [](const NeRep& x) { return x.u2; }, true);
}
const NeRep& min_u2(const std::vector<NeRep>& r) {
  return pick_extreme(r, [](const NeRep& x) { return x.u2; }, false);
}

long ceil_ratio(const Rational& num, const Rational& den) {
  if (den <= 0) throw std::logic_error("witness: nonpositive payoff span");
  Integer c = ceil_int(num / den);
  if (c > Integer(std::numeric_limits<long>::max() / 4))
    throw horizon_cap_error("witness horizon overflows",
                            std::numeric_limits<long>::max());
  return static_cast<long>(c);
}

Rational col_max_u1(const StageGame& g, int col) {
  Rational best = g.u1[0][col];
  for (int i = 1; i < g.rows; ++i) best = std::max(best, g.u1[i][col]);
  return best;
}

Rational col_min_u1(const StageGame& g, int col) {
  Rational best = g.u1[0][col];
  for (int i = 1; i < g.rows; ++i) best = std::min(best, g.u1[i][col]);
  return best;
}

Rational row_max_u2(const StageGame& g, int row) {
  Rational best = g.u2[row][0];
  for (int j = 1; j < g.cols; ++j) best = std::max(best, g.u2[row][j]);
  return best;
}

struct Builder {
  StrategyMachine m;

  int add(Profile emit) {
    m.states.push_back(MachineState{std::move(emit), {}});
    return static_cast<int>(m.states.size()) - 1;
  }
  void route(int from, OutcomeClass on, int next) {
    m.states[from].transitions.push_back(Transition{std::move(on), next});
  }
  void wildcard(int from, int next) { route(from, OutcomeClass{}, next); }

  /// State that repeats `emit` for all remaining rounds.
  int loop(Profile emit) {
    int s = add(std::move(emit));
    wildcard(s, s);
    return s;
  }
  /// Two-state loop alternating a then b.
  int alternate(Profile a, Profile b) {
    int sa = add(std::move(a));
    int sb = add(std::move(b));
    wildcard(sa, sb);
    wildcard(sb, sa);
    return sa;
  }
  /// Finite emission sequence that then enters `after`. Returns the id
  /// of the first state (or `after` itself for an empty sequence).
  int chain(const std::vector<Profile>& seq, int after) {
    int next = after;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      int s = add(*it);
      wildcard(s, next);
      next = s;
    }
    return next;
  }
};

OutcomeClass on_rows(std::vector<int> rows) {
  OutcomeClass c;
  c.rows = std::move(rows);
  return c;
}
OutcomeClass on_cols(std::vector<int> cols) {
  OutcomeClass c;
  c.cols = std::move(cols);
  return c;
}
OutcomeClass on_cell(int row, int col) {
  OutcomeClass c;
  c.rows = std::vector<int>{row};
  c.cols = std::vector<int>{col};
  return c;
}

// --- both-values-multiple construction (case 1, all regimes) ---------
//
// Round 1 plays the off-equilibrium pure pair; the remaining 2k rounds
// alternate a player-1-favoured and a player-2-favoured equilibrium,
// downgraded for whichever player deviated in round 1.

long plan_case1(const StageGame& g, const OffProfile& off,
                const std::vector<NeRep>& reps) {
  const Rational span1 = max_u1(reps).u1 - min_u1(reps).u1;
  const Rational span2 = max_u2(reps).u2 - min_u2(reps).u2;
  const Rational d1 = col_max_u1(g, off.col) - g.u1[off.row][off.col];
  const Rational d2 = row_max_u2(g, off.row) - g.u2[off.row][off.col];
  const long k = std::max(ceil_ratio(d1, span1), ceil_ratio(d2, span2));
  if (k < 1) throw std::logic_error("witness: profile is not off-equilibrium");
  return 2 * k + 1;
}

// The branch reached only after a joint deviation may repeat any
// equilibrium; pinned to the first pure one in row-major order (the
// player-1-best representative when no pure equilibrium exists).
Profile joint_deviation_play(const StageGame& g, const std::vector<NeRep>& reps) {
  auto pure = nash::pure_nash(g).profiles;
  if (!pure.empty()) return pure_profile(g, pure[0].first, pure[0].second);
  return max_u1(reps).profile;
}

StrategyMachine build_case1(const StageGame& g, const OffProfile& off,
                            const std::vector<NeRep>& reps, long t_min) {
  const NeRep& a1_hi = max_u1(reps);
  const NeRep& a1_lo = min_u1(reps);
  const NeRep& a2_hi = max_u2(reps);
  const NeRep& a2_lo = min_u2(reps);
  Builder b;
  b.m.horizon = t_min;
  int start = b.add(pure_profile(g, off.row, off.col));
  int onpath = b.alternate(a1_hi.profile, a2_hi.profile);
  int dev1 = b.alternate(a1_lo.profile, a2_hi.profile);
  int dev2 = b.alternate(a1_hi.profile, a2_lo.profile);
  int both = b.loop(joint_deviation_play(g, reps));
  b.route(start, on_cell(off.row, off.col), onpath);
  b.route(start, on_cols({off.col}), dev1);
  b.route(start, on_rows({off.row}), dev2);
  b.wildcard(start, both);
  b.m.start = start;
  return b.m;
}

// --- single-row threat (pure-pure case 2, mixed cases with a pure
// deviator) -----------------------------------------------------------
//
// Round 1 plays (row, col); from round 2 on, repeat the player-1-best
// equilibrium if player 1 stuck to `row`, else the player-1-worst one.

long plan_row_threat(const StageGame& g, int row, int col,
                     const std::vector<NeRep>& reps) {
  const Rational span = max_u1(reps).u1 - min_u1(reps).u1;
  const Rational delta = col_max_u1(g, col) - g.u1[row][col];
  if (delta <= 0) throw std::logic_error("witness: no payoff gap to threaten");
  return ceil_ratio(delta, span) + 1;
}

StrategyMachine build_row_threat(const StageGame& g, int row, int col,
                                 const std::vector<NeRep>& reps, long t_min) {
  Builder b;
  b.m.horizon = t_min;
  int start = b.add(pure_profile(g, row, col));
  int reward = b.loop(max_u1(reps).profile);
  int punish = b.loop(min_u1(reps).profile);
  b.route(start, on_rows({row}), reward);
  b.wildcard(start, punish);
  b.m.start = start;
  return b.m;
}

// --- column-side threat (mixed-pure case with the value gap on player 2)
//
// Player 1 best-responds with a pure row; player 2's round-1 column
// selects between the player-2-best and player-2-worst equilibria.

long plan_col_threat(const StageGame& g, int row, int col,
                     const std::vector<NeRep>& reps) {
  const Rational span = max_u2(reps).u2 - min_u2(reps).u2;
  const Rational delta = row_max_u2(g, row) - g.u2[row][col];
  if (delta <= 0) throw std::logic_error("witness: no payoff gap to threaten");
  return ceil_ratio(delta, span) + 1;
}

StrategyMachine build_col_threat(const StageGame& g, int row, int col,
                                 const std::vector<NeRep>& reps, long t_min) {
  Builder b;
  b.m.horizon = t_min;
  int start = b.add(pure_profile(g, row, col));
  int reward = b.loop(max_u2(reps).profile);
  int punish = b.loop(min_u2(reps).profile);
  b.route(start, on_cols({col}), reward);
  b.wildcard(start, punish);
  b.m.start = start;
  return b.m;
}

// --- mixed-mixed case 2 ----------------------------------------------

// Sub-case of the mixed-mixed middle case, mirrored in the proofs:
// (a) a pure row already under-performs against a best-responding column,
// (b) some row has two best-response columns (a tie to randomize over),
// (c) neither; the tie is then manufactured by mixing two rows.
struct TiedRow {
  int row;
  int col_hi;  // u1(row, col_hi) >= u1(row, col_lo)
  int col_lo;
};

std::optional<TiedRow> find_tied_row(const StageGame& g) {
  for (int i = 0; i < g.rows; ++i) {
    Rational best = row_max_u2(g, i);
    std::vector<int> tied;
    for (int j = 0; j < g.cols; ++j)
      if (g.u2[i][j] == best) tied.push_back(j);
    if (tied.size() >= 2) {
      int a = tied[0], b = tied[1];
      if (g.u1[i][a] >= g.u1[i][b]) return TiedRow{i, a, b};
      return TiedRow{i, b, a};
    }
  }
  return std::nullopt;
}

struct PlanMm2b {
  TiedRow tie;
  std::vector<int> support;
  int top;  // support row with the largest u1 in the threat column
  long t1 = 0, t2 = 0, t_min = 0;
};

PlanMm2b plan_mm2b(const StageGame& g, const MixedRowThreat& t,
                   const TiedRow& tie, const std::vector<NeRep>& reps) {
  PlanMm2b plan;
  plan.tie = tie;
  plan.support = t.sigma1.support();
  const Rational span = max_u1(reps).u1 - min_u1(reps).u1;
  plan.top = plan.support.front();
  for (int i : plan.support)
    if (g.u1[i][t.col] > g.u1[plan.top][t.col]) plan.top = i;
  Rational support_gap = 0;
  for (int i : plan.support)
    support_gap = std::max(support_gap, Rational(g.u1[plan.top][t.col] - g.u1[i][t.col]));
  const Rational full_gap = col_max_u1(g, t.col) - col_min_u1(g, t.col);
  plan.t_min = ceil_ratio(Rational(3) + support_gap / span + full_gap / span,
                          Rational(1));
  plan.t1 = ceil_ratio(support_gap, span) + 1;
  plan.t2 = plan.t_min - 1 - plan.t1;
  if (plan.t2 < 1) throw std::logic_error("witness: bad block split");
  return plan;
}

StrategyMachine build_mm2b(const StageGame& g, const MixedRowThreat& t,
                           const PlanMm2b& plan,
                           const std::vector<NeRep>& reps) {
  const NeRep& hi = max_u1(reps);
  const NeRep& lo = min_u1(reps);
  const Rational span = hi.u1 - lo.u1;
  const Rational tie_gain =
      g.u1[plan.tie.row][plan.tie.col_hi] - g.u1[plan.tie.row][plan.tie.col_lo];

  Builder b;
  b.m.horizon = 1 + plan.t1 + plan.t2;
  int start = b.add(Profile{t.sigma1, MixedStrategy::pure(g.cols, t.col)});
  b.m.start = start;

  // shared continuations after the tie round
  int reward_loop = b.loop(hi.profile);  // hi for t1-1+t2 rounds
  int punish_tail = b.loop(hi.profile);  // hi for the last t2 rounds
  int punish =
      b.chain(std::vector<Profile>(plan.t1 - 1, lo.profile), punish_tail);
  int bottom = b.loop(lo.profile);

  for (int i : plan.support) {
    // lambda_i equalizes player 1's total across the support:
    //   lambda * (tie_gain + (t1 - 1) * span) = u1(top, col) - u1(i, col)
    Rational num = g.u1[plan.top][t.col] - g.u1[i][t.col];
    Rational den = tie_gain + Rational(plan.t1 - 1) * span;
    Rational lambda;
    if (den == 0) {
      if (num != 0) throw std::logic_error("witness: tie round cannot equalize");
      lambda = 0;
    } else {
      lambda = num / den;
    }
    if (lambda < 0 || lambda > 1)
      throw std::logic_error("witness: equalizer left the unit interval");
    MixedStrategy mix;
    mix.probs.assign(g.cols, Rational(0));
    mix.probs[plan.tie.col_hi] = lambda;
    mix.probs[plan.tie.col_lo] = 1 - lambda;
    int seg = b.add(Profile{MixedStrategy::pure(g.rows, plan.tie.row), mix});
    b.route(seg, on_cols({plan.tie.col_hi}), reward_loop);
    b.wildcard(seg, punish);
    b.route(start, on_rows({i}), seg);
  }
  b.wildcard(start, bottom);
  return b.m;
}

// mixed-mixed case 2(c): no pure threat and no tied row. Each row then
// has a unique best-response column, all of equal u2 value; crossing two
// of those rows manufactures a tie for player 2.
struct PlanMm2c {
  int i1 = 0, i2 = 0;   // mixed rows (u1(i1, j1) >= u1(i2, j1) arranged)
  int j1 = 0, j2 = 0;   // tied best-response columns at lambda1
  Rational lambda1;     // weight of i1
  bool equal_branch = false;
  Rational rho;         // weight of j2 in the unequal branch
  long t1 = 0, t2 = 0, t_min = 0;
};

PlanMm2c plan_mm2c(const StageGame& g, const std::vector<NeRep>& reps) {
  const Rational span = max_u1(reps).u1 - min_u1(reps).u1;

  // unique best-response column per row (no-tie precondition)
  std::vector<int> br(g.rows);
  for (int i = 0; i < g.rows; ++i) {
    Rational best = row_max_u2(g, i);
    int which = -1;
    for (int j = 0; j < g.cols; ++j) {
      if (g.u2[i][j] != best) continue;
      if (which >= 0) throw std::logic_error("witness: unexpected column tie");
      which = j;
    }
    br[i] = which;
  }
  // first row pair whose best-response payoffs to player 1 differ
  int i1 = -1, i2 = -1;
  for (int a = 0; a < g.rows && i1 < 0; ++a)
    for (int b2 = a + 1; b2 < g.rows && i1 < 0; ++b2)
      if (g.u1[a][br[a]] != g.u1[b2][br[b2]]) {
        i1 = a;
        i2 = b2;
      }
  if (i1 < 0) throw std::logic_error("witness: no payoff-splitting row pair");

  // upper envelope of f_j(l) = l*u2(i1,j) + (1-l)*u2(i2,j) on (0,1):
  // smallest crossing point where two columns tie at the maximum
  std::optional<Rational> lambda1;
  for (int a = 0; a < g.cols; ++a) {
    for (int b2 = a + 1; b2 < g.cols; ++b2) {
      Rational slope_diff = (g.u2[i1][a] - g.u2[i2][a]) -
                            (g.u2[i1][b2] - g.u2[i2][b2]);
      Rational offset_diff = g.u2[i2][b2] - g.u2[i2][a];
      if (slope_diff == 0) continue;
      Rational l = offset_diff / slope_diff;
      if (l <= 0 || l >= 1) continue;
      Rational value = l * g.u2[i1][a] + (1 - l) * g.u2[i2][a];
      bool is_max = true;
      for (int j = 0; j < g.cols && is_max; ++j)
        if (l * g.u2[i1][j] + (1 - l) * g.u2[i2][j] > value) is_max = false;
      if (is_max && (!lambda1 || l < *lambda1)) lambda1 = l;
    }
  }
  if (!lambda1) throw std::logic_error("witness: best-response lines never cross");

  PlanMm2c plan;
  plan.lambda1 = *lambda1;
  plan.i1 = i1;
  plan.i2 = i2;
  // tied columns at lambda1, ascending
  std::vector<int> tied;
  {
    Rational value;
    bool first = true;
    for (int j = 0; j < g.cols; ++j) {
      Rational v = plan.lambda1 * g.u2[i1][j] + (1 - plan.lambda1) * g.u2[i2][j];
      if (first || v > value) {
        value = v;
        first = false;
      }
    }
    for (int j = 0; j < g.cols; ++j) {
      Rational v = plan.lambda1 * g.u2[i1][j] + (1 - plan.lambda1) * g.u2[i2][j];
      if (v == value) tied.push_back(j);
    }
  }
  if (tied.size() < 2) throw std::logic_error("witness: crossing lost its tie");

  for (int j : tied) {
    if (g.u1[i1][j] == g.u1[i2][j]) {
      plan.equal_branch = true;
      plan.j1 = j;
      plan.j2 = -1;
      const Rational gap = col_max_u1(g, j) - g.u1[i1][j];
      if (gap <= 0)
        throw std::logic_error("witness: equal branch without a gap");
      plan.t_min = ceil_ratio(gap, span) + 1;
      return plan;
    }
  }
  plan.j1 = tied[0];
  plan.j2 = tied[1];
  if (g.u1[i1][plan.j1] < g.u1[i2][plan.j1]) {
    std::swap(plan.i1, plan.i2);
    plan.lambda1 = 1 - plan.lambda1;
  }
  const Rational delta_j2 = g.u1[plan.i1][plan.j2] - g.u1[plan.i2][plan.j2];
  Rational max_dev = 0;
  for (int a = 0; a < g.rows; ++a)
    for (int i : {plan.i1, plan.i2})
      for (int j : {plan.j1, plan.j2})
        max_dev = std::max(max_dev, Rational(g.u1[a][j] - g.u1[i][j]));
  plan.t_min = ceil_ratio(
      Rational(3) + max_dev / span + abs(delta_j2) / span, Rational(1));
  // t1 strictly exceeds delta_j2 / span so the equalizer has a root in (0,1)
  long t1 = 1;
  if (delta_j2 > 0) {
    Integer f = floor_int(delta_j2 / span);
    t1 = static_cast<long>(f) + 1;
  }
  plan.t1 = t1;
  plan.t2 = plan.t_min - 1 - plan.t1;
  if (plan.t2 < 1) throw std::logic_error("witness: bad block split");
  const Rational delta_j1 = g.u1[plan.i1][plan.j1] - g.u1[plan.i2][plan.j1];
  plan.rho = delta_j1 / (delta_j1 - delta_j2 + Rational(plan.t1) * span);
  if (plan.rho <= 0 || plan.rho >= 1)
    throw std::logic_error("witness: equalizer left the open interval");
  return plan;
}

StrategyMachine build_mm2c(const StageGame& g, const PlanMm2c& plan,
                           const std::vector<NeRep>& reps) {
  const NeRep& hi = max_u1(reps);
  const NeRep& lo = min_u1(reps);
  Builder b;
  b.m.horizon = plan.t_min;
  MixedStrategy rows_mix;
  rows_mix.probs.assign(g.rows, Rational(0));
  rows_mix.probs[plan.i1] = plan.lambda1;
  rows_mix.probs[plan.i2] = 1 - plan.lambda1;

  if (plan.equal_branch) {
    int start = b.add(Profile{rows_mix, MixedStrategy::pure(g.cols, plan.j1)});
    int reward = b.loop(hi.profile);
    int punish = b.loop(lo.profile);
    b.route(start, on_rows({plan.i1, plan.i2}), reward);
    b.wildcard(start, punish);
    b.m.start = start;
    return b.m;
  }

  MixedStrategy cols_mix;
  cols_mix.probs.assign(g.cols, Rational(0));
  cols_mix.probs[plan.j2] = plan.rho;
  cols_mix.probs[plan.j1] = 1 - plan.rho;
  int start = b.add(Profile{rows_mix, cols_mix});
  int mu2 = b.loop(hi.profile);
  int mu1_tail = b.loop(hi.profile);
  int mu1 = b.chain(std::vector<Profile>(plan.t1, lo.profile), mu1_tail);
  int bottom = b.loop(lo.profile);
  b.route(start, on_cell(plan.i1, plan.j2), mu1);
  {
    OutcomeClass both;
    both.rows = std::vector<int>{plan.i1, plan.i2};
    both.cols = std::vector<int>{plan.j1, plan.j2};
    b.route(start, both, mu2);
  }
  b.wildcard(start, bottom);
  b.m.start = start;
  return b.m;
}

// --- mixed-pure case 2 with a genuinely mixed strategy ----------------
//
// Segment construction: each support action a' other than the anchor
// gets a block of rounds realizing the payoff difference
// u1(anchor, col) - u1(a', col) as a sum of equilibrium-value
// differences; the closing block rewards support play and punishes
// everything else.

// The positive difference d = hi - lo realized by a concrete pair of
// equilibrium values; rounds realizing -d swap the two profiles.
struct DiffRep {
  Rational d;
  Profile hi, lo;
};

// Segment for one support action a': in round k of the segment the
// machine plays rounds[k].first if player 1 opened with a', else
// rounds[k].second; the u1 gaps across the rounds sum to
// u1(anchor, col) - u1(a', col).
struct Segment {
  int a_prime = 0;
  std::vector<std::pair<size_t, bool>> rounds;  // (diff index, negated)
};

struct PlanMp2 {
  std::vector<int> support;
  int anchor = 0;
  std::vector<DiffRep> diffs;
  std::vector<Segment> segments;
  long t_min = 0;
};

std::vector<DiffRep> positive_diffs(const std::vector<NeRep>& reps) {
  std::vector<DiffRep> out;
  for (const NeRep& a : reps) {
    for (const NeRep& b : reps) {
      Rational d = a.u1 - b.u1;
      if (d <= 0) continue;
      bool seen = false;
      for (const DiffRep& r : out)
        if (r.d == d) seen = true;
      if (!seen) out.push_back(DiffRep{d, a.profile, b.profile});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DiffRep& x, const DiffRep& y) { return x.d < y.d; });
  return out;
}

// Integer multiplicities writing `target` as a combination of the
// positive differences, via the extended gcd (negative entries mean the
// difference is spent in reverse).
std::vector<Integer> diff_combination(const Rational& target,
                                      const std::vector<DiffRep>& diffs) {
  if (diffs.empty())
    throw std::logic_error("witness: no equilibrium differences to spend");
  Integer lcm_den = 1;
  for (const DiffRep& r : diffs) lcm_den = lcm(lcm_den, denominator(r.d));
  std::vector<Integer> scaled;
  for (const DiffRep& r : diffs)
    scaled.push_back(numerator(r.d) * (lcm_den / denominator(r.d)));

  Integer g = scaled[0];
  std::vector<Integer> coef{Integer(1)};
  for (size_t k = 1; k < scaled.size(); ++k) {
    Integer s, t, gg;
    mpz_gcdext(gg.backend().data(), s.backend().data(), t.backend().data(),
               g.backend().data(), scaled[k].backend().data());
    for (Integer& c : coef) c *= s;
    coef.push_back(t);
    g = gg;
  }
  Rational q = target / Rational(g, lcm_den);
  if (!is_integer(q))
    throw std::logic_error("witness: unreachable payoff difference");
  for (Integer& c : coef) c *= numerator(q);
  return coef;
}

PlanMp2 plan_mp2_mixed(const StageGame& g, const MixedRowThreat& t,
                       const std::vector<NeRep>& reps) {
  PlanMp2 plan;
  plan.support = t.sigma1.support();
  plan.anchor = t.anchor;
  plan.diffs = positive_diffs(reps);
  const Rational span = max_u1(reps).u1 - min_u1(reps).u1;
  Integer total = 0;
  for (int a : plan.support) {
    if (a == plan.anchor) continue;
    Rational target = g.u1[plan.anchor][t.col] - g.u1[a][t.col];
    Segment seg;
    seg.a_prime = a;
    if (target != 0) {
      std::vector<Integer> times = diff_combination(target, plan.diffs);
      for (size_t k = 0; k < times.size(); ++k) {
        Integer reps_count = abs(times[k]);
        if (total + reps_count > Integer(std::numeric_limits<long>::max() / 4))
          throw horizon_cap_error("witness: difference realization too long",
                                  std::numeric_limits<long>::max());
        for (Integer c = 0; c < reps_count; ++c)
          seg.rounds.emplace_back(k, times[k] < 0);
        total += reps_count;
      }
    }
    plan.segments.push_back(std::move(seg));
  }
  const Rational col_gap = col_max_u1(g, t.col) - col_min_u1(g, t.col);
  plan.t_min = 2 + static_cast<long>(total) + ceil_ratio(col_gap, span);
  return plan;
}

StrategyMachine build_mp2_mixed(const StageGame& g, const MixedRowThreat& t,
                                const PlanMp2& plan,
                                const std::vector<NeRep>& reps) {
  const NeRep& hi = max_u1(reps);
  const NeRep& lo = min_u1(reps);
  Builder b;
  b.m.horizon = plan.t_min;
  int start = b.add(Profile{t.sigma1, MixedStrategy::pure(g.cols, t.col)});
  b.m.start = start;

  auto branch_for = [&](int first_round_row, bool in_support) {
    std::vector<Profile> seq;
    for (const Segment& seg : plan.segments) {
      for (auto [k, negated] : seg.rounds) {
        const DiffRep& d = plan.diffs[k];
        const bool taken = first_round_row == seg.a_prime;
        seq.push_back(taken != negated ? d.hi : d.lo);
      }
    }
    int tail = b.loop(in_support ? hi.profile : lo.profile);
    return b.chain(seq, tail);
  };

  int anchor_branch = branch_for(plan.anchor, true);
  for (int i : plan.support) {
    bool has_segment = false;
    for (const Segment& seg : plan.segments)
      if (seg.a_prime == i && !seg.rounds.empty()) has_segment = true;
    int target = has_segment ? branch_for(i, true) : anchor_branch;
    b.route(start, on_rows({i}), target);
  }
  b.wildcard(start, branch_for(-1, false));
  return b.m;
}

// ----------------------------------------------------------------------

Verdict require_ls(const Verdict& v) {
  if (!v.in_ls)
    throw not_in_ls_error("witness requested outside the locally-suboptimal set");
  return v;
}

}  // namespace

TBound t_bound(const StageGame& g, const decide::Verdict& verdict) {
  require_ls(verdict);
  TBound bound;
  bound.regime = verdict.regime;
  bound.case_id = verdict.case_id;

  if (verdict.regime == Regime::pm) {
    Verdict flipped;
    flipped.regime = Regime::mp;
    flipped.in_ls = true;
    flipped.case_id = verdict.case_id == 2 ? 3 : (verdict.case_id == 3 ? 2 : 1);
    flipped.evidence = decide::transpose_evidence(verdict.evidence);
    TBound inner = t_bound(transpose(g), flipped);
    bound.t_min = inner.t_min;
    return bound;
  }

  const std::vector<NeRep> reps = collect_reps(g, verdict.regime);
  switch (verdict.regime) {
    case Regime::pp: {
      if (verdict.case_id == 1) {
        bound.t_min = plan_case1(g, std::get<OffProfile>(verdict.evidence), reps);
      } else if (verdict.case_id == 2) {
        const auto& t = std::get<RowThreat>(verdict.evidence);
        bound.t_min = plan_row_threat(g, t.row, t.col, reps);
      } else {
        const auto& t = std::get<ColThreat>(verdict.evidence);
        bound.t_min = plan_col_threat(g, t.row, t.col, reps);
      }
      return bound;
    }
    case Regime::mp: {
      if (verdict.case_id == 1) {
        bound.t_min = plan_case1(g, std::get<OffProfile>(verdict.evidence), reps);
      } else if (verdict.case_id == 2) {
        const auto& t = std::get<MixedRowThreat>(verdict.evidence);
        if (t.sigma1.is_pure()) {
          bound.t_min = plan_row_threat(g, t.sigma1.pure_index(), t.col, reps);
        } else {
          bound.t_min = plan_mp2_mixed(g, t, reps).t_min;
        }
      } else {
        const auto& t = std::get<ColThreat>(verdict.evidence);
        bound.t_min = plan_col_threat(g, t.row, t.col, reps);
      }
      return bound;
    }
    case Regime::mm: {
      if (verdict.case_id == 1) {
        bound.t_min = plan_case1(g, std::get<OffProfile>(verdict.evidence), reps);
        return bound;
      }
      if (verdict.case_id == 3) {
        Verdict flipped;
        flipped.regime = Regime::mm;
        flipped.in_ls = true;
        flipped.case_id = 2;
        flipped.evidence = decide::transpose_evidence(verdict.evidence);
        bound.t_min = t_bound(transpose(g), flipped).t_min;
        return bound;
      }
      const auto& t = std::get<MixedRowThreat>(verdict.evidence);
      if (auto pure = decide::find_pure_row_threat(g)) {
        bound.t_min = plan_row_threat(g, pure->row, pure->col, reps);
      } else if (auto tie = find_tied_row(g)) {
        bound.t_min = plan_mm2b(g, t, *tie, reps).t_min;
      } else {
        bound.t_min = plan_mm2c(g, reps).t_min;
      }
      return bound;
    }
    default:
      throw input_error("unknown regime");
  }
}

WitnessResult build_witness(const StageGame& g, const decide::Verdict& verdict,
                            long cap) {
  require_ls(verdict);

  if (verdict.regime == Regime::pm) {
    Verdict flipped;
    flipped.regime = Regime::mp;
    flipped.in_ls = true;
    flipped.case_id = verdict.case_id == 2 ? 3 : (verdict.case_id == 3 ? 2 : 1);
    flipped.evidence = decide::transpose_evidence(verdict.evidence);
    WitnessResult inner = build_witness(transpose(g), flipped, cap);
    WitnessResult result;
    result.bound = TBound{Regime::pm, verdict.case_id, inner.bound.t_min};
    result.machine = transpose_machine(inner.machine);
    if (!verify::is_spe(g, result.machine, Regime::pm))
      throw std::logic_error("witness failed self-verification");
    return result;
  }

  const std::vector<NeRep> reps = collect_reps(g, verdict.regime);
  StrategyMachine machine;
  TBound bound;
  bound.regime = verdict.regime;
  bound.case_id = verdict.case_id;

  auto guard = [&](long t_min) {
    bound.t_min = t_min;
    if (t_min > cap)
      throw horizon_cap_error("witness horizon exceeds the cap", t_min);
  };

  switch (verdict.regime) {
    case Regime::pp: {
      if (verdict.case_id == 1) {
        const auto& off = std::get<OffProfile>(verdict.evidence);
        guard(plan_case1(g, off, reps));
        machine = build_case1(g, off, reps, bound.t_min);
      } else if (verdict.case_id == 2) {
        const auto& t = std::get<RowThreat>(verdict.evidence);
        guard(plan_row_threat(g, t.row, t.col, reps));
        machine = build_row_threat(g, t.row, t.col, reps, bound.t_min);
      } else {
        const auto& t = std::get<ColThreat>(verdict.evidence);
        guard(plan_col_threat(g, t.row, t.col, reps));
        machine = build_col_threat(g, t.row, t.col, reps, bound.t_min);
      }
      break;
    }
    case Regime::mp: {
      if (verdict.case_id == 1) {
        const auto& off = std::get<OffProfile>(verdict.evidence);
        guard(plan_case1(g, off, reps));
        machine = build_case1(g, off, reps, bound.t_min);
      } else if (verdict.case_id == 2) {
        const auto& t = std::get<MixedRowThreat>(verdict.evidence);
        if (t.sigma1.is_pure()) {
          int row = t.sigma1.pure_index();
          guard(plan_row_threat(g, row, t.col, reps));
          machine = build_row_threat(g, row, t.col, reps, bound.t_min);
        } else {
          PlanMp2 plan = plan_mp2_mixed(g, t, reps);
          guard(plan.t_min);
          machine = build_mp2_mixed(g, t, plan, reps);
        }
      } else {
        const auto& t = std::get<ColThreat>(verdict.evidence);
        guard(plan_col_threat(g, t.row, t.col, reps));
        machine = build_col_threat(g, t.row, t.col, reps, bound.t_min);
      }
      break;
    }
    case Regime::mm: {
      if (verdict.case_id == 1) {
        const auto& off = std::get<OffProfile>(verdict.evidence);
        guard(plan_case1(g, off, reps));
        machine = build_case1(g, off, reps, bound.t_min);
      } else if (verdict.case_id == 3) {
        Verdict flipped;
        flipped.regime = Regime::mm;
        flipped.in_ls = true;
        flipped.case_id = 2;
        flipped.evidence = decide::transpose_evidence(verdict.evidence);
        WitnessResult inner = build_witness(transpose(g), flipped, cap);
        bound.t_min = inner.bound.t_min;
        machine = transpose_machine(inner.machine);
      } else {
        const auto& t = std::get<MixedRowThreat>(verdict.evidence);
        if (auto pure = decide::find_pure_row_threat(g)) {
          guard(plan_row_threat(g, pure->row, pure->col, reps));
          machine =
              build_row_threat(g, pure->row, pure->col, reps, bound.t_min);
        } else if (auto tie = find_tied_row(g)) {
          PlanMm2b plan = plan_mm2b(g, t, *tie, reps);
          guard(plan.t_min);
          machine = build_mm2b(g, t, plan, reps);
        } else {
          PlanMm2c plan = plan_mm2c(g, reps);
          guard(plan.t_min);
          machine = build_mm2c(g, plan, reps);
        }
      }
      break;
    }
    default:
      throw input_error("unknown regime");
  }

  if (!verify::is_spe(g, machine, verdict.regime))
    throw std::logic_error("witness failed self-verification");
  {
    auto off = verify::off_nash_states(g, machine, verdict.regime);
    if (std::find(off.begin(), off.end(), machine.start) == off.end())
      throw std::logic_error("witness start state is not off-equilibrium");
  }
  return WitnessResult{bound, std::move(machine)};
}

}  // namespace offnash::witness

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

#ifndef OFFNASH_NASH_HPP
#define OFFNASH_NASH_HPP

#include <utility>
#include <vector>

#include "offnash/game.hpp"
#include "offnash/lp.hpp"

namespace offnash::nash {

struct PureNashSet {
  std::vector<std::pair<int, int>> profiles;  // (row, col), row-major order

  bool contains(int row, int col) const;
};

/// Exhaustive scan of all rows x cols pure profiles.
PureNashSet pure_nash(const StageGame& g);

/// One per column j. The mixed-pure equilibria with column j are exactly
/// {(s1, j) : s1 in Q_j} where Q_j = {s1 in simplex(br_rows) :
/// u2(s1, j) >= u2(s1, j') for all j'}; player 1's payoff is pinned to
/// v1_value on the whole component because supports lie in br_rows.
struct MixedPureComponent {
  int col = 0;
  std::vector<int> br_rows;      // argmax_i u1(i, col)
  Rational v1_value;             // max_i u1(i, col)
  bool nonempty = false;
  Rational u2_min, u2_max;       // range of u2 over Q_j (when nonempty)
  MixedStrategy u2_min_point;    // attaining vertices, full row space
  MixedStrategy u2_max_point;
  // Q_j as constraints over the br_rows coordinates (in br_rows order),
  // each meaning coeffs . x >= rhs; the simplex conditions are implicit.
  std::vector<std::pair<std::vector<Rational>, Rational>> polytope_ge;
};

std::vector<MixedPureComponent> mixed_pure_components(const StageGame& g);

/// Membership test for (s1, component.col) in the mixed-pure Nash set.
bool component_contains(const StageGame& g, const MixedPureComponent& c,
                        const MixedStrategy& s1);

/// Equilibrium whose strategies are vertices of the two best-response
/// polytopes; the complete finite list describes the whole (possibly
/// infinite) mixed-mixed equilibrium set.
struct ExtremeEquilibrium {
  MixedStrategy s1, s2;
  Rational pay1, pay2;
};

/// Complete set of extreme equilibria via exhaustive tight-constraint
/// basis enumeration over exact rationals, filtered by complementarity
/// (every action in a support is a best response). Deterministic order:
/// lexicographic by (s1, s2); duplicates removed. Never empty.
std::vector<ExtremeEquilibrium> extreme_equilibria(const StageGame& g);

/// Per-regime description of the attainable equilibrium payoff sets.
/// v*_values hold the extreme attainable payoffs (finitely many);
/// v*_unique means the payoff is constant over the ENTIRE equilibrium
/// set of the regime, which the extreme lists decide exactly.
struct VSummary {
  Regime regime = Regime::pp;
  std::vector<Rational> v1_values, v2_values;  // sorted, deduped
  bool v1_unique = false, v2_unique = false;
  Rational v1_min, v1_max, v2_min, v2_max;     // defined when !empty
  bool empty = true;  // no equilibrium (possible only in pp/mp/pm)
};

VSummary v_summary(const StageGame& g, Regime regime);

/// The lp feasible region for "column j is a best response to s1" over
/// the simplex restricted to allowed_rows (all rows when empty).
/// Variables: one per game row; rows outside allowed_rows are fixed to 0.
lp::LinearProgram best_response_region(const StageGame& g, int col,
                                       const std::vector<int>& allowed_rows = {});

}  // namespace offnash::nash

#endif  // OFFNASH_NASH_HPP

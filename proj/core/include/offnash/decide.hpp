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

#ifndef OFFNASH_DECIDE_HPP
#define OFFNASH_DECIDE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "offnash/game.hpp"
#include "offnash/nash.hpp"

namespace offnash::decide {

/// A pure profile that is not a stage equilibrium.
struct OffProfile {
  int row = 0, col = 0;
};

/// Pure row threat: u1(row, col) < u1(better_row, col) while col is a
/// best response to row.
struct RowThreat {
  int row = 0, better_row = 0, col = 0;
};

/// Column-side mirror of RowThreat: u2(row, col) < u2(row, better_col)
/// while row is a best response to col.
struct ColThreat {
  int row = 0, col = 0, better_col = 0;
};

/// Mixed row threat: col is a best response to sigma1, sigma1 is not a
/// best response to col (bad_row carries positive probability yet pays
/// less than the column maximum). anchor is the support action whose
/// payoff differences to the rest of the support are realizable from
/// equilibrium payoff differences (-1 when not applicable).
struct MixedRowThreat {
  MixedStrategy sigma1;
  int col = 0;
  int bad_row = 0;
  int anchor = -1;
};

/// Player-swapped mirror of MixedRowThreat.
struct MixedColThreat {
  MixedStrategy sigma2;
  int row = 0;
  int bad_col = 0;
  int anchor = -1;
};

using Evidence = std::variant<std::monostate, OffProfile, RowThreat, ColThreat,
                              MixedRowThreat, MixedColThreat>;

/// Decision result for one regime. case_id reports which disjunct of the
/// regime's characterization fired, keyed by the equilibrium-value
/// multiplicities: 1 = both players have several attainable values,
/// 2 = player 1 several / player 2 one, 3 = the swapped case, 0 = none.
struct Verdict {
  Regime regime = Regime::pp;
  bool in_ls = false;
  int case_id = 0;
  Evidence evidence;
};

/// All pairwise differences of player 1's mixed-pure equilibrium values,
/// plus their gcd (nullopt when every difference is zero).
struct DifferenceSet {
  std::vector<Rational> values;  // sorted, symmetric, contains 0
  std::optional<Rational> gcd;   // gcd of the nonzero elements
};

DifferenceSet make_difference_set(const std::vector<Rational>& v1_values);

/// True iff x is a finite sum (repetition allowed, empty sum = 0) of
/// elements of d. Because d is symmetric, those sums form exactly the
/// group generated by the gcd, so the test reduces to divisibility.
bool subset_sum_reachable(const Rational& x, const DifferenceSet& d);

/// True iff some pure profile is not a stage equilibrium, decided by the
/// constant-column / constant-row scan. Equivalent to the existence of
/// any off-equilibrium profile, mixed ones included.
bool exist_off(const StageGame& g);

/// Evidence of a profile where player 2 best-responds with a pure column
/// while player 1 does not: for each column j and each row i paying less
/// than the column max, maximize x_i over the region making j a best
/// response; a positive optimum is a hit. Returns the first (j, i) hit
/// in ascending order with the lp vertex as sigma1.
std::optional<MixedRowThreat> exist_off_2best(const StageGame& g);

/// Same with the players exchanged (runs on the transposed game).
std::optional<MixedColThreat> exist_off_1best(const StageGame& g);

/// First (column-major) pure pair where the column is a best response to
/// the row but the row pays strictly less than the column maximum.
std::optional<RowThreat> find_pure_row_threat(const StageGame& g);

/// First (row-major) pure profile outside the pure equilibrium set.
std::optional<OffProfile> find_pure_off_profile(const StageGame& g);

/// Maps evidence through a player swap (for the pm regime and for
/// building player-2-side witnesses on the transposed game).
Evidence transpose_evidence(const Evidence& e);

/// Pure-pure decision.
Verdict decide_pure_pure(const StageGame& g);
/// Mixed-mixed decision (the end-to-end decision procedure).
Verdict decide_mixed_mixed(const StageGame& g);
/// Mixed-pure decision (player 1 mixes, player 2 pure).
Verdict decide_mixed_pure(const StageGame& g);
/// Dispatch on regime; pm is decided on the transposed game and the
/// evidence is mapped back.
Verdict decide(const StageGame& g, Regime regime);

/// Which strategy-access boundary flips the classification, with the
/// value-multiplicity case of the governing characterization.
struct DeltaLabel {
  bool pp_in_ls = false, mp_in_ls = false, mm_in_ls = false;
  enum class Boundary { none, pp_mp, mp_mm } boundary = Boundary::none;
  int case_id = 0;
};

struct Classification {
  Verdict pp, mp, mm;
  nash::VSummary v_pp, v_mp, v_mm;
  DeltaLabel delta;
};

/// Runs all three deciders plus the boundary labelling. A monotonicity
/// violation (pp without mp, or mp without mm) is an internal
/// inconsistency and throws std::logic_error.
Classification classify(const StageGame& g);

}  // namespace offnash::decide

#endif  // OFFNASH_DECIDE_HPP

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

#ifndef OFFNASH_GAME_HPP
#define OFFNASH_GAME_HPP

#include <string>
#include <vector>

#include "offnash/rational.hpp"

namespace offnash {

using Matrix = std::vector<std::vector<Rational>>;

/// Which players may randomize. pm is always handled by transposing the
/// game and applying mp logic; no duplicated code path exists for it.
enum class Regime { pp, mp, pm, mm };

const char* regime_name(Regime r);
Regime regime_from_name(const std::string& name);  // throws input_error

/// A finite 2-player stage game in normal form. Immutable after
/// construction; all operations on it are pure functions.
struct StageGame {
  int rows = 0;
  int cols = 0;
  Matrix u1;  // rows x cols, row player's payoffs
  Matrix u2;  // rows x cols, column player's payoffs
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

/// Validates dimensions (>= 1, both matrices rows x cols) and fills in
/// default labels when none are given. Throws input_error on mismatch.
StageGame make_game(Matrix u1, Matrix u2,
                    std::vector<std::string> row_labels = {},
                    std::vector<std::string> col_labels = {});

/// Probability vector over one player's actions: entries >= 0, exact sum 1.
struct MixedStrategy {
  std::vector<Rational> probs;

  std::vector<int> support() const;
  bool is_pure() const;
  int pure_index() const;  // requires is_pure()

  static MixedStrategy pure(int size, int index);

  friend auto operator<=>(const MixedStrategy&, const MixedStrategy&) = default;
};

/// Throws input_error unless probs is a valid distribution of the given size.
void validate_strategy(const MixedStrategy& s, int size);

struct Profile {
  MixedStrategy s1;
  MixedStrategy s2;

  friend auto operator<=>(const Profile&, const Profile&) = default;
};

Profile pure_profile(const StageGame& g, int row, int col);

/// Expected payoff of player `who` (1 or 2) under the mixed profile:
/// sum over (i, j) of s1[i] * s2[j] * u_who[i][j], exact.
Rational expected_payoff(const StageGame& g, int who, const Profile& p);

/// Payoff of player `who` when they play pure `action` against the
/// opponent's strategy in `p` (the opponent's side of `p` is used,
/// `who`'s side is ignored).
Rational payoff_against(const StageGame& g, int who, int action,
                        const Profile& p);

/// True iff `who`'s strategy in `p` attains the maximum payoff against
/// the opponent's strategy. Maximizing over pure actions suffices: the
/// payoff is linear in `who`'s mixture, so the best mixture value equals
/// the best pure-action value.
bool is_best_response(const StageGame& g, int who, const Profile& p);

/// True iff both players pass is_best_response. In pp/mp/pm the
/// pure-constrained slots of `p` must be pure; a mixed strategy in a
/// pure-only slot is an input_error, not `false`.
bool is_stage_nash(const StageGame& g, const Profile& p, Regime regime);

/// Swaps the player roles: result.u1[j][i] = g.u2[i][j] and vice versa.
StageGame transpose(const StageGame& g);

}  // namespace offnash

#endif  // OFFNASH_GAME_HPP

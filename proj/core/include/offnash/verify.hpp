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

#ifndef OFFNASH_VERIFY_HPP
#define OFFNASH_VERIFY_HPP

#include <utility>
#include <vector>

#include "offnash/machine.hpp"

namespace offnash::verify {

/// Exact subgame-perfection check by the one-shot deviation principle:
/// at every machine state reachable at every depth (deviation-reached
/// states included), for both players and every pure one-round
/// deviation, the current-round gain plus the exact continuation-value
/// difference must be <= 0. Continuation values come from backward
/// dynamic programming over (state, rounds-remaining) pairs.
/// Throws input_error on a malformed machine (bad indices, outcome not
/// covered, emission violating the regime's purity constraints).
bool is_spe(const StageGame& g, const witness::StrategyMachine& machine,
            Regime regime);

/// Ids of the states whose emitted profile is not a stage equilibrium
/// under the regime.
std::vector<int> off_nash_states(const StageGame& g,
                                 const witness::StrategyMachine& machine,
                                 Regime regime);

/// Exact pure-strategy equilibrium-payoff recursion for the repeated
/// game, horizon by horizon:
///   E(1) = payoff vectors of the pure stage equilibria;
///   a profile is supportable at horizon t iff some continuation payoff
///   w in E(t-1) deters every unilateral deviation when deviators are
///   punished with their worst value in E(t-1);
///   E(t) = { u(a) + w : a supportable with witness w }.
/// Unilateral deviations identify the deviator, so the per-player
/// minimum is the harshest credible punishment.
struct LadderLevel {
  std::vector<std::pair<Rational, Rational>> payoffs;      // E(t), sorted
  std::vector<std::pair<int, int>> supportable;            // first-round profiles
  Rational min_pay1, min_pay2;                             // defined when non-empty
};

struct PayoffSetLadder {
  std::vector<LadderLevel> levels;  // levels[t-1] is horizon t
  bool truncated = false;           // stopped early at the size cap
};

PayoffSetLadder payoff_set_ladder(const StageGame& g, int t_max,
                                  std::size_t cap = 100000);

/// True iff some horizon t <= t_max supports a first-round profile
/// outside the pure equilibrium set. Ground truth for the pure-pure
/// decision, up to the horizon bound.
bool oracle_decide_pp(const StageGame& g, int t_max);

/// Smallest horizon whose supportable set leaves the pure equilibrium
/// set, or 0 when none exists up to t_max.
int oracle_min_horizon(const StageGame& g, int t_max);

}  // namespace offnash::verify

#endif  // OFFNASH_VERIFY_HPP

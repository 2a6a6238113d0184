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

#ifndef OFFNASH_WITNESS_HPP
#define OFFNASH_WITNESS_HPP

#include "offnash/decide.hpp"
#include "offnash/machine.hpp"

namespace offnash::witness {

/// The smallest horizon the closed-form sufficiency bound certifies for
/// the verdict's case, evaluated exactly and rounded up (with the odd
/// parity of the both-values-multiple construction respected).
struct TBound {
  Regime regime = Regime::pp;
  int case_id = 0;
  long t_min = 0;
};

struct WitnessResult {
  TBound bound;
  StrategyMachine machine;
};

/// Bound only; requires verdict.in_ls (throws not_in_ls_error otherwise).
TBound t_bound(const StageGame& g, const decide::Verdict& verdict);

/// Builds an explicit subgame-perfect witness at horizon t_bound(...):
/// the start state emits the verdict's off-equilibrium profile and every
/// later state emits a stage equilibrium, with continuation play chosen
/// so that no one-shot deviation profits. The result is self-verified
/// (is_spe must accept it and the start state must be off-equilibrium)
/// before it is returned. Throws horizon_cap_error when the certified
/// horizon exceeds `cap`.
WitnessResult build_witness(const StageGame& g, const decide::Verdict& verdict,
                            long cap = 10000);

/// Swaps the player roles of a machine (emissions and outcome classes).
StrategyMachine transpose_machine(const StrategyMachine& m);

}  // namespace offnash::witness

#endif  // OFFNASH_WITNESS_HPP

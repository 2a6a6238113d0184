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

#ifndef OFFNASH_MACHINE_HPP
#define OFFNASH_MACHINE_HPP

#include <optional>
#include <vector>

#include "offnash/game.hpp"

namespace offnash::witness {

/// A set of joint outcomes (row, col): the product of a row set and a
/// column set, where an absent set means "any". {} x {} is the wildcard.
struct OutcomeClass {
  std::optional<std::vector<int>> rows;
  std::optional<std::vector<int>> cols;

  bool matches(int row, int col) const;
};

struct Transition {
  OutcomeClass on;
  int next = 0;
};

/// One machine state: the profile emitted this round plus the
/// outcome-class transitions. Transitions are tried in order and the
/// first match fires; together they must cover every outcome.
struct MachineState {
  Profile emit;
  std::vector<Transition> transitions;
};

/// Compact finite-state representation of a full behavior-strategy
/// profile for the T-round repeated game: play starts in `start`, each
/// round the current state's profile is emitted and the realized joint
/// outcome selects the successor. Off-path histories are covered because
/// transitions are total over outcomes.
struct StrategyMachine {
  long horizon = 1;
  std::vector<MachineState> states;
  int start = 0;
};

}  // namespace offnash::witness

#endif  // OFFNASH_MACHINE_HPP

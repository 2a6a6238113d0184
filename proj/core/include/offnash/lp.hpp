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

#ifndef OFFNASH_LP_HPP
#define OFFNASH_LP_HPP

#include <cstdint>
#include <vector>

#include "offnash/rational.hpp"

namespace offnash::lp {

enum class Relation { le, eq, ge };

struct Constraint {
  std::vector<Rational> row;
  Relation relation = Relation::le;
  Rational rhs;
};

/// maximize objective . x subject to the constraints; x_i >= 0 where
/// nonneg[i] (free otherwise).
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<bool> nonneg;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  Rational value;                // defined when optimal
  std::vector<Rational> point;   // a basic feasible solution when optimal

  bool optimal() const { return status == LpStatus::optimal; }
};

/// Exact simplex with Bland's anti-cycling pivot rule; two-phase start.
/// Every Optimal result is checked internally against a dual-feasible
/// certificate with equal objective value (exact strong duality); a
/// failed certificate throws std::logic_error. Deterministic: identical
/// input yields the identical outcome including the returned vertex.
LpOutcome solve(const LinearProgram& lp);

/// (min, max) of form . x over the lp's feasible region (the lp's own
/// objective is ignored). Unboundedness in either direction is a
/// std::logic_error: callers only use this over subsets of a simplex.
/// arg_min / arg_max receive the attaining vertices when non-null.
struct Bounds {
  bool feasible = false;
  Rational min, max;
  std::vector<Rational> arg_min, arg_max;
};
Bounds max_and_min(const LinearProgram& region, const std::vector<Rational>& form);

/// Number of solves performed by this process so far. Every one of them
/// carried an exact dual certificate (solve throws otherwise).
std::uint64_t solve_count();

}  // namespace offnash::lp

#endif  // OFFNASH_LP_HPP

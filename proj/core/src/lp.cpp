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

#include "offnash/lp.hpp"

#include <atomic>
#include <stdexcept>
#include <utility>

namespace offnash::lp {

namespace {

std::atomic<std::uint64_t> g_solve_count{0};

// Equality standard form: maximize c.x s.t. A x = b, x >= 0, b >= 0.
// Column layout: [split originals][slack/surplus]; artificials are
// appended by the solver itself.
struct Standard {
  int n_struct = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
  // orig[i] = {plus column, minus column or -1} for original variable i
  std::vector<std::pair<int, int>> orig;
};

Standard standardize(const LinearProgram& lp) {
  const int n = static_cast<int>(lp.objective.size());
  if (n < 1) throw input_error("linear program needs at least one variable");
  if (static_cast<int>(lp.nonneg.size()) != n)
    throw input_error("nonneg flags do not match variable count");
  for (const Constraint& con : lp.constraints)
    if (static_cast<int>(con.row.size()) != n)
      throw input_error("constraint row length does not match variable count");

  Standard s;
  for (int i = 0; i < n; ++i) {
    int plus = static_cast<int>(s.c.size());
    s.c.push_back(lp.objective[i]);
    int minus = -1;
    if (!lp.nonneg[i]) {
      minus = static_cast<int>(s.c.size());
      s.c.push_back(-lp.objective[i]);
    }
    s.orig.emplace_back(plus, minus);
  }
  const int m = static_cast<int>(lp.constraints.size());
  const int n_split = static_cast<int>(s.c.size());
  int n_slack = 0;
  for (const Constraint& con : lp.constraints)
    if (con.relation != Relation::eq) ++n_slack;
  s.n_struct = n_split + n_slack;
  s.c.resize(s.n_struct, Rational(0));

  s.a.assign(m, std::vector<Rational>(s.n_struct, Rational(0)));
  s.b.assign(m, Rational(0));
  int slack_at = n_split;
  for (int r = 0; r < m; ++r) {
    const Constraint& con = lp.constraints[r];
    for (int i = 0; i < n; ++i) {
      auto [plus, minus] = s.orig[i];
      s.a[r][plus] = con.row[i];
      if (minus >= 0) s.a[r][minus] = -con.row[i];
    }
    if (con.relation == Relation::le)
      s.a[r][slack_at++] = 1;
    else if (con.relation == Relation::ge)
      s.a[r][slack_at++] = -1;
    s.b[r] = con.rhs;
    if (s.b[r] < 0) {
      for (auto& v : s.a[r]) v = -v;
      s.b[r] = -s.b[r];
    }
  }
  return s;
}

// Dense tableau over rationals; basis[r] is the variable basic in row r.
// The rhs column stays >= 0 throughout (ratio-test invariant).
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
          std::vector<int> basis)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)),
        m_(static_cast<int>(b_.size())) {}

  const std::vector<int>& basis() const { return basis_; }
  const Rational& rhs(int r) const { return b_[r]; }

  std::vector<Rational> solution(int n_vars) const {
    std::vector<Rational> x(n_vars, Rational(0));
    for (int r = 0; r < m_; ++r)
      if (basis_[r] < n_vars) x[basis_[r]] = b_[r];
    return x;
  }

  enum class Result { optimal, unbounded };

  // Bland's rule: entering = lowest-index candidate column with positive
  // reduced cost; leaving = among minimum-ratio rows, the one whose basic
  // variable index is lowest. Guaranteed to terminate.
  Result run(const std::vector<Rational>& c, int candidate_cols) {
    while (true) {
      std::vector<Rational> cb(m_);
      for (int r = 0; r < m_; ++r) cb[r] = c[basis_[r]];
      int enter = -1;
      for (int j = 0; j < candidate_cols; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = c[j];
        for (int r = 0; r < m_; ++r)
          if (a_[r][j] != 0 && cb[r] != 0) reduced -= cb[r] * a_[r][j];
        if (reduced > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Result::optimal;
      int leave = -1;
      Rational best_ratio;
      for (int r = 0; r < m_; ++r) {
        if (a_[r][enter] <= 0) continue;
        Rational ratio = b_[r] / a_[r][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return Result::unbounded;
      pivot(leave, enter);
    }
  }

  void erase_row(int r) {
    a_.erase(a_.begin() + r);
    b_.erase(b_.begin() + r);
    basis_.erase(basis_.begin() + r);
    --m_;
  }

  const Rational& at(int r, int col) const { return a_[r][col]; }
  int rows() const { return m_; }

  void pivot(int row, int col) {
    Rational inv = 1 / a_[row][col];
    for (auto& v : a_[row]) v *= inv;
    b_[row] *= inv;
    const int n = static_cast<int>(a_[row].size());
    for (int r = 0; r < m_; ++r) {
      if (r == row || a_[r][col] == 0) continue;
      Rational factor = a_[r][col];
      for (int j = 0; j < n; ++j)
        if (a_[row][j] != 0) a_[r][j] -= factor * a_[row][j];
      b_[r] -= factor * b_[row];
    }
    basis_[row] = col;
  }

  bool is_basic(int col) const {
    for (int b : basis_)
      if (b == col) return true;
    return false;
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<int> basis_;
  int m_;
};

// Strong-duality self-test for an Optimal outcome, all exact:
//   (1) A x = b and x >= 0 against the pre-pivot system (every row,
//       dropped redundant ones included),
//   (2) y from B^T y = c_B over the kept rows (zero elsewhere) is dual
//       feasible: y.A_j >= c_j for every column,
//   (3) y.b equals the primal objective value.
void check_certificate(const Standard& s, const std::vector<int>& kept,
                       const std::vector<int>& basis,
                       const std::vector<Rational>& x, const Rational& value) {
  const int m = static_cast<int>(s.b.size());
  for (int r = 0; r < m; ++r) {
    Rational lhs = 0;
    for (int j = 0; j < s.n_struct; ++j)
      if (s.a[r][j] != 0 && x[j] != 0) lhs += s.a[r][j] * x[j];
    if (lhs != s.b[r]) throw std::logic_error("lp: primal certificate failed");
  }
  for (const Rational& v : x)
    if (v < 0) throw std::logic_error("lp: primal certificate failed");

  // Solve B^T y = c_B over the kept rows: row k of B^T is the basis[k]
  // column of A restricted to kept rows.
  const int mk = static_cast<int>(kept.size());
  if (static_cast<int>(basis.size()) != mk)
    throw std::logic_error("lp: basis does not match kept rows");
  std::vector<std::vector<Rational>> aug(mk, std::vector<Rational>(mk + 1));
  for (int k = 0; k < mk; ++k) {
    for (int r = 0; r < mk; ++r) aug[k][r] = s.a[kept[r]][basis[k]];
    aug[k][mk] = s.c[basis[k]];
  }
  std::vector<Rational> y_kept(mk, Rational(0));
  {
    std::vector<int> where(mk, -1);  // where[row] = pivot column
    int done = 0;
    for (int col = 0; col < mk && done < mk; ++col) {
      int p = -1;
      for (int r = done; r < mk; ++r)
        if (aug[r][col] != 0) { p = r; break; }
      if (p < 0) continue;
      std::swap(aug[p], aug[done]);
      Rational inv = 1 / aug[done][col];
      for (auto& v : aug[done]) v *= inv;
      for (int r = 0; r < mk; ++r) {
        if (r == done || aug[r][col] == 0) continue;
        Rational f = aug[r][col];
        for (int k2 = 0; k2 <= mk; ++k2)
          if (aug[done][k2] != 0) aug[r][k2] -= f * aug[done][k2];
      }
      where[done] = col;
      ++done;
    }
    if (done < mk) throw std::logic_error("lp: singular basis");
    for (int r = 0; r < mk; ++r) y_kept[where[r]] = aug[r][mk];
  }
  std::vector<Rational> y(m, Rational(0));
  for (int r = 0; r < mk; ++r) y[kept[r]] = y_kept[r];

  for (int j = 0; j < s.n_struct; ++j) {
    Rational yaj = 0;
    for (int r = 0; r < m; ++r)
      if (s.a[r][j] != 0 && y[r] != 0) yaj += y[r] * s.a[r][j];
    if (yaj < s.c[j]) throw std::logic_error("lp: dual certificate failed");
  }
  Rational yb = 0;
  for (int r = 0; r < m; ++r)
    if (y[r] != 0) yb += y[r] * s.b[r];
  if (yb != value) throw std::logic_error("lp: strong duality check failed");
}

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
  g_solve_count.fetch_add(1, std::memory_order_relaxed);
  Standard s = standardize(lp);
  const int m = static_cast<int>(s.b.size());
  const int n_struct = s.n_struct;
  const int n_total = n_struct + m;

  // Phase 1: one artificial per row, maximize -(sum of artificials).
  // Artificials are never candidate columns again after this.
  std::vector<std::vector<Rational>> a = s.a;
  for (int r = 0; r < m; ++r)
    for (int k = 0; k < m; ++k)
      a[r].push_back(r == k ? Rational(1) : Rational(0));
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = n_struct + r;
  Tableau t(a, s.b, basis);
  std::vector<int> kept(m);
  for (int r = 0; r < m; ++r) kept[r] = r;

  if (m > 0) {
    std::vector<Rational> phase1(n_total, Rational(0));
    for (int k = n_struct; k < n_total; ++k) phase1[k] = -1;
    t.run(phase1, n_struct);
    Rational art_sum = 0;
    for (int r = 0; r < t.rows(); ++r)
      if (t.basis()[r] >= n_struct) art_sum += t.rhs(r);
    if (art_sum != 0) return LpOutcome{LpStatus::infeasible, {}, {}};
    // Drive leftover artificials (basic at zero) out of the basis so
    // that no degenerate phase-2 pivot can push them positive again; a
    // row without any structural pivot is redundant and is dropped.
    for (int r = 0; r < t.rows();) {
      if (t.basis()[r] < n_struct) { ++r; continue; }
      int col = -1;
      for (int j = 0; j < n_struct && col < 0; ++j)
        if (t.at(r, j) != 0 && !t.is_basic(j)) col = j;
      if (col >= 0) {
        t.pivot(r, col);
        ++r;
      } else {
        t.erase_row(r);
        kept.erase(kept.begin() + r);
      }
    }
  }

  std::vector<Rational> phase2 = s.c;
  phase2.resize(n_total, Rational(0));
  if (t.run(phase2, n_struct) == Tableau::Result::unbounded)
    return LpOutcome{LpStatus::unbounded, {}, {}};

  std::vector<Rational> x = t.solution(n_struct);
  Rational value = 0;
  for (int j = 0; j < n_struct; ++j)
    if (x[j] != 0) value += s.c[j] * x[j];

  check_certificate(s, kept, t.basis(), x, value);

  std::vector<Rational> point(lp.objective.size());
  for (size_t i = 0; i < lp.objective.size(); ++i) {
    auto [plus, minus] = s.orig[i];
    point[i] = x[plus];
    if (minus >= 0) point[i] -= x[minus];
  }
  return LpOutcome{LpStatus::optimal, value, std::move(point)};
}

Bounds max_and_min(const LinearProgram& region, const std::vector<Rational>& form) {
  LinearProgram lp = region;
  lp.objective = form;
  LpOutcome hi = solve(lp);
  if (hi.status == LpStatus::infeasible) return Bounds{};
  if (hi.status == LpStatus::unbounded)
    throw std::logic_error("max_and_min: unbounded region");
  for (auto& v : lp.objective) v = -v;
  LpOutcome lo = solve(lp);
  if (!lo.optimal()) throw std::logic_error("max_and_min: unbounded region");
  Bounds b;
  b.feasible = true;
  b.max = hi.value;
  b.arg_max = hi.point;
  b.min = -lo.value;
  b.arg_min = lo.point;
  return b;
}

std::uint64_t solve_count() { return g_solve_count.load(std::memory_order_relaxed); }

}  // namespace offnash::lp

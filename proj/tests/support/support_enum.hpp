// Test-side oracle: textbook support enumeration for nondegenerate
// bimatrix games, independent of the library's vertex enumeration.

#ifndef OFFNASH_TESTS_SUPPORT_ENUM_HPP
#define OFFNASH_TESTS_SUPPORT_ENUM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "offnash/game.hpp"

namespace offnash::testoracle {

struct SupportEnumResult {
  bool degenerate = false;
  std::vector<Profile> equilibria;  // sorted by (s1, s2)
};

namespace detail {

inline std::optional<std::vector<Rational>> solve_dense(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { p = r; break; }
    if (p < 0) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    b[c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int k = 0; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  return b;
}

inline void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      cur[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  if (k <= n) rec(rec, 0, 0);
}

// Strategy of the roaming player making `fixed_support` indifferent.
// unknowns: probabilities over `roam_support` plus the payoff level.
// Returns nullopt on a singular system. Sets *degenerate on boundary
// solutions (zero probability, or an off-support action exactly tied).
inline std::optional<MixedStrategy> indifference_strategy(
    const StageGame& g, int who_roams, const std::vector<int>& fixed_support,
    const std::vector<int>& roam_support, bool* degenerate) {
  const int k = static_cast<int>(roam_support.size());
  std::vector<std::vector<Rational>> a(k + 1, std::vector<Rational>(k + 1, 0));
  std::vector<Rational> b(k + 1, 0);
  const Matrix& u = who_roams == 2 ? g.u1 : g.u2;  // opponent's payoffs
  for (int r = 0; r < k; ++r) {
    const int fixed_action = fixed_support[r];
    for (int c = 0; c < k; ++c) {
      a[r][c] = who_roams == 2 ? u[fixed_action][roam_support[c]]
                               : u[roam_support[c]][fixed_action];
    }
    a[r][k] = -1;  // minus the indifference level
  }
  for (int c = 0; c < k; ++c) a[k][c] = 1;
  b[k] = 1;
  auto sol = solve_dense(std::move(a), std::move(b));
  if (!sol) {
    // singular indifference system: bail out of the comparison entirely
    *degenerate = true;
    return std::nullopt;
  }
  const int n = who_roams == 1 ? g.rows : g.cols;
  MixedStrategy s;
  s.probs.assign(n, Rational(0));
  for (int c = 0; c < k; ++c) {
    if ((*sol)[c] < 0) return std::nullopt;  // infeasible support, not degenerate
    if ((*sol)[c] == 0) {
      *degenerate = true;
      return std::nullopt;
    }
    s.probs[roam_support[c]] = (*sol)[c];
  }
  return s;
}

}  // namespace detail

// Equal-size support enumeration. Flags the game degenerate when a pure
// best response ties, a candidate lands on a support boundary, an
// off-support action ties the equilibrium level, or a support system is
// singular while its supports could still carry an equilibrium.
inline SupportEnumResult support_enumeration(const StageGame& g) {
  SupportEnumResult result;

  // pure best-response uniqueness (support-size-1 nondegeneracy)
  for (int i = 0; i < g.rows; ++i) {
    Rational best = g.u2[i][0];
    int count = 1;
    for (int j = 1; j < g.cols; ++j) {
      if (g.u2[i][j] > best) {
        best = g.u2[i][j];
        count = 1;
      } else if (g.u2[i][j] == best) {
        ++count;
      }
    }
    if (count > 1) result.degenerate = true;
  }
  for (int j = 0; j < g.cols; ++j) {
    Rational best = g.u1[0][j];
    int count = 1;
    for (int i = 1; i < g.rows; ++i) {
      if (g.u1[i][j] > best) {
        best = g.u1[i][j];
        count = 1;
      } else if (g.u1[i][j] == best) {
        ++count;
      }
    }
    if (count > 1) result.degenerate = true;
  }
  if (result.degenerate) return result;

  const int kmax = std::min(g.rows, g.cols);
  for (int k = 1; k <= kmax; ++k) {
    std::vector<std::vector<int>> row_supports, col_supports;
    detail::subsets(g.rows, k, row_supports);
    detail::subsets(g.cols, k, col_supports);
    for (const auto& s1 : row_supports) {
      for (const auto& s2 : col_supports) {
        MixedStrategy x, y;
        if (k == 1) {
          x = MixedStrategy::pure(g.rows, s1[0]);
          y = MixedStrategy::pure(g.cols, s2[0]);
        } else {
          bool degenerate = false;
          auto ys = detail::indifference_strategy(g, 2, s1, s2, &degenerate);
          if (degenerate) {
            result.degenerate = true;
            return result;
          }
          if (!ys) continue;
          auto xs = detail::indifference_strategy(g, 1, s2, s1, &degenerate);
          if (degenerate) {
            result.degenerate = true;
            return result;
          }
          if (!xs) continue;
          x = *xs;
          y = *ys;
        }
        Profile p{x, y};
        if (!is_best_response(g, 1, p) || !is_best_response(g, 2, p)) continue;
        // an off-support action exactly tying the level is a degeneracy
        Rational v1 = expected_payoff(g, 1, p);
        Rational v2 = expected_payoff(g, 2, p);
        for (int i = 0; i < g.rows; ++i) {
          if (x.probs[i] == 0 && payoff_against(g, 1, i, p) == v1)
            result.degenerate = true;
        }
        for (int j = 0; j < g.cols; ++j) {
          if (y.probs[j] == 0 && payoff_against(g, 2, j, p) == v2)
            result.degenerate = true;
        }
        if (result.degenerate) return result;
        result.equilibria.push_back(std::move(p));
      }
    }
  }
  std::sort(result.equilibria.begin(), result.equilibria.end());
  return result;
}

}  // namespace offnash::testoracle

#endif  // OFFNASH_TESTS_SUPPORT_ENUM_HPP

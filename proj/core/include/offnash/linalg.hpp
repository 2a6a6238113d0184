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

#ifndef OFFNASH_LINALG_HPP
#define OFFNASH_LINALG_HPP

#include <optional>
#include <vector>

#include "offnash/rational.hpp"

namespace offnash {

/// Solves the square system A x = b exactly by Gauss-Jordan elimination.
/// Returns nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { p = r; break; }
    if (p < 0) return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(b[p], b[col]);
    Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int k = col; k < n; ++k)
        if (a[col][k] != 0) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace offnash

#endif  // OFFNASH_LINALG_HPP

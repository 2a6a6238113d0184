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

#include <benchmark/benchmark.h>

#include "offnash/decide.hpp"
#include "offnash/nash.hpp"
#include "offnash/rng.hpp"
#include "offnash/verify.hpp"
#include "offnash/witness.hpp"

namespace {

using namespace offnash;

StageGame random_game(SplitMix64& rng, int rows, int cols, long lo, long hi) {
  Matrix u1(rows, std::vector<Rational>(cols));
  Matrix u2(rows, std::vector<Rational>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) u1[i][j] = rng.range(lo, hi);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) u2[i][j] = rng.range(lo, hi);
  return make_game(u1, u2);
}

void bm_extreme_equilibria(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(7);
  std::vector<StageGame> games;
  for (int k = 0; k < 16; ++k) games.push_back(random_game(rng, n, n, 0, 9));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nash::extreme_equilibria(games[i % games.size()]));
    ++i;
  }
}
BENCHMARK(bm_extreme_equilibria)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void bm_classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(11);
  std::vector<StageGame> games;
  for (int k = 0; k < 16; ++k) games.push_back(random_game(rng, n, n, 0, 3));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide::classify(games[i % games.size()]));
    ++i;
  }
}
BENCHMARK(bm_classify)->Arg(2)->Arg(3)->Arg(4);

void bm_oracle_ladder(benchmark::State& state) {
  SplitMix64 rng(13);
  std::vector<StageGame> games;
  for (int k = 0; k < 16; ++k) games.push_back(random_game(rng, 3, 3, 0, 3));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify::payoff_set_ladder(games[i % games.size()], 8));
    ++i;
  }
}
BENCHMARK(bm_oracle_ladder);

void bm_witness_roundtrip(benchmark::State& state) {
  StageGame g = make_game({{3, 0}, {2, 1}}, {{1, 1}, {1, 1}});
  decide::Verdict v = decide::decide_pure_pure(g);
  for (auto _ : state) {
    auto result = witness::build_witness(g, v);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(bm_witness_roundtrip);

}  // namespace

BENCHMARK_MAIN();

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

#include "offnash/verify.hpp"

#include <algorithm>
#include <set>

#include "offnash/nash.hpp"

namespace offnash::verify {

using witness::StrategyMachine;

namespace {

void validate_machine(const StageGame& g, const StrategyMachine& m,
                      Regime regime) {
  if (m.horizon < 1) throw input_error("machine horizon must be >= 1");
  if (m.states.empty()) throw input_error("machine has no states");
  if (m.start < 0 || m.start >= static_cast<int>(m.states.size()))
    throw input_error("machine start state out of range");
  const bool p1_pure_only = regime == Regime::pp || regime == Regime::pm;
  const bool p2_pure_only = regime == Regime::pp || regime == Regime::mp;
  for (const auto& st : m.states) {
    validate_strategy(st.emit.s1, g.rows);
    validate_strategy(st.emit.s2, g.cols);
    if (p1_pure_only && !st.emit.s1.is_pure())
      throw input_error("machine emits a mixed row strategy in a pure regime");
    if (p2_pure_only && !st.emit.s2.is_pure())
      throw input_error("machine emits a mixed column strategy in a pure regime");
    for (const auto& tr : st.transitions) {
      if (tr.next < 0 || tr.next >= static_cast<int>(m.states.size()))
        throw input_error("machine transition target out of range");
      if (tr.on.rows)
        for (int r : *tr.on.rows)
          if (r < 0 || r >= g.rows)
            throw input_error("machine transition row out of range");
      if (tr.on.cols)
        for (int c : *tr.on.cols)
          if (c < 0 || c >= g.cols)
            throw input_error("machine transition column out of range");
    }
  }
}

int successor(const StrategyMachine& m, int state, int row, int col) {
  for (const auto& tr : m.states[state].transitions)
    if (tr.on.matches(row, col)) return tr.next;
  throw input_error("machine does not cover some outcome");
}

}  // namespace

bool is_spe(const StageGame& g, const StrategyMachine& m, Regime regime) {
  validate_machine(g, m, regime);
  const int n_states = static_cast<int>(m.states.size());
  const long T = m.horizon;

  // next[s] precomputed as a dense outcome table
  std::vector<std::vector<int>> next(n_states,
                                     std::vector<int>(g.rows * g.cols));
  for (int s = 0; s < n_states; ++s)
    for (int i = 0; i < g.rows; ++i)
      for (int j = 0; j < g.cols; ++j)
        next[s][i * g.cols + j] = successor(m, s, i, j);

  // reachable[t][s]: state s can be live in round t+1 under SOME history
  // (deviations included, hence every outcome is followed)
  std::vector<std::set<int>> reachable(T);
  reachable[0].insert(m.start);
  for (long t = 0; t + 1 < T; ++t)
    for (int s : reachable[t])
      for (int o = 0; o < g.rows * g.cols; ++o)
        reachable[t + 1].insert(next[s][o]);

  // Single backward pass over rounds remaining, keeping two value
  // layers; the one-shot deviation checks for depth T - r run as soon
  // as layer r is complete.
  using Values = std::vector<std::pair<Rational, Rational>>;
  Values prev;  // rounds remaining r - 1
  Values cur(n_states, {Rational(0), Rational(0)});
  for (long r = 1; r <= T; ++r) {
    prev = std::move(cur);
    cur.assign(n_states, {Rational(0), Rational(0)});
    for (int s = 0; s < n_states; ++s) {
      const Profile& e = m.states[s].emit;
      Rational v1 = expected_payoff(g, 1, e);
      Rational v2 = expected_payoff(g, 2, e);
      if (r > 1) {
        for (int i = 0; i < g.rows; ++i) {
          if (e.s1.probs[i] == 0) continue;
          for (int j = 0; j < g.cols; ++j) {
            if (e.s2.probs[j] == 0) continue;
            const Rational w = e.s1.probs[i] * e.s2.probs[j];
            const auto& nv = prev[next[s][i * g.cols + j]];
            v1 += w * nv.first;
            v2 += w * nv.second;
          }
        }
      }
      cur[s] = {v1, v2};
    }
    for (int s : reachable[T - r]) {
      const Profile& e = m.states[s].emit;
      const auto& own = cur[s];
      for (int dev = 0; dev < g.rows; ++dev) {
        Rational gain = 0;
        for (int j = 0; j < g.cols; ++j) {
          if (e.s2.probs[j] == 0) continue;
          gain += e.s2.probs[j] * g.u1[dev][j];
          if (r > 1) gain += e.s2.probs[j] * prev[next[s][dev * g.cols + j]].first;
        }
        if (gain > own.first) return false;
      }
      for (int dev = 0; dev < g.cols; ++dev) {
        Rational gain = 0;
        for (int i = 0; i < g.rows; ++i) {
          if (e.s1.probs[i] == 0) continue;
          gain += e.s1.probs[i] * g.u2[i][dev];
          if (r > 1) gain += e.s1.probs[i] * prev[next[s][i * g.cols + dev]].second;
        }
        if (gain > own.second) return false;
      }
    }
  }
  return true;
}

std::vector<int> off_nash_states(const StageGame& g, const StrategyMachine& m,
                                 Regime regime) {
  validate_machine(g, m, regime);
  std::vector<int> result;
  for (int s = 0; s < static_cast<int>(m.states.size()); ++s)
    if (!is_stage_nash(g, m.states[s].emit, regime)) result.push_back(s);
  return result;
}

PayoffSetLadder payoff_set_ladder(const StageGame& g, int t_max,
                                  std::size_t cap) {
  if (t_max < 1) throw input_error("ladder horizon must be >= 1");
  PayoffSetLadder ladder;

  LadderLevel base;
  for (auto [i, j] : nash::pure_nash(g).profiles) {
    base.payoffs.emplace_back(g.u1[i][j], g.u2[i][j]);
    base.supportable.emplace_back(i, j);
  }
  std::sort(base.payoffs.begin(), base.payoffs.end());
  base.payoffs.erase(std::unique(base.payoffs.begin(), base.payoffs.end()),
                     base.payoffs.end());
  auto set_minima = [](LadderLevel& level) {
    if (level.payoffs.empty()) return;
    level.min_pay1 = level.payoffs.front().first;
    level.min_pay2 = level.payoffs.front().second;
    for (const auto& [a, b] : level.payoffs) {
      level.min_pay1 = std::min(level.min_pay1, a);
      level.min_pay2 = std::min(level.min_pay2, b);
    }
  };
  set_minima(base);
  ladder.levels.push_back(std::move(base));

  for (int t = 2; t <= t_max; ++t) {
    const LadderLevel& prev = ladder.levels.back();
    if (prev.payoffs.empty()) {
      // no equilibrium at any horizon
      ladder.levels.push_back(LadderLevel{});
      continue;
    }
    LadderLevel level;
    std::set<std::pair<Rational, Rational>> payoffs;
    for (int i = 0; i < g.rows; ++i) {
      for (int j = 0; j < g.cols; ++j) {
        bool supported = false;
        for (const auto& w : prev.payoffs) {
          bool ok = true;
          for (int dev = 0; dev < g.rows && ok; ++dev)
            if (g.u1[i][j] + w.first < g.u1[dev][j] + prev.min_pay1) ok = false;
          for (int dev = 0; dev < g.cols && ok; ++dev)
            if (g.u2[i][j] + w.second < g.u2[i][dev] + prev.min_pay2) ok = false;
          if (!ok) continue;
          supported = true;
          payoffs.emplace(g.u1[i][j] + w.first, g.u2[i][j] + w.second);
          if (payoffs.size() > cap) {
            ladder.truncated = true;
            return ladder;
          }
        }
        if (supported) level.supportable.emplace_back(i, j);
      }
    }
    level.payoffs.assign(payoffs.begin(), payoffs.end());
    set_minima(level);
    ladder.levels.push_back(std::move(level));
  }
  return ladder;
}

int oracle_min_horizon(const StageGame& g, int t_max) {
  PayoffSetLadder ladder = payoff_set_ladder(g, t_max);
  nash::PureNashSet ne = nash::pure_nash(g);
  for (int t = 1; t <= static_cast<int>(ladder.levels.size()); ++t) {
    for (auto [i, j] : ladder.levels[t - 1].supportable)
      if (!ne.contains(i, j)) return t;
  }
  return 0;
}

bool oracle_decide_pp(const StageGame& g, int t_max) {
  return oracle_min_horizon(g, t_max) != 0;
}

}  // namespace offnash::verify

#include <doctest.h>

#include <algorithm>
#include <set>

#include "games.hpp"
#include "offnash/nash.hpp"
#include "offnash/verify.hpp"

using namespace offnash;
namespace tg = offnash::testgames;
using witness::MachineState;
using witness::OutcomeClass;
using witness::StrategyMachine;
using witness::Transition;

namespace {

OutcomeClass rows_class(std::vector<int> rows) {
  OutcomeClass c;
  c.rows = std::move(rows);
  return c;
}

// hand-built two-round machine for the threat game: open off-equilibrium,
// then reward the row player for cooperating and punish a deviation
StrategyMachine threat_machine(const StageGame& g, bool swapped) {
  StrategyMachine m;
  m.horizon = 2;
  MachineState start;
  start.emit = pure_profile(g, 1, 0);  // (b1, a2)
  MachineState reward;
  reward.emit = pure_profile(g, swapped ? 1 : 0, swapped ? 1 : 0);
  reward.transitions.push_back(Transition{{}, 1});
  MachineState punish;
  punish.emit = pure_profile(g, swapped ? 0 : 1, swapped ? 0 : 1);
  punish.transitions.push_back(Transition{{}, 2});
  start.transitions.push_back(Transition{rows_class({1}), 1});
  start.transitions.push_back(Transition{{}, 2});
  m.states = {start, reward, punish};
  m.start = 0;
  return m;
}

// grim machine on the dominating-threat game: (a1, a2) for the first
// t - 2 rounds with a switch to (c1, c2) after any deviation, then
// (b1, b2) twice
StrategyMachine grim_machine(const StageGame& g, int t) {
  StrategyMachine m;
  m.horizon = t;
  // states: 0..t-3 cooperative chain, then reward pair, then grim loop
  const int reward_first = t - 2;
  const int grim = t;
  for (int k = 0; k < t - 2; ++k) {
    MachineState s;
    s.emit = pure_profile(g, 0, 0);
    OutcomeClass stay;
    stay.rows = std::vector<int>{0};
    stay.cols = std::vector<int>{0};
    s.transitions.push_back(Transition{stay, k + 1 == t - 2 ? reward_first : k + 1});
    s.transitions.push_back(Transition{{}, grim});
    m.states.push_back(std::move(s));
  }
  for (int k = 0; k < 2; ++k) {
    MachineState s;
    s.emit = pure_profile(g, 1, 1);
    s.transitions.push_back(Transition{{}, reward_first + 1});
    m.states.push_back(std::move(s));
  }
  MachineState s;
  s.emit = pure_profile(g, 2, 2);
  s.transitions.push_back(Transition{{}, grim});
  m.states.push_back(std::move(s));
  m.start = 0;
  return m;
}

// all-or-nothing continuation assignments, the exhaustive counterpart of
// the per-player-minimum punishments used by the library's ladder
struct FullLadder {
  std::vector<std::vector<std::pair<Rational, Rational>>> payoff_sets;
  std::vector<std::vector<std::pair<int, int>>> supportable;
};

FullLadder exhaustive_ladder(const StageGame& g, int t_max) {
  FullLadder full;
  std::vector<std::pair<Rational, Rational>> base;
  std::vector<std::pair<int, int>> base_supportable;
  for (int i = 0; i < g.rows; ++i) {
    for (int j = 0; j < g.cols; ++j) {
      if (is_stage_nash(g, pure_profile(g, i, j), Regime::pp)) {
        base.emplace_back(g.u1[i][j], g.u2[i][j]);
        base_supportable.emplace_back(i, j);
      }
    }
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  full.payoff_sets.push_back(base);
  full.supportable.push_back(base_supportable);
  for (int t = 2; t <= t_max; ++t) {
    const auto& prev = full.payoff_sets.back();
    std::set<std::pair<Rational, Rational>> next;
    std::vector<std::pair<int, int>> supportable;
    for (int i = 0; i < g.rows; ++i) {
      for (int j = 0; j < g.cols; ++j) {
        bool profile_ok = false;
        for (const auto& w : prev) {
          // every deviation must be deterred by SOME continuation
          bool ok = true;
          for (int dev = 0; dev < g.rows && ok; ++dev) {
            bool deterred = false;
            for (const auto& pun : prev)
              if (g.u1[i][j] + w.first >= g.u1[dev][j] + pun.first)
                deterred = true;
            ok = deterred;
          }
          for (int dev = 0; dev < g.cols && ok; ++dev) {
            bool deterred = false;
            for (const auto& pun : prev)
              if (g.u2[i][j] + w.second >= g.u2[i][dev] + pun.second)
                deterred = true;
            ok = deterred;
          }
          if (ok) {
            profile_ok = true;
            next.emplace(g.u1[i][j] + w.first, g.u2[i][j] + w.second);
          }
        }
        if (profile_ok) supportable.emplace_back(i, j);
      }
    }
    full.payoff_sets.emplace_back(next.begin(), next.end());
    full.supportable.push_back(std::move(supportable));
  }
  return full;
}

}  // namespace

TEST_CASE("the two-round threat machine is subgame perfect") {
  StageGame g = tg::threat_2x2();
  StrategyMachine m = threat_machine(g, false);
  CHECK(verify::is_spe(g, m, Regime::pp));
  CHECK(verify::off_nash_states(g, m, Regime::pp) == std::vector<int>{0});
}

TEST_CASE("swapping reward and punishment breaks subgame perfection") {
  StageGame g = tg::threat_2x2();
  StrategyMachine m = threat_machine(g, true);
  CHECK(!verify::is_spe(g, m, Regime::pp));
}

TEST_CASE("a single-round equilibrium machine is subgame perfect") {
  StageGame g = tg::threat_2x2();
  StrategyMachine m;
  m.horizon = 1;
  MachineState s;
  s.emit = pure_profile(g, 0, 0);
  s.transitions.push_back(Transition{{}, 0});
  m.states = {s};
  CHECK(verify::is_spe(g, m, Regime::pp));
  CHECK(verify::off_nash_states(g, m, Regime::pp).empty());
}

TEST_CASE("the grim machine on the dominating-threat game") {
  StageGame g = tg::dominating_threat_3x3();
  for (int t : {3, 5, 8}) {
    StrategyMachine m = grim_machine(g, t);
    CHECK(verify::is_spe(g, m, Regime::pp));
    std::vector<int> expected;
    for (int k = 0; k < t - 2; ++k) expected.push_back(k);
    CHECK(verify::off_nash_states(g, m, Regime::pp) == expected);
  }
}

TEST_CASE("repeating a fixed equilibrium is subgame perfect at any horizon") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    StageGame g = tg::random_game(rng, 1 + rng.range(1, 3), 1 + rng.range(1, 3),
                                  0, 3);
    auto ne = nash::pure_nash(g);
    if (ne.profiles.empty()) continue;
    auto [i, j] = ne.profiles.front();
    for (long t : {1L, 2L, 7L}) {
      StrategyMachine m;
      m.horizon = t;
      MachineState s;
      s.emit = pure_profile(g, i, j);
      s.transitions.push_back(Transition{{}, 0});
      m.states = {s};
      CHECK(verify::is_spe(g, m, Regime::pp));
    }
  }
}

TEST_CASE("history-blind machines are subgame perfect exactly when every "
          "round is an equilibrium") {
  SplitMix64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    StageGame g = tg::random_game(rng, 2, 2, 0, 3);
    // three rounds, each an arbitrary pure profile, no conditioning
    std::vector<std::pair<int, int>> rounds;
    for (int k = 0; k < 3; ++k)
      rounds.emplace_back(rng.range(0, 1), rng.range(0, 1));
    StrategyMachine m;
    m.horizon = 3;
    for (int k = 0; k < 3; ++k) {
      MachineState s;
      s.emit = pure_profile(g, rounds[k].first, rounds[k].second);
      s.transitions.push_back(Transition{{}, std::min(k + 1, 2)});
      m.states.push_back(std::move(s));
    }
    bool all_ne = true;
    for (auto [i, j] : rounds)
      if (!is_stage_nash(g, pure_profile(g, i, j), Regime::pp)) all_ne = false;
    CHECK(verify::is_spe(g, m, Regime::pp) == all_ne);
  }
}

TEST_CASE("malformed machines are rejected") {
  StageGame g = tg::threat_2x2();
  StrategyMachine m = threat_machine(g, false);
  m.states[0].transitions.pop_back();  // outcome (a1, *) now uncovered
  CHECK_THROWS_AS(verify::is_spe(g, m, Regime::pp), input_error);

  StrategyMachine bad = threat_machine(g, false);
  bad.states[1].transitions[0].next = 9;
  CHECK_THROWS_AS(verify::is_spe(g, bad, Regime::pp), input_error);

  StrategyMachine mixed = threat_machine(g, false);
  mixed.states[0].emit.s1.probs = {Rational(1, 2), Rational(1, 2)};
  CHECK_THROWS_AS(verify::is_spe(g, mixed, Regime::pp), input_error);
  CHECK_NOTHROW(verify::is_spe(g, mixed, Regime::mp));
}

TEST_CASE("the payoff ladder of the threat game") {
  StageGame g = tg::threat_2x2();
  verify::PayoffSetLadder ladder = verify::payoff_set_ladder(g, 2);
  REQUIRE(ladder.levels.size() == 2);
  using Pay = std::vector<std::pair<Rational, Rational>>;
  using Sup = std::vector<std::pair<int, int>>;
  CHECK(ladder.levels[0].payoffs == Pay{{1, 1}, {3, 1}});
  CHECK(ladder.levels[0].supportable == Sup{{0, 0}, {1, 1}});
  // the off-equilibrium opening (b1, a2) becomes supportable at two rounds
  const auto& sup2 = ladder.levels[1].supportable;
  CHECK(std::find(sup2.begin(), sup2.end(), std::make_pair(1, 0)) != sup2.end());
}

TEST_CASE("no pure equilibrium means an empty ladder at every horizon") {
  StageGame g = tg::no_pure_ne_2x4();
  verify::PayoffSetLadder ladder = verify::payoff_set_ladder(g, 4);
  for (const auto& level : ladder.levels) {
    CHECK(level.payoffs.empty());
    CHECK(level.supportable.empty());
  }
  CHECK(!verify::oracle_decide_pp(g, 4));
}

TEST_CASE("oracle horizons on the golden games") {
  CHECK(verify::oracle_min_horizon(tg::threat_2x2(), 3) == 2);
  CHECK(verify::oracle_decide_pp(tg::threat_2x2(), 2));
  CHECK(!verify::oracle_decide_pp(tg::mp_only_threat_3x2(), 6));
  CHECK(!verify::oracle_decide_pp(make_game({{5}}, {{7}}), 5));
  // one cooperative round backed by the (b1, b2) continuation is already
  // supportable at two rounds: the deviation gain of 1 exactly cancels
  CHECK(verify::oracle_min_horizon(tg::dominating_threat_3x3(), 4) == 2);
}

TEST_CASE("supportable profiles always include the stage equilibria") {
  SplitMix64 rng(63);
  for (int trial = 0; trial < 15; ++trial) {
    StageGame g = tg::random_game(rng, 1 + rng.range(1, 3), 1 + rng.range(1, 3),
                                  0, 3);
    auto ne = nash::pure_nash(g);
    verify::PayoffSetLadder ladder = verify::payoff_set_ladder(g, 5);
    for (const auto& level : ladder.levels) {
      if (ne.profiles.empty()) break;
      for (auto [i, j] : ne.profiles)
        CHECK(std::find(level.supportable.begin(), level.supportable.end(),
                        std::make_pair(i, j)) != level.supportable.end());
    }
  }
}

TEST_CASE("the ladder refuses with a partial result at the size cap") {
  StageGame g = tg::dominating_threat_3x3();
  verify::PayoffSetLadder full = verify::payoff_set_ladder(g, 6);
  CHECK(!full.truncated);
  verify::PayoffSetLadder cut = verify::payoff_set_ladder(g, 6, 3);
  CHECK(cut.truncated);
  CHECK(cut.levels.size() < full.levels.size());
  // the completed prefix agrees
  for (size_t t = 0; t + 1 < cut.levels.size(); ++t)
    CHECK(cut.levels[t].payoffs == full.levels[t].payoffs);
}

TEST_CASE("minimum punishments lose nothing against exhaustive assignments") {
  SplitMix64 rng(64);
  for (int trial = 0; trial < 25; ++trial) {
    StageGame g = tg::random_game(rng, 2, 2, 0, 3);
    FullLadder full = exhaustive_ladder(g, 3);
    verify::PayoffSetLadder ladder = verify::payoff_set_ladder(g, 3);
    for (int t = 1; t <= 3; ++t) {
      CHECK(ladder.levels[t - 1].payoffs == full.payoff_sets[t - 1]);
      CHECK(ladder.levels[t - 1].supportable == full.supportable[t - 1]);
    }
  }
}

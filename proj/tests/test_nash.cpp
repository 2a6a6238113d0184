#include <doctest.h>

#include <algorithm>

#include "games.hpp"
#include "offnash/nash.hpp"
#include "support_enum.hpp"

using namespace offnash;
namespace tg = offnash::testgames;

namespace {

MixedStrategy mix(std::vector<Rational> probs) {
  MixedStrategy s;
  s.probs = std::move(probs);
  return s;
}

const nash::MixedPureComponent& component_of(
    const std::vector<nash::MixedPureComponent>& cs, int col) {
  for (const auto& c : cs)
    if (c.col == col) return c;
  REQUIRE(false);
  return cs.front();
}

}  // namespace

TEST_CASE("pure equilibria of the golden games") {
  using P = std::vector<std::pair<int, int>>;
  CHECK(nash::pure_nash(tg::threat_2x2()).profiles == P{{0, 0}, {1, 1}});
  CHECK(nash::pure_nash(tg::mp_only_threat_3x2()).profiles ==
        P{{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  CHECK(nash::pure_nash(tg::no_pure_ne_2x4()).profiles.empty());
  CHECK(nash::pure_nash(tg::dominating_threat_3x3()).profiles ==
        P{{1, 1}, {2, 2}});
}

TEST_CASE("pure_nash agrees with is_stage_nash on random games") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    StageGame g = tg::random_game(rng, 1 + rng.range(1, 3), 1 + rng.range(1, 3),
                                  0, 3);
    nash::PureNashSet ne = nash::pure_nash(g);
    for (int i = 0; i < g.rows; ++i)
      for (int j = 0; j < g.cols; ++j)
        CHECK(ne.contains(i, j) ==
              is_stage_nash(g, pure_profile(g, i, j), Regime::pp));
  }
}

TEST_CASE("mixed-pure components of the no-pure-equilibrium game") {
  StageGame g = tg::no_pure_ne_2x4();
  auto components = nash::mixed_pure_components(g);
  REQUIRE(components.size() == 4);
  CHECK(!component_of(components, 0).nonempty);
  CHECK(!component_of(components, 3).nonempty);
  const auto& b2 = component_of(components, 1);
  const auto& c2 = component_of(components, 2);
  REQUIRE(b2.nonempty);
  REQUIRE(c2.nonempty);
  CHECK(b2.v1_value == Rational(1));
  CHECK(c2.v1_value == Rational(2));
  CHECK(b2.u2_min == Rational(3));
  CHECK(b2.u2_max == Rational(3));
  CHECK(c2.u2_min == Rational(3));
  CHECK(c2.u2_max == Rational(3));

  // membership: exactly 1/4 <= weight on the first row <= 3/4
  for (const auto& c : {b2, c2}) {
    for (const Rational& w :
         {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      MixedStrategy s = mix({w, 1 - w});
      CHECK(nash::component_contains(g, c, s));
      CHECK(is_stage_nash(g, Profile{s, MixedStrategy::pure(g.cols, c.col)},
                          Regime::mp));
    }
    for (const Rational& w : {Rational(1, 8), Rational(7, 8)}) {
      MixedStrategy s = mix({w, 1 - w});
      CHECK(!nash::component_contains(g, c, s));
      CHECK(!is_stage_nash(g, Profile{s, MixedStrategy::pure(g.cols, c.col)},
                           Regime::mp));
    }
  }
}

TEST_CASE("mixed-pure summary of the fractional-gap game") {
  StageGame g = tg::fractional_gap_3x2();
  nash::VSummary v = nash::v_summary(g, Regime::mp);
  CHECK(v.v1_values == std::vector<Rational>{2, 3});
  CHECK(v.v2_values == std::vector<Rational>{2});
  CHECK(!v.v1_unique);
  CHECK(v.v2_unique);
}

TEST_CASE("a single-action game has one nonempty component") {
  StageGame g = make_game({{5}}, {{7}});
  auto components = nash::mixed_pure_components(g);
  REQUIRE(components.size() == 1);
  CHECK(components[0].nonempty);
  CHECK(components[0].v1_value == Rational(5));
  CHECK(nash::extreme_equilibria(g).size() == 1);
}

TEST_CASE("extreme equilibria of the dominating-threat game") {
  StageGame g = tg::dominating_threat_3x3();
  auto eqs = nash::extreme_equilibria(g);
  REQUIRE(eqs.size() == 3);
  // sorted lexicographically by (s1, s2)
  CHECK(eqs[0].s1 == mix({0, 0, 1}));
  CHECK(eqs[0].s2 == mix({0, 0, 1}));
  CHECK(eqs[0].pay1 == Rational(1));
  CHECK(eqs[0].pay2 == Rational(1));
  CHECK(eqs[1].s1 == mix({0, Rational(1, 2), Rational(1, 2)}));
  CHECK(eqs[1].s2 == mix({0, Rational(1, 2), Rational(1, 2)}));
  CHECK(eqs[1].pay1 == Rational(1));
  CHECK(eqs[1].pay2 == Rational(1));
  CHECK(eqs[2].s1 == mix({0, 1, 0}));
  CHECK(eqs[2].s2 == mix({0, 1, 0}));
  CHECK(eqs[2].pay1 == Rational(2));
  CHECK(eqs[2].pay2 == Rational(2));
}

TEST_CASE("mixed-mixed values of the long-horizon family span an interval") {
  StageGame g = tg::alpha_horizon_3x2(1);
  nash::VSummary v = nash::v_summary(g, Regime::mm);
  CHECK(!v.empty);
  CHECK(v.v1_min == Rational(2));
  CHECK(v.v1_max == Rational(3));
  CHECK(!v.v1_unique);
  CHECK(v.v2_values == std::vector<Rational>{2});
  CHECK(v.v2_unique);
}

TEST_CASE("value summaries across regimes for the golden games") {
  {
    nash::VSummary v = nash::v_summary(tg::mp_only_threat_3x2(), Regime::pp);
    CHECK(v.v1_values == std::vector<Rational>{2, 3});
    CHECK(!v.v1_unique);
    CHECK(v.v2_values == std::vector<Rational>{2});
    CHECK(v.v2_unique);
  }
  {
    nash::VSummary v = nash::v_summary(tg::new_values_mp_2x3(), Regime::pp);
    CHECK(v.v1_unique);
    CHECK(v.v2_unique);
  }
  {
    nash::VSummary v = nash::v_summary(tg::new_values_mp_2x3(), Regime::mp);
    CHECK(!v.v1_unique);
    CHECK(!v.v2_unique);
  }
  {
    // empty mixed-pure set on the flipped no-pure game, in both views
    nash::VSummary v = nash::v_summary(tg::no_mp_ne_4x2(), Regime::mp);
    CHECK(v.empty);
    CHECK(nash::v_summary(tg::no_pure_ne_2x4(), Regime::pm).empty);
    // the flipped game seen from the pm side recovers the 2x4 mp values
    nash::VSummary pm = nash::v_summary(tg::no_mp_ne_4x2(), Regime::pm);
    CHECK(!pm.empty);
    CHECK(pm.v1_values == std::vector<Rational>{3});
    CHECK(pm.v2_values == std::vector<Rational>{1, 2});
  }
}

TEST_CASE("containment: pure within mixed-pure within mixed-mixed") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    StageGame g = tg::random_game(rng, 1 + rng.range(1, 3), 1 + rng.range(1, 3),
                                  0, 3);
    for (auto [i, j] : nash::pure_nash(g).profiles) {
      Profile p = pure_profile(g, i, j);
      CHECK(is_stage_nash(g, p, Regime::mp));
      CHECK(is_stage_nash(g, p, Regime::mm));
    }
    for (const auto& c : nash::mixed_pure_components(g)) {
      if (!c.nonempty) continue;
      for (const MixedStrategy& s : {c.u2_min_point, c.u2_max_point}) {
        Profile p{s, MixedStrategy::pure(g.cols, c.col)};
        CHECK(is_stage_nash(g, p, Regime::mp));
        CHECK(is_stage_nash(g, p, Regime::mm));
      }
    }
    for (const auto& eq : nash::extreme_equilibria(g))
      CHECK(is_stage_nash(g, Profile{eq.s1, eq.s2}, Regime::mm));
  }
}

TEST_CASE("component membership matches the equilibrium test on a grid") {
  SplitMix64 rng(82);
  for (int trial = 0; trial < 12; ++trial) {
    StageGame g = tg::random_game(rng, 2, 1 + rng.range(1, 3), 0, 3);
    auto components = nash::mixed_pure_components(g);
    for (const auto& c : components) {
      // sweep the full 2-row simplex in sixteenths
      for (int k = 0; k <= 16; ++k) {
        MixedStrategy s;
        s.probs = {Rational(k, 16), Rational(16 - k, 16)};
        bool in_set = is_stage_nash(
            g, Profile{s, MixedStrategy::pure(g.cols, c.col)}, Regime::mp);
        CHECK(in_set == nash::component_contains(g, c, s));
        if (in_set) CHECK(c.nonempty);
      }
    }
  }
}

TEST_CASE("player 1's payoff is pinned on each mixed-pure component") {
  SplitMix64 rng(78);
  for (int trial = 0; trial < 20; ++trial) {
    StageGame g = tg::random_game(rng, 1 + rng.range(1, 3), 1 + rng.range(1, 3),
                                  0, 4);
    for (const auto& c : nash::mixed_pure_components(g)) {
      if (!c.nonempty) continue;
      MixedStrategy midpoint;
      for (int i = 0; i < g.rows; ++i)
        midpoint.probs.push_back(
            (c.u2_min_point.probs[i] + c.u2_max_point.probs[i]) / 2);
      for (const MixedStrategy& s :
           {c.u2_min_point, c.u2_max_point, midpoint}) {
        Profile p{s, MixedStrategy::pure(g.cols, c.col)};
        CHECK(expected_payoff(g, 1, p) == c.v1_value);
      }
    }
  }
}

TEST_CASE("bilinear constancy across extreme equilibria sharing a side") {
  SplitMix64 rng(79);
  const std::vector<Rational> lambdas = {Rational(0), Rational(1, 3),
                                         Rational(1, 2), Rational(2, 3),
                                         Rational(1)};
  for (int trial = 0; trial < 20; ++trial) {
    StageGame g = tg::random_game(rng, 1 + rng.range(1, 3), 1 + rng.range(1, 3),
                                  0, 3);
    auto eqs = nash::extreme_equilibria(g);
    for (size_t a = 0; a < eqs.size(); ++a) {
      for (size_t b = a + 1; b < eqs.size(); ++b) {
        if (!(eqs[a].s2 == eqs[b].s2)) continue;
        for (const Rational& l : lambdas) {
          MixedStrategy blend;
          for (int i = 0; i < g.rows; ++i)
            blend.probs.push_back(l * eqs[a].s1.probs[i] +
                                  (1 - l) * eqs[b].s1.probs[i]);
          Profile p{blend, eqs[a].s2};
          CHECK(is_stage_nash(g, p, Regime::mm));
          CHECK(expected_payoff(g, 1, p) ==
                l * eqs[a].pay1 + (1 - l) * eqs[b].pay1);
          CHECK(expected_payoff(g, 2, p) ==
                l * eqs[a].pay2 + (1 - l) * eqs[b].pay2);
        }
      }
    }
  }
}

TEST_CASE("extreme equilibria match support enumeration on nondegenerate games") {
  SplitMix64 rng(80);
  int accepted = 0;
  int trials = 0;
  while (accepted < 60 && trials < 4000) {
    ++trials;
    StageGame g = tg::random_game(rng, 1 + rng.range(1, 3), 1 + rng.range(1, 3),
                                  0, 1000);
    auto oracle = testoracle::support_enumeration(g);
    if (oracle.degenerate) continue;
    ++accepted;
    auto eqs = nash::extreme_equilibria(g);
    REQUIRE(eqs.size() == oracle.equilibria.size());
    for (size_t k = 0; k < eqs.size(); ++k) {
      CHECK(eqs[k].s1 == oracle.equilibria[k].s1);
      CHECK(eqs[k].s2 == oracle.equilibria[k].s2);
    }
  }
  CHECK(accepted == 60);
}

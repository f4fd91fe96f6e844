#include <catch2/catch_amalgamated.hpp>

#include "defenselab/bayes/value.hpp"
#include "defenselab/random.hpp"
#include "support/bayes_games.hpp"
#include "support/bayes_oracles.hpp"

using defenselab::ProbabilityVector;
using namespace defenselab::bayes;

namespace {

BehavioralStrategy random_strategy(const MultistageGame& g, int player,
                                   defenselab::RandomSource& rng) {
  auto s = uniform_strategy(g, player);
  for (int k = 0; k < g.num_stages(); ++k)
    for (int x = 0; x < g.num_states(k); ++x)
      for (int t = 0; t < g.num_types(player); ++t) {
        const double p = rng.uniform(0.05, 0.95);
        s.set(k, x, t, ProbabilityVector({p, 1.0 - p}));
      }
  return s;
}

BeliefSystem random_beliefs(const MultistageGame& g, int player,
                            defenselab::RandomSource& rng) {
  BeliefSystem b = prior_beliefs(g, player);
  for (int k = 0; k < g.num_stages(); ++k)
    for (int x = 0; x < g.num_states(k); ++x)
      for (int t = 0; t < g.num_types(player); ++t) {
        const double p = rng.uniform(0.05, 0.95);
        b.set(k, x, t, ProbabilityVector({p, 1.0 - p}));
      }
  return b;
}

}  // namespace

TEST_CASE("one stage with pure strategies and a degenerate belief is a table lookup") {
  auto g = testgames::zero_sum_single_type(defenselab::Matrix{{2, -1}, {0, 3}});
  auto s0 = uniform_strategy(g, 0);
  auto s1 = uniform_strategy(g, 1);
  s0.set(0, 0, 0, ProbabilityVector({0.0, 1.0}));
  s1.set(0, 0, 0, ProbabilityVector({1.0, 0.0}));
  const auto b = prior_beliefs(g, 1);
  // Attacker utility at (row 1, col 0) is the cost entry 0.
  CHECK(cumulative_utility(g, s0, s1, b, 0, 0, 0, 1) == Catch::Approx(0.0).margin(1e-15));
  s1.set(0, 0, 0, ProbabilityVector({0.0, 1.0}));
  CHECK(cumulative_utility(g, s0, s1, b, 0, 0, 0, 1) == Catch::Approx(3.0).margin(1e-15));
}

TEST_CASE("uniform beliefs average the type-conditioned utilities") {
  const auto g = testgames::deception_2x2();
  defenselab::RandomSource rng(4);
  const auto s0 = random_strategy(g, 0, rng);
  const auto s1 = random_strategy(g, 1, rng);

  BeliefSystem uniform = prior_beliefs(g, 0);
  BeliefSystem sure_good = prior_beliefs(g, 0);
  BeliefSystem sure_bad = prior_beliefs(g, 0);
  for (int k = 0; k < g.num_stages(); ++k)
    for (int x = 0; x < g.num_states(k); ++x)
      for (int t = 0; t < 2; ++t) {
        uniform.set(k, x, t, ProbabilityVector({0.5, 0.5}));
        sure_good.set(k, x, t, ProbabilityVector({1.0, 0.0}));
        sure_bad.set(k, x, t, ProbabilityVector({0.0, 1.0}));
      }

  // With a single stage remaining there is no propagation asymmetry, so the
  // uniform-belief utility is the exact average of the two sure-type values.
  const int k0 = g.horizon();
  for (int x = 0; x < g.num_states(k0); ++x) {
    const double mid = cumulative_utility(g, s0, s1, uniform, k0, x, 0, 0);
    const double good = cumulative_utility(g, s0, s1, sure_good, k0, x, 0, 0);
    const double bad = cumulative_utility(g, s0, s1, sure_bad, k0, x, 0, 0);
    CHECK(mid == Catch::Approx(0.5 * (good + bad)).margin(1e-12));
  }
}

TEST_CASE("two-stage utilities match exhaustive path enumeration") {
  defenselab::RandomSource rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = testgames::random_2x2(rng);
    const auto s0 = random_strategy(g, 0, rng);
    const auto s1 = random_strategy(g, 1, rng);
    for (int player = 0; player < 2; ++player) {
      const auto b = random_beliefs(g, player, rng);
      for (int t = 0; t < 2; ++t) {
        const double got = cumulative_utility(g, s0, s1, b, 0, 0, t, player);
        const double want =
            oracles::enumerate_cumulative_utility(g, s0, s1, b, 0, 0, t, player);
        CHECK(got == Catch::Approx(want).margin(1e-12));
      }
    }
  }
}

TEST_CASE("cumulative utility is affine in the starting belief") {
  defenselab::RandomSource rng(57);
  const auto g = testgames::deception_2x2();
  const auto s0 = random_strategy(g, 0, rng);
  const auto s1 = random_strategy(g, 1, rng);
  for (int trial = 0; trial < 50; ++trial) {
    const double pa = rng.uniform(0.0, 1.0), pb = rng.uniform(0.0, 1.0);
    const double alpha = rng.uniform(0.0, 1.0);
    BeliefSystem base = random_beliefs(g, 0, rng);
    BeliefSystem with_a = base, with_b = base, with_mix = base;
    with_a.set(0, 0, 0, ProbabilityVector({pa, 1.0 - pa}));
    with_b.set(0, 0, 0, ProbabilityVector({pb, 1.0 - pb}));
    const double pm = alpha * pa + (1.0 - alpha) * pb;
    with_mix.set(0, 0, 0, ProbabilityVector({pm, 1.0 - pm}));

    const double ua = cumulative_utility(g, s0, s1, with_a, 0, 0, 0, 0);
    const double ub = cumulative_utility(g, s0, s1, with_b, 0, 0, 0, 0);
    const double um = cumulative_utility(g, s0, s1, with_mix, 0, 0, 0, 0);
    CHECK(um == Catch::Approx(alpha * ua + (1.0 - alpha) * ub).margin(1e-9));
  }
}

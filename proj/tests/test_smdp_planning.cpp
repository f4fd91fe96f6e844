#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "defenselab/smdp/demo.hpp"
#include "defenselab/smdp/planning.hpp"
#include "support/oracles.hpp"
#include "support/smdp_models.hpp"

using namespace defenselab::smdp;

TEST_CASE("self-loop value is the geometric series") {
  EquivalentMdp mdp;
  mdp.gamma = 1.0;
  mdp.tr = {{{1.0}}};
  mdp.r_gamma = {{{1.0}}};
  mdp.z_gamma = {{{0.5}}};
  const auto plan = value_iterate(mdp, 1e-12);
  CHECK(plan.value[0] == Catch::Approx(2.0).margin(1e-10));
}

TEST_CASE("non-contracting models are refused") {
  EquivalentMdp mdp;
  mdp.gamma = 1.0;
  mdp.tr = {{{1.0}}};
  mdp.r_gamma = {{{1.0}}};
  mdp.z_gamma = {{{1.0}}};
  CHECK_THROWS_AS(value_iterate(mdp), defenselab::ModelError);
}

TEST_CASE("absorbing state keeps value zero") {
  const auto m = testgames::three_state_model();
  const auto plan = value_iterate(equivalent_mdp(m), 1e-10);
  CHECK(plan.value[2] == 0.0);
  CHECK(plan.residual <= 1e-10);
}

TEST_CASE("demo honeynet value matches a linear-solve policy evaluation") {
  const auto m = build_demo_honeynet();
  const auto eq = equivalent_mdp(m);
  const auto plan = value_iterate(eq, 1e-12);
  const auto direct =
      oracles::evaluate_policy_linear(eq.tr, eq.r_gamma, eq.z_gamma, plan.greedy_policy);
  for (std::size_t s = 0; s < m.num_states(); ++s)
    CHECK(plan.value[s] == Catch::Approx(direct[s]).margin(1e-8));
  CHECK(plan.value[12] == 0.0);
}

TEST_CASE("demo honeynet greedy policy matches the pinned structure") {
  // Golden values for the shipped synthetic parameters (not ground truth):
  // high interaction only at the database decoy, low interaction exactly at
  // the bridge nodes, plain recording elsewhere, attract in the normal zone.
  const auto m = build_demo_honeynet();
  const auto plan = value_iterate(equivalent_mdp(m), 1e-10);
  auto action = [&](const char* state) {
    const std::size_t s = m.state_index(state);
    return m.action_labels(s)[plan.greedy_policy[s]];
  };
  CHECK(action("s10") == "high");
  for (const char* bridge : {"s1", "s2", "s8"}) CHECK(action(bridge) == "low");
  for (const char* mid : {"s3", "s4", "s5", "s6", "s7", "s9", "s11"})
    CHECK(action(mid) == "record");
  CHECK(action("s12") == "attract");
  CHECK(plan.value[m.state_index("s12")] > 0.0);
}

TEST_CASE("value-iteration residuals decay at the contraction rate") {
  const auto m = build_demo_honeynet();
  const auto plan = value_iterate(equivalent_mdp(m), 1e-12);
  REQUIRE(plan.residual_history.size() > 50);
  for (std::size_t i = 10; i < 50; ++i) {
    const double prev = plan.residual_history[i - 1];
    const double next = plan.residual_history[i];
    if (prev < 1e-13) break;
    CHECK(next <= prev * plan.contraction_modulus * (1.0 + 1e-9));
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "defenselab/smdp/planning.hpp"
#include "defenselab/smdp/qlearning.hpp"
#include "defenselab/smdp/simulate.hpp"
#include "support/smdp_models.hpp"

using namespace defenselab::smdp;

TEST_CASE("first visit fully adopts the sample") {
  const auto m = testgames::three_state_model();
  auto q = QTable::zeros(m);
  q = q_update(q, {0, 0, 2, 1.0, 1.0, 0.0}, /*k_c=*/1.0, /*gamma=*/0.3);
  CHECK(q.q[0][0] == Catch::Approx(1.0));
  CHECK(q.visits[0][0] == 1);
}

TEST_CASE("huge sojourns kill the continuation term") {
  const auto m = testgames::three_state_model();
  auto q = QTable::zeros(m);
  q.q[2][0] = 100.0;  // even a large continuation target is annihilated
  q = q_update(q, {0, 0, 2, 1e9, 2.0, 3.0}, 1.0, /*gamma=*/1.0);
  CHECK(q.q[0][0] == Catch::Approx(2.0 + 3.0 / 1.0).margin(1e-6));
}

TEST_CASE("tenth visit with k_c = 1 uses rate 0.1") {
  const auto m = testgames::three_state_model();
  auto q = QTable::zeros(m);
  q.visits[0][0] = 9;
  q.q[0][0] = 5.0;
  // gamma large makes the target just r1.
  q = q_update(q, {0, 0, 2, 1e9, 1.0, 0.0}, 1.0, 1.0);
  CHECK(q.q[0][0] == Catch::Approx(0.9 * 5.0 + 0.1 * 1.0));
  CHECK(q.visits[0][0] == 10);
}

TEST_CASE("each update is an exact contraction toward its target") {
  const auto m = testgames::three_state_model();
  defenselab::RandomSource rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto q = QTable::zeros(m);
    q.visits[0][1] = static_cast<std::int64_t>(rng.next_u64() % 20);
    q.q[0][1] = rng.uniform(-5.0, 5.0);
    q.q[1][0] = rng.uniform(-5.0, 5.0);
    q.q[1][1] = rng.uniform(-5.0, 5.0);
    const QSample sample{0, 1, 1, rng.uniform(0.1, 3.0), rng.uniform(-1.0, 1.0),
                         rng.uniform(-1.0, 1.0)};
    const double k_c = rng.uniform(0.1, 10.0);
    const double gamma = 0.3;
    const double decay = std::exp(-gamma * sample.sojourn);
    const double target = sample.r1_observed +
                          sample.r2_observed * (1.0 - decay) / gamma +
                          decay * maxq(q, 1);
    const double before = q.q[0][1];
    const auto updated = q_update(q, sample, k_c, gamma);
    const double alpha = k_c / (static_cast<double>(q.visits[0][1] + 1) - 1.0 + k_c);
    CHECK(std::abs(updated.q[0][1] - target) ==
          Catch::Approx((1.0 - alpha) * std::abs(before - target)).margin(1e-12));
  }
}

TEST_CASE("epsilon-greedy frequencies") {
  const auto m = testgames::three_state_model();
  QTable q = QTable::zeros(m);
  q.q[0] = {1.0, 0.0};
  defenselab::RandomSource rng(11);
  CHECK(epsilon_greedy(q, 0, 0.0, rng) == 0);

  // eps = 1 is uniform over the action set.
  std::vector<int> counts(2, 0);
  for (int i = 0; i < 100000; ++i) counts[epsilon_greedy(q, 0, 1.0, rng)]++;
  CHECK(std::abs(counts[0] / 100000.0 - 0.5) < 0.01);

  // eps = 0.2 with a unique argmax among four actions: 0.8 + 0.2/4 = 0.85.
  QTable four;
  four.q = {{3.0, 1.0, 0.0, 2.0}};
  four.visits = {{0, 0, 0, 0}};
  int hits = 0;
  for (int i = 0; i < 100000; ++i)
    if (epsilon_greedy(four, 0, 0.2, rng) == 0) ++hits;
  CHECK(std::abs(hits / 100000.0 - 0.85) < 0.01);
}

TEST_CASE("deterministic model with a fixed policy gives a deterministic log") {
  const auto m = testgames::deterministic_model();
  const FixedPolicy policy{{0, 0, 0}};
  defenselab::RandomSource r1(1), r2(777);
  const auto a = simulate_engagement(m, policy, 50, r1);
  const auto b = simulate_engagement(m, policy, 50, r2);
  REQUIRE(a.log.size() == b.log.size());
  for (std::size_t i = 0; i < a.log.size(); ++i) {
    CHECK(a.log[i].state == b.log[i].state);
    CHECK(a.log[i].next_state == b.log[i].next_state);
    CHECK(a.log[i].sojourn == b.log[i].sojourn);
    CHECK(a.log[i].r2_observed == b.log[i].r2_observed);
  }
}

TEST_CASE("identical seeds give identical engagement logs") {
  const auto m = testgames::three_state_model();
  defenselab::RandomSource r1(42), r2(42);
  const auto a = simulate_engagement(m, LearnerConfig{0.3, 1.0}, 500, r1);
  const auto b = simulate_engagement(m, LearnerConfig{0.3, 1.0}, 500, r2);
  for (std::size_t i = 0; i < a.log.size(); ++i) {
    CHECK(a.log[i].state == b.log[i].state);
    CHECK(a.log[i].action == b.log[i].action);
    CHECK(a.log[i].sojourn == b.log[i].sojourn);
    CHECK(a.log[i].q_after == b.log[i].q_after);
  }
}

TEST_CASE("visit counts add up to the number of epochs") {
  const auto m = testgames::three_state_model();
  defenselab::RandomSource rng(5);
  const auto result = simulate_engagement(m, LearnerConfig{0.5, 1.0}, 1234, rng);
  CHECK(result.q.total_visits() == 1234);
}

TEST_CASE("pure exploration converges to the planning solution") {
  // 100 replications of 2e4 epochs; the median sup gap to Q* must be below
  // 5% of the Q* range.
  const auto m = testgames::three_state_model();
  const auto eq = equivalent_mdp(m);
  const auto plan = value_iterate(eq, 1e-12);

  std::vector<std::vector<double>> q_star(m.num_states());
  double q_lo = 0.0, q_hi = 0.0;
  for (std::size_t s = 0; s + 1 < m.num_states(); ++s) {
    q_star[s].resize(m.num_actions(s));
    for (std::size_t a = 0; a < m.num_actions(s); ++a) {
      double q = 0.0;
      for (std::size_t sp = 0; sp < m.num_states(); ++sp)
        q += eq.tr[s][a][sp] * (eq.r_gamma[s][a][sp] + eq.z_gamma[s][a][sp] * plan.value[sp]);
      q_star[s][a] = q;
      q_lo = std::min(q_lo, q);
      q_hi = std::max(q_hi, q);
    }
  }

  std::vector<double> gaps;
  for (int rep = 0; rep < 100; ++rep) {
    defenselab::RandomSource rng(900 + rep);
    const auto result = simulate_engagement(m, LearnerConfig{1.0, 1.0}, 20000, rng);
    double gap = 0.0;
    for (std::size_t s = 0; s + 1 < m.num_states(); ++s)
      for (std::size_t a = 0; a < m.num_actions(s); ++a)
        gap = std::max(gap, std::abs(result.q.q[s][a] - q_star[s][a]));
    gaps.push_back(gap);
  }
  std::nth_element(gaps.begin(), gaps.begin() + 50, gaps.end());
  CHECK(gaps[50] < 0.05 * (q_hi - q_lo));
}

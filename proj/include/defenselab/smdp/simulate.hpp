#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "defenselab/probability.hpp"
#include "defenselab/random.hpp"
#include "defenselab/smdp/model.hpp"
#include "defenselab/smdp/qlearning.hpp"

namespace defenselab::smdp {

/// Per-state action choice, fixed throughout the run.
struct FixedPolicy {
  std::vector<std::size_t> action;
};

/// Epsilon-greedy Q-learner. Actions flagged "known" in the model are never
/// explored; their table entries start at the exact one-step value computed
/// from the equivalent MDP with zero continuation (they terminate the
/// engagement, so nothing follows them).
struct LearnerConfig {
  double epsilon = 0.2;
  double k_c = 1.0;
  // Optimistic start for unknown actions; the first update replaces it
  // (alpha = 1 on the first visit), but until every pair is visited it keeps
  // greedy choices exploratory instead of anchoring on an arbitrary zero.
  double initial_q = 0.0;
};

struct EpochRecord {
  std::int64_t epoch = 0;
  std::size_t state = 0;
  std::size_t action = 0;
  std::size_t next_state = 0;
  double sojourn = 0.0;
  double r1_observed = 0.0;
  double r2_observed = 0.0;
  double q_after = 0.0;  // Q(state, action) after the update; 0 for fixed runs
};

struct EngagementResult {
  std::vector<EpochRecord> log;
  QTable q;
  // Q at the watched (state, action) after every epoch, when requested.
  std::vector<double> watch_series;
};

using EngagementActor = std::variant<FixedPolicy, LearnerConfig>;

struct WatchTarget {
  std::size_t state;
  std::size_t action;
};

/// Runs `epochs` decision epochs. Each epoch samples the successor from the
/// kernel, the sojourn from its distribution, and a noisy reward-rate
/// observation; a learner actor applies the Q update. Reaching the absorbing
/// state restarts the next epoch from the model's initial distribution.
inline EngagementResult simulate_engagement(const SmdpModel& m,
                                            const EngagementActor& actor,
                                            std::int64_t epochs, RandomSource& rng,
                                            std::optional<WatchTarget> watch = {}) {
  m.validate();
  const bool learning = std::holds_alternative<LearnerConfig>(actor);
  EngagementResult result;
  result.q = QTable::zeros(m);

  if (learning) {
    const auto& cfg = std::get<LearnerConfig>(actor);
    const auto equiv = equivalent_mdp(m);
    for (std::size_t s = 0; s < m.num_states(); ++s)
      for (std::size_t a = 0; a < m.num_actions(s); ++a) {
        result.q.q[s][a] = cfg.initial_q;
        if (m.known(s, a)) {
          double v = 0.0;
          for (std::size_t sp = 0; sp < m.num_states(); ++sp)
            v += equiv.tr[s][a][sp] * equiv.r_gamma[s][a][sp];
          result.q.q[s][a] = v;
        }
      }
    const auto abs_s = static_cast<std::size_t>(m.absorbing_state());
    for (std::size_t a = 0; a < m.num_actions(abs_s); ++a) result.q.q[abs_s][a] = 0.0;
  }

  auto choose = [&](std::size_t s) -> std::size_t {
    if (const auto* fixed = std::get_if<FixedPolicy>(&actor)) return fixed->action[s];
    const auto& cfg = std::get<LearnerConfig>(actor);
    if (cfg.epsilon > 0.0 && rng.uniform01() < cfg.epsilon) {
      std::vector<std::size_t> explorable;
      for (std::size_t a = 0; a < m.num_actions(s); ++a)
        if (!m.known(s, a)) explorable.push_back(a);
      if (explorable.empty())
        return static_cast<std::size_t>(rng.next_u64() % m.num_actions(s));
      return explorable[rng.next_u64() % explorable.size()];
    }
    return result.q.greedy_action(s);
  };

  std::size_t state = sample_categorical(m.initial_distribution(), rng);
  result.log.reserve(static_cast<std::size_t>(epochs));
  if (watch) result.watch_series.reserve(static_cast<std::size_t>(epochs));

  for (std::int64_t epoch = 0; epoch < epochs; ++epoch) {
    EpochRecord rec;
    rec.epoch = epoch;
    rec.state = state;
    rec.action = choose(state);

    const auto& row = m.transition_row(state, rec.action);
    rec.next_state = sample_categorical(ProbabilityVector(row), rng);
    rec.sojourn = m.sojourn(state, rec.action, rec.next_state).sample(rng);
    rec.r1_observed = m.immediate_reward(state, rec.action, rec.next_state);
    const double rate = m.reward_rate(state, rec.action);
    rec.r2_observed = rate;
    const double half_width = m.noise_fraction() * std::abs(rate);
    if (half_width > 0.0) rec.r2_observed += rng.uniform(-half_width, half_width);

    if (learning) {
      const auto& cfg = std::get<LearnerConfig>(actor);
      result.q = q_update(result.q,
                          {rec.state, rec.action, rec.next_state, rec.sojourn,
                           rec.r1_observed, rec.r2_observed},
                          cfg.k_c, m.gamma());
      rec.q_after = result.q.q[rec.state][rec.action];
    }
    if (watch) result.watch_series.push_back(result.q.q[watch->state][watch->action]);
    result.log.push_back(rec);

    state = (rec.next_state == static_cast<std::size_t>(m.absorbing_state()))
                ? sample_categorical(m.initial_distribution(), rng)
                : rec.next_state;
  }
  return result;
}

}  // namespace defenselab::smdp

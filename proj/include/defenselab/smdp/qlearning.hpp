#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "defenselab/probability.hpp"
#include "defenselab/random.hpp"
#include "defenselab/smdp/model.hpp"

namespace defenselab::smdp {

/// Tabular action values plus per-pair visit counts (counts include the
/// current visit, so the first update uses the full learning rate).
struct QTable {
  std::vector<std::vector<double>> q;             // [s][a]
  std::vector<std::vector<std::int64_t>> visits;  // [s][a]

  static QTable zeros(const SmdpModel& m) {
    QTable t;
    t.q.resize(m.num_states());
    t.visits.resize(m.num_states());
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      t.q[s].assign(m.num_actions(s), 0.0);
      t.visits[s].assign(m.num_actions(s), 0);
    }
    return t;
  }

  std::size_t greedy_action(std::size_t s) const {
    std::size_t best = 0;
    for (std::size_t a = 1; a < q[s].size(); ++a)
      if (q[s][a] > q[s][best]) best = a;
    return best;
  }
  double max_value(std::size_t s) const { return q[s][greedy_action(s)]; }
  std::int64_t total_visits() const {
    std::int64_t n = 0;
    for (const auto& row : visits)
      for (std::int64_t v : row) n += v;
    return n;
  }
};

struct QSample {
  std::size_t state;
  std::size_t action;
  std::size_t next_state;
  double sojourn;       // observed tau
  double r1_observed;   // immediate reward sample
  double r2_observed;   // reward-rate sample (noise included)
};

inline double maxq(const QTable& table, std::size_t s) {
  double best = table.q[s][0];
  for (double v : table.q[s]) best = std::max(best, v);
  return best;
}

/// One Q-learning update on SMDP experience. The visit count is incremented
/// first and the rate is k_c / (count - 1 + k_c); the continuation value is
/// discounted by the observed sojourn and added.
inline QTable q_update(QTable table, const QSample& sample, double k_c, double gamma) {
  if (!(k_c > 0.0)) throw std::invalid_argument("q_update: k_c must be > 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("q_update: gamma must be > 0");
  auto& count = table.visits[sample.state][sample.action];
  count += 1;
  if (count < 1) throw std::invalid_argument("q_update: visit count must be >= 1");
  const double alpha = k_c / (static_cast<double>(count) - 1.0 + k_c);

  const double decay = std::exp(-gamma * sample.sojourn);
  const double target = sample.r1_observed +
                        sample.r2_observed * (1.0 - decay) / gamma +
                        decay * maxq(table, sample.next_state);
  double& q = table.q[sample.state][sample.action];
  q = (1.0 - alpha) * q + alpha * target;
  return table;
}

/// Epsilon-greedy action choice: the lowest-index argmax with probability
/// 1 - eps, otherwise uniform over the whole action set.
inline std::size_t epsilon_greedy(const QTable& table, std::size_t s, double eps,
                                  RandomSource& rng) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw std::invalid_argument("epsilon_greedy: eps must be in [0, 1]");
  if (table.q[s].empty()) throw ModelError("epsilon_greedy: empty action set");
  if (eps > 0.0 && rng.uniform01() < eps)
    return static_cast<std::size_t>(rng.next_u64() % table.q[s].size());
  return table.greedy_action(s);
}

}  // namespace defenselab::smdp

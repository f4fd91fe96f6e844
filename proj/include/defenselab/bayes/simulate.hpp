#pragma once

#include <vector>

#include "defenselab/bayes/belief.hpp"
#include "defenselab/bayes/game.hpp"
#include "defenselab/bayes/pbne.hpp"
#include "defenselab/probability.hpp"
#include "defenselab/random.hpp"

namespace defenselab::bayes {

struct EpisodeStep {
  int stage = 0;
  int state = 0;
  int action0 = 0;
  int action1 = 0;
  double payoff0 = 0.0;
  double payoff1 = 0.0;
  // Beliefs held entering this stage, updated along the realized path.
  ProbabilityVector belief0;
  ProbabilityVector belief1;
};

struct EpisodeTrajectory {
  int type0 = 0;
  int type1 = 0;
  std::vector<EpisodeStep> steps;
};

/// Plays one episode under the profile's strategies with fixed realized
/// types. Beliefs are chained along the realized state path with the Markov
/// update, starting from the priors. With `noisy_payoffs` the recorded stage
/// payoffs add a mean-zero uniform draw per the game's noise metadata.
inline EpisodeTrajectory simulate_episode(const MultistageGame& g,
                                          const EquilibriumProfile& profile, int type0,
                                          int type1, RandomSource& rng,
                                          bool noisy_payoffs = false) {
  EpisodeTrajectory traj;
  traj.type0 = type0;
  traj.type1 = type1;

  int x = g.initial_state();
  ProbabilityVector b0 = g.prior(0, type0);
  ProbabilityVector b1 = g.prior(1, type1);

  for (int k = 0; k < g.num_stages(); ++k) {
    EpisodeStep step;
    step.stage = k;
    step.state = x;
    step.belief0 = b0;
    step.belief1 = b1;

    step.action0 = static_cast<int>(
        sample_categorical(profile.strategy[0].at(k, x, type0), rng));
    step.action1 = static_cast<int>(
        sample_categorical(profile.strategy[1].at(k, x, type1), rng));

    step.payoff0 = g.utility(0, k, x, step.action0, step.action1, type0, type1);
    step.payoff1 = g.utility(1, k, x, step.action0, step.action1, type0, type1);
    if (noisy_payoffs) {
      const double w0 = g.noise(0).half_width;
      const double w1 = g.noise(1).half_width;
      if (w0 > 0.0) step.payoff0 += rng.uniform(-w0, w0);
      if (w1 > 0.0) step.payoff1 += rng.uniform(-w1, w1);
    }

    if (k + 1 < g.num_stages()) {
      const int x_next = g.transition(k, x, step.action0, step.action1);
      b0 = update_belief_markov(g, profile.strategy[0], profile.strategy[1], b0, k, x,
                                x_next, 0, type0);
      b1 = update_belief_markov(g, profile.strategy[0], profile.strategy[1], b1, k, x,
                                x_next, 1, type1);
      x = x_next;
    }
    traj.steps.push_back(std::move(step));
  }
  return traj;
}

}  // namespace defenselab::bayes

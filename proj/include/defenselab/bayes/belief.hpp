#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "defenselab/bayes/game.hpp"
#include "defenselab/errors.hpp"
#include "defenselab/probability.hpp"

namespace defenselab::bayes {

/// Bayes posterior over opponent types given per-type likelihoods of the
/// observation. When the normalizer vanishes the observation was impossible
/// under the prior, a Bayesian update does not apply, and the initial belief
/// is returned instead.
inline ProbabilityVector bayes_posterior(const ProbabilityVector& prior,
                                         std::span<const double> likelihoods,
                                         const ProbabilityVector& fallback) {
  if (likelihoods.size() != prior.size())
    throw ModelError("bayes_posterior: likelihood dimension mismatch");
  std::vector<double> post(prior.size());
  double norm = 0.0;
  for (std::size_t t = 0; t < prior.size(); ++t) {
    if (likelihoods[t] < 0.0) throw ModelError("bayes_posterior: negative likelihood");
    post[t] = prior[t] * likelihoods[t];
    norm += post[t];
  }
  if (norm <= 0.0) return fallback;
  for (double& x : post) x /= norm;
  return ProbabilityVector(std::move(post));
}

/// History-based update: the posterior after both stage actions are observed
/// under perfect recall. `own_action_prob` is sigma_i(a_i | h, theta_i); it
/// does not depend on theta_j and cancels, except that a zero sends the whole
/// numerator to zero and triggers the fallback.
inline ProbabilityVector update_belief_history(const ProbabilityVector& prior,
                                               double own_action_prob,
                                               std::span<const double> opp_action_probs,
                                               const ProbabilityVector& initial_belief) {
  std::vector<double> lk(opp_action_probs.begin(), opp_action_probs.end());
  for (double& x : lk) x *= own_action_prob;
  return bayes_posterior(prior, lk, initial_belief);
}

/// Markov update between two consecutive states: likelihoods are the kernel
/// column Pr(x' | theta_j, x, theta_i).
inline ProbabilityVector update_belief_markov(const ProbabilityVector& prior,
                                              std::span<const double> kernel_likelihoods,
                                              const ProbabilityVector& initial_belief) {
  return bayes_posterior(prior, kernel_likelihoods, initial_belief);
}

/// Pr(x^{k+1} = x_next | theta_j, x, theta_i) for every opponent type, with
/// both players' stage actions marginalized under the profile.
inline std::vector<double> state_transition_likelihoods(
    const MultistageGame& g, const BehavioralStrategy& sigma0,
    const BehavioralStrategy& sigma1, int k, int x, int x_next, int player,
    int own_type) {
  if (k + 1 >= g.num_stages()) throw ModelError("transition queried past the horizon");
  if (x_next < 0 || x_next >= g.num_states(k + 1))
    throw ModelError("state_transition_likelihoods: x' not a stage-" +
                     std::to_string(k + 1) + " state");
  const int opp = 1 - player;
  std::vector<double> lk(g.num_types(opp), 0.0);
  for (int tj = 0; tj < g.num_types(opp); ++tj) {
    double p = 0.0;
    for (int a0 = 0; a0 < g.num_actions(0, k); ++a0) {
      const double p0 = sigma0.at(k, x, player == 0 ? own_type : tj)[a0];
      if (p0 == 0.0) continue;
      for (int a1 = 0; a1 < g.num_actions(1, k); ++a1) {
        if (g.transition(k, x, a0, a1) != x_next) continue;
        p += p0 * sigma1.at(k, x, player == 1 ? own_type : tj)[a1];
      }
    }
    lk[tj] = p;
  }
  return lk;
}

/// Markov belief update driven by the game model: builds the kernel column
/// from the profile and applies Bayes with the prior fallback.
inline ProbabilityVector update_belief_markov(const MultistageGame& g,
                                              const BehavioralStrategy& sigma0,
                                              const BehavioralStrategy& sigma1,
                                              const ProbabilityVector& belief, int k,
                                              int x, int x_next, int player,
                                              int own_type) {
  const auto lk =
      state_transition_likelihoods(g, sigma0, sigma1, k, x, x_next, player, own_type);
  return update_belief_markov(belief, lk, g.prior(player, own_type));
}

/// Reach-weighted forward reconstruction of the Markov belief system implied
/// by a strategy profile. Joint measures m^k(x, theta_j | theta_i) are chained
/// through the profile's transition kernel; normalizing each state's column
/// reproduces the chained Bayes update on every reachable path, and averages
/// over predecessors when several paths merge. Unreached states fall back to
/// the initial belief.
inline BeliefSystem consistent_beliefs(const MultistageGame& g,
                                       const BehavioralStrategy& sigma0,
                                       const BehavioralStrategy& sigma1, int player) {
  const int opp = 1 - player;
  BeliefSystem out(g, player, /*over_actions=*/false);
  for (int ti = 0; ti < g.num_types(player); ++ti) {
    // measure[x][tj], carried over stages
    std::vector<std::vector<double>> measure(
        g.num_states(0), std::vector<double>(g.num_types(opp), 0.0));
    for (int tj = 0; tj < g.num_types(opp); ++tj)
      measure[g.initial_state()][tj] = g.prior(player, ti)[tj];

    for (int k = 0; k < g.num_stages(); ++k) {
      for (int x = 0; x < g.num_states(k); ++x) {
        double norm = 0.0;
        for (double m : measure[x]) norm += m;
        if (norm > 0.0) {
          std::vector<double> b(measure[x]);
          for (double& v : b) v /= norm;
          out.set(k, x, ti, ProbabilityVector(std::move(b)));
        } else {
          out.set(k, x, ti, g.prior(player, ti));
        }
      }
      if (k + 1 >= g.num_stages()) break;
      std::vector<std::vector<double>> next(
          g.num_states(k + 1), std::vector<double>(g.num_types(opp), 0.0));
      for (int x = 0; x < g.num_states(k); ++x)
        for (int tj = 0; tj < g.num_types(opp); ++tj) {
          const double mass = measure[x][tj];
          if (mass == 0.0) continue;
          for (int a0 = 0; a0 < g.num_actions(0, k); ++a0) {
            const double p0 = sigma0.at(k, x, player == 0 ? ti : tj)[a0];
            if (p0 == 0.0) continue;
            for (int a1 = 0; a1 < g.num_actions(1, k); ++a1) {
              const double p1 = sigma1.at(k, x, player == 1 ? ti : tj)[a1];
              if (p1 == 0.0) continue;
              next[g.transition(k, x, a0, a1)][tj] += mass * p0 * p1;
            }
          }
        }
      measure = std::move(next);
    }
  }
  return out;
}

}  // namespace defenselab::bayes

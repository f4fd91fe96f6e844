#pragma once

// Reference evaluations for the multistage Bayesian game, independent of the
// backward-recursion implementation in the library.

#include <vector>

#include "defenselab/bayes/game.hpp"

namespace oracles {

using defenselab::bayes::BehavioralStrategy;
using defenselab::bayes::BeliefSystem;
using defenselab::bayes::MultistageGame;

// Cumulative utility by explicit enumeration of every opponent-type draw and
// joint action at every stage along every state path. Forward recursion over
// paths, accumulating the path weight and the running utility sum.
inline double enumerate_cumulative_utility(const MultistageGame& g,
                                           const BehavioralStrategy& sigma0,
                                           const BehavioralStrategy& sigma1,
                                           const BeliefSystem& beliefs, int k, int x,
                                           int own_type, int player) {
  if (k >= g.num_stages()) return 0.0;
  const int opp = 1 - player;
  double total = 0.0;
  for (int tj = 0; tj < g.num_types(opp); ++tj) {
    const double bw = beliefs.at(k, x, own_type)[tj];
    if (bw == 0.0) continue;
    for (int a0 = 0; a0 < g.num_actions(0, k); ++a0) {
      for (int a1 = 0; a1 < g.num_actions(1, k); ++a1) {
        const double w = bw *
                         sigma0.at(k, x, player == 0 ? own_type : tj)[a0] *
                         sigma1.at(k, x, player == 1 ? own_type : tj)[a1];
        if (w == 0.0) continue;
        const int t0 = (player == 0) ? own_type : tj;
        const int t1 = (player == 0) ? tj : own_type;
        double u = g.utility(player, k, x, a0, a1, t0, t1);
        if (k + 1 < g.num_stages())
          u += enumerate_cumulative_utility(g, sigma0, sigma1, beliefs, k + 1,
                                            g.transition(k, x, a0, a1), own_type,
                                            player);
        total += w * u;
      }
    }
  }
  return total;
}

}  // namespace oracles

#pragma once

// Grid-search deviation probe: replaces one behavioral-strategy row at a time
// with every point of a simplex grid and measures the utility gain from every
// initial (stage, state, type). Independent of the best-response recursion.

#include <algorithm>
#include <vector>

#include "defenselab/bayes/pbne.hpp"
#include "defenselab/bayes/value.hpp"

namespace oracles {

using defenselab::ProbabilityVector;
using defenselab::bayes::EquilibriumProfile;
using defenselab::bayes::MultistageGame;
using defenselab::bayes::value_table;

// Two-action rows only, which covers every game in the test set.
inline double grid_search_deviation_gain(const MultistageGame& g,
                                         const EquilibriumProfile& profile,
                                         double resolution = 0.01) {
  double worst = 0.0;
  for (int player = 0; player < 2; ++player) {
    const auto base = value_table(g, profile.strategy[0], profile.strategy[1],
                                  profile.beliefs[player], player);
    for (int k = 0; k < g.num_stages(); ++k) {
      for (int x = 0; x < g.num_states(k); ++x) {
        for (int t = 0; t < g.num_types(player); ++t) {
          for (double p = 0.0; p <= 1.0 + 1e-12; p += resolution) {
            auto deviated = profile.strategy[player];
            deviated.set(k, x, t, ProbabilityVector({p, 1.0 - p}));
            const auto devtab =
                value_table(g, player == 0 ? deviated : profile.strategy[0],
                            player == 1 ? deviated : profile.strategy[1],
                            profile.beliefs[player], player);
            for (int k0 = 0; k0 <= k; ++k0)
              for (int x0 = 0; x0 < g.num_states(k0); ++x0)
                worst = std::max(worst, devtab[k0][x0][t] - base[k0][x0][t]);
          }
        }
      }
    }
  }
  return worst;
}

}  // namespace oracles

#pragma once

#include <vector>

#include "defenselab/bayes/game.hpp"
#include "defenselab/errors.hpp"

namespace defenselab::bayes {

/// Value tables indexed [k][x][own_type].
using ValueTable = std::vector<std::vector<std::vector<double>>>;

namespace detail {

inline ValueTable zero_table(const MultistageGame& g, int player) {
  ValueTable v(g.num_stages());
  for (int k = 0; k < g.num_stages(); ++k)
    v[k].assign(g.num_states(k), std::vector<double>(g.num_types(player), 0.0));
  return v;
}

}  // namespace detail

/// Expected cumulative utility of player i from every (stage, state, own
/// type) onward, under fixed strategies and a fixed belief system: at each
/// stage the opponent's type is weighted by the tabled belief at the current
/// state, actions by the mixed strategies, and the state advances through the
/// transition function. Backward recursion over stages.
inline ValueTable value_table(const MultistageGame& g, const BehavioralStrategy& sigma0,
                              const BehavioralStrategy& sigma1,
                              const BeliefSystem& beliefs, int player) {
  const int opp = 1 - player;
  ValueTable v = detail::zero_table(g, player);
  for (int k = g.num_stages() - 1; k >= 0; --k) {
    for (int x = 0; x < g.num_states(k); ++x) {
      for (int ti = 0; ti < g.num_types(player); ++ti) {
        double total = 0.0;
        const ProbabilityVector& b = beliefs.at(k, x, ti);
        for (int tj = 0; tj < g.num_types(opp); ++tj) {
          if (b[tj] == 0.0) continue;
          double inner = 0.0;
          for (int a0 = 0; a0 < g.num_actions(0, k); ++a0) {
            const double p0 = sigma0.at(k, x, player == 0 ? ti : tj)[a0];
            if (p0 == 0.0) continue;
            for (int a1 = 0; a1 < g.num_actions(1, k); ++a1) {
              const double p1 = sigma1.at(k, x, player == 1 ? ti : tj)[a1];
              if (p1 == 0.0) continue;
              const int t0 = (player == 0) ? ti : tj;
              const int t1 = (player == 0) ? tj : ti;
              double q = g.utility(player, k, x, a0, a1, t0, t1);
              if (k + 1 < g.num_stages()) q += v[k + 1][g.transition(k, x, a0, a1)][ti];
              inner += p0 * p1 * q;
            }
          }
          total += b[tj] * inner;
        }
        v[k][x][ti] = total;
      }
    }
  }
  return v;
}

/// U_i^{k0:K} from a single starting point.
inline double cumulative_utility(const MultistageGame& g,
                                 const BehavioralStrategy& sigma0,
                                 const BehavioralStrategy& sigma1,
                                 const BeliefSystem& beliefs, int k0, int x0,
                                 int own_type, int player) {
  if (k0 < 0 || k0 >= g.num_stages()) throw ModelError("cumulative_utility: bad stage");
  if (x0 < 0 || x0 >= g.num_states(k0)) throw ModelError("cumulative_utility: bad state");
  return value_table(g, sigma0, sigma1, beliefs, player)[k0][x0][own_type];
}

/// Best-response values of player i against the opponent's fixed strategy,
/// with the belief system held fixed (deviations do not move beliefs). A pure
/// stage action suffices at each (k, x, theta_i) because the evaluation is
/// Markov once beliefs and the opponent are pinned.
inline ValueTable best_response_table(const MultistageGame& g,
                                      const BehavioralStrategy& sigma_opp,
                                      const BeliefSystem& beliefs, int player) {
  const int opp = 1 - player;
  ValueTable w = detail::zero_table(g, player);
  for (int k = g.num_stages() - 1; k >= 0; --k) {
    for (int x = 0; x < g.num_states(k); ++x) {
      for (int ti = 0; ti < g.num_types(player); ++ti) {
        const ProbabilityVector& b = beliefs.at(k, x, ti);
        double best = -std::numeric_limits<double>::infinity();
        for (int ai = 0; ai < g.num_actions(player, k); ++ai) {
          double val = 0.0;
          for (int tj = 0; tj < g.num_types(opp); ++tj) {
            if (b[tj] == 0.0) continue;
            double inner = 0.0;
            for (int aj = 0; aj < g.num_actions(opp, k); ++aj) {
              const double pj = sigma_opp.at(k, x, tj)[aj];
              if (pj == 0.0) continue;
              const int a0 = (player == 0) ? ai : aj;
              const int a1 = (player == 0) ? aj : ai;
              const int t0 = (player == 0) ? ti : tj;
              const int t1 = (player == 0) ? tj : ti;
              double q = g.utility(player, k, x, a0, a1, t0, t1);
              if (k + 1 < g.num_stages()) q += w[k + 1][g.transition(k, x, a0, a1)][ti];
              inner += pj * q;
            }
            val += b[tj] * inner;
          }
          best = std::max(best, val);
        }
        w[k][x][ti] = best;
      }
    }
  }
  return w;
}

}  // namespace defenselab::bayes

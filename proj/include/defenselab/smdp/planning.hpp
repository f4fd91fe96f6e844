#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "defenselab/errors.hpp"
#include "defenselab/smdp/model.hpp"

namespace defenselab::smdp {

struct PlanResult {
  std::vector<double> value;
  std::vector<std::size_t> greedy_policy;  // lowest-index argmax
  double residual = 0.0;
  int iterations = 0;
  double contraction_modulus = 0.0;
  std::vector<double> residual_history;
};

/// Value iteration on the equivalent MDP. Refuses models where the Bellman
/// operator is not a contraction (modulus >= 1).
inline PlanResult value_iterate(const EquivalentMdp& mdp, double tol = 1e-10,
                                int max_iter = 1000000) {
  PlanResult out;
  out.contraction_modulus = mdp.contraction_modulus();
  if (out.contraction_modulus >= 1.0)
    throw ModelError("value_iterate: Bellman operator is not a contraction "
                     "(modulus " + std::to_string(out.contraction_modulus) + ")");

  const std::size_t n = mdp.num_states();
  out.value.assign(n, 0.0);
  out.greedy_policy.assign(n, 0);
  std::vector<double> next(n, 0.0);
  for (out.iterations = 1; out.iterations <= max_iter; ++out.iterations) {
    out.residual = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      double best = -std::numeric_limits<double>::infinity();
      std::size_t best_a = 0;
      for (std::size_t a = 0; a < mdp.num_actions(s); ++a) {
        double q = 0.0;
        for (std::size_t sp = 0; sp < n; ++sp) {
          const double p = mdp.tr[s][a][sp];
          if (p == 0.0) continue;
          q += p * (mdp.r_gamma[s][a][sp] + mdp.z_gamma[s][a][sp] * out.value[sp]);
        }
        if (q > best) {
          best = q;
          best_a = a;
        }
      }
      next[s] = best;
      out.greedy_policy[s] = best_a;
      out.residual = std::max(out.residual, std::abs(best - out.value[s]));
    }
    out.value = next;
    out.residual_history.push_back(out.residual);
    if (out.residual <= tol) break;
  }
  return out;
}

}  // namespace defenselab::smdp

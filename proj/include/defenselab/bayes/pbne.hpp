#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "defenselab/bayes/belief.hpp"
#include "defenselab/bayes/game.hpp"
#include "defenselab/bayes/value.hpp"
#include "defenselab/bimatrix_game.hpp"
#include "defenselab/errors.hpp"

namespace defenselab::bayes {

struct EquilibriumProfile {
  std::array<BehavioralStrategy, 2> strategy;
  std::array<BeliefSystem, 2> beliefs;
  double epsilon = 0.0;
};

struct VerifyReport {
  // C1: sup-norm gap between the profile's beliefs and the beliefs the
  // profile's strategies actually induce.
  double consistency_residual = 0.0;
  // C2: largest best-response gain over both players and every initial
  // (stage, state, own type).
  std::array<double, 2> deviation_gain = {0.0, 0.0};
  double max_deviation_gain() const {
    return std::max(deviation_gain[0], deviation_gain[1]);
  }
  bool pass(double epsilon, double consistency_tol = 1e-9) const {
    return consistency_residual <= consistency_tol &&
           max_deviation_gain() <= epsilon;
  }
};

/// Sequential rationality and belief consistency check, by backward-induction
/// best response against each fixed opponent strategy.
inline VerifyReport verify_pbne(const MultistageGame& g, const EquilibriumProfile& p) {
  VerifyReport report;
  for (int i = 0; i < 2; ++i) {
    const BeliefSystem induced =
        consistent_beliefs(g, p.strategy[0], p.strategy[1], i);
    report.consistency_residual =
        std::max(report.consistency_residual, induced.sup_distance(p.beliefs[i]));

    const ValueTable have = value_table(g, p.strategy[0], p.strategy[1], p.beliefs[i], i);
    const ValueTable best = best_response_table(g, p.strategy[1 - i], p.beliefs[i], i);
    for (int k = 0; k < g.num_stages(); ++k)
      for (int x = 0; x < g.num_states(k); ++x)
        for (int t = 0; t < g.num_types(i); ++t)
          report.deviation_gain[i] =
              std::max(report.deviation_gain[i], best[k][x][t] - have[k][x][t]);
  }
  return report;
}

struct PbneResult {
  EquilibriumProfile profile;
  bool converged = false;
  int sweeps = 0;
  double belief_residual = 0.0;  // last sup-norm change of the belief tables
  VerifyReport report;
};

namespace detail {

// Stage game at (k, x) under the current beliefs and continuation values,
// Harsanyi-style: one row/column per type-contingent pure action. Own types
// are weighted uniformly, which preserves interim best responses because the
// types' payoffs never interact.
struct StageGameResult {
  std::array<std::vector<ProbabilityVector>, 2> rows;  // [player][own_type]
};

inline StageGameResult solve_stage_game(const MultistageGame& g, int k, int x,
                                        const std::array<BeliefSystem, 2>& beliefs,
                                        const std::array<ValueTable, 2>& next_values,
                                        std::size_t stage_game_bound) {
  const int t0n = g.num_types(0), t1n = g.num_types(1);
  const int a0n = g.num_actions(0, k), a1n = g.num_actions(1, k);
  std::size_t rows = 1, cols = 1;
  for (int t = 0; t < t0n; ++t) rows *= static_cast<std::size_t>(a0n);
  for (int t = 0; t < t1n; ++t) cols *= static_cast<std::size_t>(a1n);
  if (rows > stage_game_bound || cols > stage_game_bound)
    throw CapacityError("solve_pbne: type-contingent stage game exceeds bound");

  auto digit = [](std::size_t code, int pos, int base) {
    for (int p = 0; p < pos; ++p) code /= base;
    return static_cast<int>(code % base);
  };

  auto q_value = [&](int player, int a0, int a1, int t0, int t1) {
    const int ti = (player == 0) ? t0 : t1;
    double q = g.utility(player, k, x, a0, a1, t0, t1);
    if (k + 1 < g.num_stages())
      q += next_values[player][k + 1][g.transition(k, x, a0, a1)][ti];
    return q;
  };

  Matrix a(rows, cols, 0.0), b(rows, cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      double pay0 = 0.0, pay1 = 0.0;
      for (int t0 = 0; t0 < t0n; ++t0) {
        const int a0 = digit(r, t0, a0n);
        for (int t1 = 0; t1 < t1n; ++t1) {
          const int a1 = digit(c, t1, a1n);
          pay0 += (1.0 / t0n) * beliefs[0].at(k, x, t0)[t1] * q_value(0, a0, a1, t0, t1);
          pay1 += (1.0 / t1n) * beliefs[1].at(k, x, t1)[t0] * q_value(1, a0, a1, t0, t1);
        }
      }
      a(r, c) = pay0;
      b(r, c) = pay1;
    }
  }

  const auto eqs = solve_bimatrix(BimatrixGame(a, b), std::max(rows, cols));
  const auto& eq = eqs.front();  // lexicographic tie-break from solve_bimatrix

  StageGameResult out;
  out.rows[0].assign(t0n, ProbabilityVector::uniform(a0n));
  out.rows[1].assign(t1n, ProbabilityVector::uniform(a1n));
  for (int t = 0; t < t0n; ++t) {
    std::vector<double> w(a0n, 0.0);
    for (std::size_t r = 0; r < rows; ++r) w[digit(r, t, a0n)] += eq.row_strategy[r];
    out.rows[0][t] = ProbabilityVector(std::move(w));
  }
  for (int t = 0; t < t1n; ++t) {
    std::vector<double> w(a1n, 0.0);
    for (std::size_t c = 0; c < cols; ++c) w[digit(c, t, a1n)] += eq.col_strategy[c];
    out.rows[1][t] = ProbabilityVector(std::move(w));
  }
  return out;
}

}  // namespace detail

/// Fixed-point iteration for an epsilon-PBNE: backward dynamic programming
/// solves every stage game as a bimatrix equilibrium under the current belief
/// tables, then the belief tables are recomputed forward from the resulting
/// strategies, damped 0.5 per sweep, until they stop moving (sup norm below
/// 1e-9). The alternation has no convergence guarantee; a run that exhausts
/// max_iter returns converged=false along with the last profile and its
/// measured slack.
inline PbneResult solve_pbne(const MultistageGame& g, double epsilon, int max_iter = 200,
                             std::size_t stage_game_bound = 10) {
  g.validate();
  constexpr double kBeliefTol = 1e-9;
  const double slack_dominates = g.utility_span();

  std::array<BeliefSystem, 2> beliefs = {prior_beliefs(g, 0), prior_beliefs(g, 1)};
  PbneResult result;
  result.profile.epsilon = epsilon;

  for (int sweep = 1; sweep <= max_iter; ++sweep) {
    std::array<BehavioralStrategy, 2> sigma = {uniform_strategy(g, 0),
                                               uniform_strategy(g, 1)};
    std::array<ValueTable, 2> values = {detail::zero_table(g, 0),
                                        detail::zero_table(g, 1)};

    for (int k = g.num_stages() - 1; k >= 0; --k) {
      for (int x = 0; x < g.num_states(k); ++x) {
        const auto stage =
            detail::solve_stage_game(g, k, x, beliefs, values, stage_game_bound);
        for (int i = 0; i < 2; ++i)
          for (int t = 0; t < g.num_types(i); ++t)
            sigma[i].set(k, x, t, stage.rows[i][t]);

        // Interim continuation values for both players and all own types.
        for (int i = 0; i < 2; ++i) {
          const int opp = 1 - i;
          for (int ti = 0; ti < g.num_types(i); ++ti) {
            double total = 0.0;
            const ProbabilityVector& b = beliefs[i].at(k, x, ti);
            for (int tj = 0; tj < g.num_types(opp); ++tj) {
              if (b[tj] == 0.0) continue;
              double inner = 0.0;
              for (int a0 = 0; a0 < g.num_actions(0, k); ++a0)
                for (int a1 = 0; a1 < g.num_actions(1, k); ++a1) {
                  const double pr = sigma[0].at(k, x, i == 0 ? ti : tj)[a0] *
                                    sigma[1].at(k, x, i == 1 ? ti : tj)[a1];
                  if (pr == 0.0) continue;
                  const int t0 = (i == 0) ? ti : tj;
                  const int t1 = (i == 0) ? tj : ti;
                  double q = g.utility(i, k, x, a0, a1, t0, t1);
                  if (k + 1 < g.num_stages())
                    q += values[i][k + 1][g.transition(k, x, a0, a1)][ti];
                  inner += pr * q;
                }
              total += b[tj] * inner;
            }
            values[i][k][x][ti] = total;
          }
        }
      }
    }

    std::array<BeliefSystem, 2> induced = {
        consistent_beliefs(g, sigma[0], sigma[1], 0),
        consistent_beliefs(g, sigma[0], sigma[1], 1)};
    const double residual = std::max(beliefs[0].sup_distance(induced[0]),
                                     beliefs[1].sup_distance(induced[1]));

    result.sweeps = sweep;
    result.belief_residual = residual;
    result.profile.strategy = sigma;

    if (residual < kBeliefTol || epsilon >= slack_dominates) {
      result.profile.beliefs = induced;
      result.report = verify_pbne(g, result.profile);
      result.converged = result.report.pass(epsilon + 1e-6);
      return result;
    }
    beliefs = {SimplexTable::mix(beliefs[0], induced[0], 0.5),
               SimplexTable::mix(beliefs[1], induced[1], 0.5)};
  }

  result.profile.beliefs = beliefs;
  result.report = verify_pbne(g, result.profile);
  result.converged = false;
  return result;
}

}  // namespace defenselab::bayes

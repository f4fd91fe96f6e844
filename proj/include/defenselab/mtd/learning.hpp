#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "defenselab/mtd/layer_game.hpp"
#include "defenselab/probability.hpp"
#include "defenselab/random.hpp"
#include "defenselab/schedule.hpp"

namespace defenselab::mtd {

/// Geometric entropy-weight annealing: eps_t = max(eps_min, eps0 * decay^t).
/// A fixed weight stops at the regularized (logit) fixed point; decaying it
/// recovers the saddle point in the limit.
struct EntropySchedule {
  double eps0 = 1.0;
  double decay = 0.9995;
  double eps_min = 0.01;

  double at(std::int64_t t) const {
    const double e = eps0 * std::pow(decay, static_cast<double>(t));
    return e < eps_min ? eps_min : e;
  }
};

/// Only the played action's estimate moves, toward the observed payoff.
inline std::vector<double> risk_update(std::vector<double> estimates, std::size_t played,
                                       double observed, double mu) {
  if (!(mu > 0.0 && mu <= 1.0))
    throw std::domain_error("risk_update: rate must be in (0, 1]");
  if (played >= estimates.size())
    throw std::domain_error("risk_update: played action out of range");
  estimates[played] += mu * (observed - estimates[played]);
  return estimates;
}

/// Entropy switching cost sum_h f'_h ln(f'_h / f_h), with 0 ln 0 := 0.
/// Mass on an action the old policy never played is an infinite divergence.
inline double switching_cost(const ProbabilityVector& from, const ProbabilityVector& to) {
  if (from.size() != to.size())
    throw std::domain_error("switching_cost: dimension mismatch");
  double acc = 0.0;
  for (std::size_t h = 0; h < to.size(); ++h) {
    if (to[h] == 0.0) continue;
    if (from[h] == 0.0)
      throw std::domain_error("switching_cost: support of the new policy must be "
                              "contained in the old policy's support");
    acc += to[h] * std::log(to[h] / from[h]);
  }
  return acc;
}

struct RegularizedUpdate {
  ProbabilityVector policy;
  double value = 0.0;  // the regularized program's optimum W
};

/// Closed-form maximizer of the entropy-regularized program:
///   policy'_h ∝ policy_h e^{-r_h / eps},  W = eps ln sum_h policy_h e^{-r_h / eps}.
/// Exponents are shifted by the minimum supported risk for stability; the
/// shift cancels in the ratio and is added back into W.
inline RegularizedUpdate closed_form_update(const ProbabilityVector& policy,
                                            const std::vector<double>& risk,
                                            double eps) {
  if (!(eps > 0.0)) throw std::domain_error("closed_form_update: eps must be positive");
  if (risk.size() != policy.size())
    throw std::domain_error("closed_form_update: risk dimension mismatch");

  double shift = std::numeric_limits<double>::infinity();
  for (std::size_t h = 0; h < policy.size(); ++h)
    if (policy[h] > 0.0) shift = std::min(shift, risk[h]);

  std::vector<double> next(policy.size(), 0.0);
  double norm = 0.0;
  for (std::size_t h = 0; h < policy.size(); ++h) {
    if (policy[h] == 0.0) continue;
    next[h] = policy[h] * std::exp(-(risk[h] - shift) / eps);
    norm += next[h];
  }
  for (double& x : next) x /= norm;

  RegularizedUpdate out;
  out.policy = ProbabilityVector(std::move(next));
  out.value = -shift + eps * std::log(norm);
  return out;
}

/// One learning-dynamics step: convex combination of the previous policy and
/// its closed-form regularized update.
inline ProbabilityVector policy_learning_step(const ProbabilityVector& policy,
                                              const std::vector<double>& risk, double eps,
                                              double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::domain_error("policy_learning_step: lambda must be in [0, 1]");
  const auto target = closed_form_update(policy, risk, eps);
  std::vector<double> next(policy.size());
  for (std::size_t h = 0; h < policy.size(); ++h)
    next[h] = (1.0 - lambda) * policy[h] + lambda * target.policy[h];
  return ProbabilityVector(std::move(next));
}

/// One side of the coupled learner. The attacker maximizes damage; storing
/// his risk signal as the negated payoff lets both sides share the same
/// minimizing update rule.
struct LearnerState {
  ProbabilityVector policy;
  std::vector<double> risk;
  RateSchedule policy_rate;   // lambda_t
  RateSchedule payoff_rate;   // mu_t
  EntropySchedule entropy;
  bool maximizer = false;

  static LearnerState defender(std::size_t num_configs, RateSchedule lambda,
                               RateSchedule mu, EntropySchedule eps = {}) {
    return {ProbabilityVector::uniform(num_configs), std::vector<double>(num_configs, 0.0),
            lambda, mu, eps, false};
  }
  static LearnerState attacker(std::size_t num_attacks, RateSchedule lambda,
                               RateSchedule mu, EntropySchedule eps = {}) {
    return {ProbabilityVector::uniform(num_attacks), std::vector<double>(num_attacks, 0.0),
            lambda, mu, eps, true};
  }
};

namespace detail {

// The exact multiplicative update never reaches a vertex in finite time, but
// doubles underflow and an exact zero is absorbing. Flooring the iterated
// policy at negligible mass keeps every action recoverable.
inline ProbabilityVector floor_policy(const ProbabilityVector& p, double floor = 1e-9) {
  bool below = false;
  for (double w : p)
    if (w < floor) below = true;
  if (!below) return p;
  std::vector<double> w(p.begin(), p.end());
  double sum = 0.0;
  for (double& x : w) {
    if (x < floor) x = floor;
    sum += x;
  }
  for (double& x : w) x /= sum;
  return ProbabilityVector(std::move(w));
}

}  // namespace detail

struct CoupledStep {
  std::int64_t t = 0;
  std::size_t config = 0;
  std::size_t attack = 0;
  double payoff = 0.0;
  ProbabilityVector policy_defender;
  ProbabilityVector policy_attacker;
  std::vector<double> risk_defender;
  std::vector<double> risk_attacker;
};

struct CoupledTrajectory {
  std::vector<CoupledStep> steps;
  LearnerState final_defender;
  LearnerState final_attacker;
};

/// Runs the distributed learning loop: each side samples its own action,
/// observes only the realized payoff (never the opponent's action), updates
/// its risk estimate, then takes a policy step. Optional mean-zero uniform
/// observation noise models payoff measurement error.
///
/// Actions are drawn from (1 - exploration) * policy + exploration * uniform.
/// The indicator in the risk update only moves the played action's estimate,
/// so an action the policy abandons would otherwise keep a stale estimate
/// forever; the exploration mass keeps every estimate tracking. The recorded
/// policies are the learned ones, not the mixed sampling distribution.
inline CoupledTrajectory run_coupled_learning(const LayerGame& game,
                                              LearnerState defender,
                                              LearnerState attacker, std::int64_t steps,
                                              RandomSource& rng,
                                              double noise_half_width = 0.0,
                                              bool require_convergent_schedules = false,
                                              std::int64_t record_every = 1,
                                              double exploration = 0.05) {
  if (defender.policy.size() != game.num_configs() ||
      attacker.policy.size() != game.num_attacks())
    throw std::invalid_argument("run_coupled_learning: learner dimensions do not match");
  if (require_convergent_schedules) {
    for (const auto* l : {&defender, &attacker})
      if (!classify_schedule(l->policy_rate) || !classify_schedule(l->payoff_rate))
        throw std::invalid_argument(
            "run_coupled_learning: convergence diagnostics require schedules "
            "satisfying the convergency condition");
  }

  auto with_exploration = [exploration](const ProbabilityVector& p) {
    if (exploration <= 0.0) return p;
    std::vector<double> w(p.begin(), p.end());
    for (double& x : w)
      x = (1.0 - exploration) * x + exploration / static_cast<double>(w.size());
    return ProbabilityVector(std::move(w));
  };

  std::vector<CoupledStep> recorded;
  for (std::int64_t t = 1; t <= steps; ++t) {
    const std::size_t config = sample_categorical(with_exploration(defender.policy), rng);
    const std::size_t attack = sample_categorical(with_exploration(attacker.policy), rng);
    double payoff = game.damage(attack, config);
    if (noise_half_width > 0.0) payoff += rng.uniform(-noise_half_width, noise_half_width);

    defender.risk = risk_update(defender.risk, config, payoff, defender.payoff_rate.at(t));
    attacker.risk = risk_update(attacker.risk, attack, -payoff, attacker.payoff_rate.at(t));

    defender.policy = detail::floor_policy(policy_learning_step(
        defender.policy, defender.risk, defender.entropy.at(t),
        defender.policy_rate.at(t)));
    attacker.policy = detail::floor_policy(policy_learning_step(
        attacker.policy, attacker.risk, attacker.entropy.at(t),
        attacker.policy_rate.at(t)));

    if (t % record_every == 0 || t == steps) {
      CoupledStep step;
      step.t = t;
      step.config = config;
      step.attack = attack;
      step.payoff = payoff;
      step.policy_defender = defender.policy;
      step.policy_attacker = attacker.policy;
      step.risk_defender = defender.risk;
      step.risk_attacker = attacker.risk;
      recorded.push_back(std::move(step));
    }
  }
  return CoupledTrajectory{std::move(recorded), std::move(defender), std::move(attacker)};
}

}  // namespace defenselab::mtd

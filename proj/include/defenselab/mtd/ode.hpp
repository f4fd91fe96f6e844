#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "defenselab/mtd/layer_game.hpp"
#include "defenselab/mtd/learning.hpp"
#include "defenselab/probability.hpp"

namespace defenselab::mtd {

// Sign convention for the mean risk-tracking lines of the coupled ODEs. The
// published system pairs a negated payoff with the defender's line and a
// positive one with the attacker's, which contradicts the discrete rule both
// learners actually run (each tracks the average of its own observed
// signal). kLearnerSignal is that consistent form and the default;
// kAsPrinted reproduces the published signs verbatim.
enum class RiskSignConvention {
  kLearnerSignal,
  kAsPrinted,
};

struct OdeState {
  ProbabilityVector f;  // defender policy over configurations
  ProbabilityVector g;  // attacker policy over attacks
  std::vector<double> risk_defender;
  std::vector<double> risk_attacker;
};

struct OdeDerivative {
  std::vector<double> df;
  std::vector<double> dg;
  std::vector<double> drisk_defender;
  std::vector<double> drisk_attacker;
};

/// Right-hand sides of the learning dynamics' ODE counterparts. Policy lines
/// are the replicator-like form f_h (softmax_h(-risk/eps) / <f, softmax> - 1);
/// risk lines track the per-action expected payoff per the chosen convention.
inline OdeDerivative ode_rhs(const LayerGame& game, const OdeState& s, double eps_defender,
                             double eps_attacker,
                             RiskSignConvention convention = RiskSignConvention::kLearnerSignal) {
  const std::size_t m = game.num_configs(), n = game.num_attacks();
  OdeDerivative d;
  d.df.assign(m, 0.0);
  d.dg.assign(n, 0.0);
  d.drisk_defender.assign(m, 0.0);
  d.drisk_attacker.assign(n, 0.0);

  auto policy_line = [](const ProbabilityVector& p, const std::vector<double>& risk,
                        double eps, std::vector<double>& out) {
    double shift = std::numeric_limits<double>::infinity();
    for (std::size_t h = 0; h < p.size(); ++h)
      if (p[h] > 0.0) shift = std::min(shift, risk[h]);
    std::vector<double> expw(p.size(), 0.0);
    double norm = 0.0;
    for (std::size_t h = 0; h < p.size(); ++h) {
      expw[h] = std::exp(-(risk[h] - shift) / eps);
      norm += p[h] * expw[h];
    }
    for (std::size_t h = 0; h < p.size(); ++h) out[h] = p[h] * (expw[h] / norm - 1.0);
  };
  policy_line(s.f, s.risk_defender, eps_defender, d.df);
  policy_line(s.g, s.risk_attacker, eps_attacker, d.dg);

  for (std::size_t h = 0; h < m; ++h) {
    double r_cfg = 0.0;  // expected damage of pure configuration h vs mixed g
    for (std::size_t k = 0; k < n; ++k) r_cfg += s.g[k] * game.damage(k, h);
    const double signal =
        (convention == RiskSignConvention::kAsPrinted) ? -r_cfg : r_cfg;
    d.drisk_defender[h] = signal - s.risk_defender[h];
  }
  for (std::size_t k = 0; k < n; ++k) {
    double r_atk = 0.0;  // expected damage of pure attack k vs mixed f
    for (std::size_t h = 0; h < m; ++h) r_atk += s.f[h] * game.damage(k, h);
    const double signal =
        (convention == RiskSignConvention::kAsPrinted) ? r_atk : -r_atk;
    d.drisk_attacker[k] = signal - s.risk_attacker[k];
  }
  return d;
}

/// Fixed-step forward Euler with the entropy weight annealed per step.
inline OdeState integrate_ode(const LayerGame& game, OdeState state, std::int64_t steps,
                              double dt, const EntropySchedule& entropy = {},
                              RiskSignConvention convention = RiskSignConvention::kLearnerSignal) {
  std::vector<double> f(state.f.begin(), state.f.end());
  std::vector<double> g(state.g.begin(), state.g.end());
  for (std::int64_t t = 1; t <= steps; ++t) {
    const double eps = entropy.at(t);
    state.f = ProbabilityVector(f);
    state.g = ProbabilityVector(g);
    const OdeDerivative d = ode_rhs(game, state, eps, eps, convention);
    double fsum = 0.0, gsum = 0.0;
    for (std::size_t h = 0; h < f.size(); ++h) {
      f[h] = std::max(0.0, f[h] + dt * d.df[h]);
      fsum += f[h];
    }
    for (std::size_t k = 0; k < g.size(); ++k) {
      g[k] = std::max(0.0, g[k] + dt * d.dg[k]);
      gsum += g[k];
    }
    for (double& x : f) x /= fsum;
    for (double& x : g) x /= gsum;
    for (std::size_t h = 0; h < f.size(); ++h)
      state.risk_defender[h] += dt * d.drisk_defender[h];
    for (std::size_t k = 0; k < g.size(); ++k)
      state.risk_attacker[k] += dt * d.drisk_attacker[k];
  }
  state.f = ProbabilityVector(std::move(f));
  state.g = ProbabilityVector(std::move(g));
  return state;
}

}  // namespace defenselab::mtd

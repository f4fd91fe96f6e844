#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "defenselab/errors.hpp"
#include "defenselab/probability.hpp"
#include "defenselab/smdp/sojourn.hpp"

namespace defenselab::smdp {

/// Continuous-time SMDP over a finite state set with per-state action sets,
/// a transition kernel, per-triple sojourn distributions, an immediate reward
/// r1(s, a, s'), and a constant reward rate r2(s, a) accrued over the sojourn.
class SmdpModel {
public:
  SmdpModel(std::vector<std::string> states,
            std::vector<std::vector<std::string>> actions, int absorbing_state,
            double gamma, double reward_bound)
      : states_(std::move(states)),
        actions_(std::move(actions)),
        absorbing_(absorbing_state),
        gamma_(gamma),
        reward_bound_(reward_bound) {
    if (states_.empty()) throw ModelError("SmdpModel: empty state set");
    if (actions_.size() != states_.size())
      throw ModelError("SmdpModel: action sets must cover every state");
    for (const auto& a : actions_)
      if (a.empty()) throw ModelError("SmdpModel: empty action set");
    if (absorbing_ < 0 || absorbing_ >= static_cast<int>(states_.size()))
      throw ModelError("SmdpModel: absorbing state out of range");
    if (!(gamma_ >= 0.0)) throw ModelError("SmdpModel: discount rate must be >= 0");
    if (!(reward_bound_ > 0.0)) throw ModelError("SmdpModel: reward bound must be > 0");

    const std::size_t n = states_.size();
    tr_.resize(n);
    sojourn_.resize(n);
    r1_.resize(n);
    r2_.resize(n);
    known_.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t na = actions_[s].size();
      tr_[s].assign(na, std::vector<double>(n, 0.0));
      sojourn_[s].assign(na, std::vector<std::optional<SojournSpec>>(n, std::nullopt));
      r1_[s].assign(na, std::vector<double>(n, 0.0));
      r2_[s].assign(na, 0.0);
      known_[s].assign(na, false);
    }
    initial_ = ProbabilityVector::vertex(n, static_cast<std::size_t>(absorbing_));
  }

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_actions(std::size_t s) const { return actions_[s].size(); }
  int absorbing_state() const { return absorbing_; }
  double gamma() const { return gamma_; }
  double reward_bound() const { return reward_bound_; }

  const std::vector<std::string>& state_labels() const { return states_; }
  const std::vector<std::string>& action_labels(std::size_t s) const { return actions_[s]; }

  std::size_t state_index(const std::string& label) const {
    for (std::size_t i = 0; i < states_.size(); ++i)
      if (states_[i] == label) return i;
    throw ModelError("SmdpModel: unknown state '" + label + "'");
  }
  std::size_t action_index(std::size_t s, const std::string& label) const {
    for (std::size_t i = 0; i < actions_[s].size(); ++i)
      if (actions_[s][i] == label) return i;
    throw ModelError("SmdpModel: unknown action '" + label + "' at " + states_[s]);
  }

  void set_transition(std::size_t s, std::size_t a, std::size_t next, double prob,
                      SojournSpec sojourn, double immediate_reward = 0.0) {
    check_sa(s, a);
    if (next >= states_.size()) throw ModelError("SmdpModel: successor out of range");
    if (!(prob >= 0.0 && prob <= 1.0 + 1e-9))
      throw ModelError("SmdpModel: transition probability outside [0, 1]");
    tr_[s][a][next] = prob;
    sojourn_[s][a][next] = sojourn;
    r1_[s][a][next] = immediate_reward;
  }

  void set_reward_rate(std::size_t s, std::size_t a, double rate) {
    check_sa(s, a);
    r2_[s][a] = rate;
  }

  /// Marks an action whose value the defender already knows; the learner
  /// excludes it from exploration.
  void set_known(std::size_t s, std::size_t a, bool known = true) {
    check_sa(s, a);
    known_[s][a] = known;
  }
  bool known(std::size_t s, std::size_t a) const { return known_[s][a]; }

  void set_initial_distribution(ProbabilityVector d) {
    if (d.size() != states_.size())
      throw ModelError("SmdpModel: initial distribution dimension mismatch");
    initial_ = std::move(d);
  }
  const ProbabilityVector& initial_distribution() const { return initial_; }

  /// Half-width of the uniform observation noise on r2 as a fraction of the
  /// rate's magnitude.
  void set_noise_fraction(double frac) {
    if (!(frac >= 0.0)) throw ModelError("SmdpModel: noise fraction must be >= 0");
    noise_frac_ = frac;
  }
  double noise_fraction() const { return noise_frac_; }

  const std::vector<double>& transition_row(std::size_t s, std::size_t a) const {
    return tr_[s][a];
  }
  const SojournSpec& sojourn(std::size_t s, std::size_t a, std::size_t next) const {
    const auto& spec = sojourn_[s][a][next];
    if (!spec) throw ModelError("SmdpModel: sojourn undefined for a zero-mass transition");
    return *spec;
  }
  double immediate_reward(std::size_t s, std::size_t a, std::size_t next) const {
    return r1_[s][a][next];
  }
  double reward_rate(std::size_t s, std::size_t a) const { return r2_[s][a]; }

  /// Kernel rows must be simplices; the absorbing state must self-loop with
  /// zero rewards.
  void validate() const {
    for (std::size_t s = 0; s < states_.size(); ++s) {
      for (std::size_t a = 0; a < actions_[s].size(); ++a) {
        double sum = 0.0;
        for (std::size_t next = 0; next < states_.size(); ++next) {
          const double p = tr_[s][a][next];
          if (p > 0.0 && !sojourn_[s][a][next])
            throw ModelError("SmdpModel: transition " + states_[s] + "/" +
                             actions_[s][a] + " -> " + states_[next] +
                             " has no sojourn distribution");
          sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9)
          throw ModelError("SmdpModel: transition row " + states_[s] + "/" +
                           actions_[s][a] + " sums to " + std::to_string(sum));
      }
    }
    const auto abs_s = static_cast<std::size_t>(absorbing_);
    for (std::size_t a = 0; a < actions_[abs_s].size(); ++a) {
      if (std::abs(tr_[abs_s][a][abs_s] - 1.0) > 1e-12)
        throw ModelError("SmdpModel: absorbing state must self-loop");
      if (r2_[abs_s][a] != 0.0 || r1_[abs_s][a][abs_s] != 0.0)
        throw ModelError("SmdpModel: absorbing state must carry zero rewards");
    }
  }

private:
  void check_sa(std::size_t s, std::size_t a) const {
    if (s >= states_.size() || a >= actions_[s].size())
      throw ModelError("SmdpModel: state/action out of range");
  }

  std::vector<std::string> states_;
  std::vector<std::vector<std::string>> actions_;
  int absorbing_;
  double gamma_;
  double reward_bound_;
  double noise_frac_ = 0.1;
  ProbabilityVector initial_;
  std::vector<std::vector<std::vector<double>>> tr_;
  std::vector<std::vector<std::vector<std::optional<SojournSpec>>>> sojourn_;
  std::vector<std::vector<std::vector<double>>> r1_;
  std::vector<std::vector<double>> r2_;
  std::vector<std::vector<bool>> known_;
};

/// The SMDP reduced to an equivalent discrete MDP: per-sojourn expected
/// discount z^gamma and the aggregated reward
///   r^gamma(s,a,s') = r1(s,a,s') + r2(s,a)/gamma * (1 - z^gamma(s,a,s')).
struct EquivalentMdp {
  std::vector<std::vector<std::vector<double>>> tr;       // [s][a][s']
  std::vector<std::vector<std::vector<double>>> r_gamma;  // [s][a][s']
  std::vector<std::vector<std::vector<double>>> z_gamma;  // [s][a][s']
  double gamma = 0.0;

  std::size_t num_states() const { return tr.size(); }
  std::size_t num_actions(std::size_t s) const { return tr[s].size(); }

  /// max over (s, a) of sum tr * z^gamma: the Bellman operator's modulus.
  double contraction_modulus() const {
    double worst = 0.0;
    for (std::size_t s = 0; s < tr.size(); ++s)
      for (std::size_t a = 0; a < tr[s].size(); ++a) {
        double acc = 0.0;
        for (std::size_t next = 0; next < tr[s][a].size(); ++next)
          acc += tr[s][a][next] * z_gamma[s][a][next];
        worst = std::max(worst, acc);
      }
    return worst;
  }
};

inline EquivalentMdp equivalent_mdp(const SmdpModel& m) {
  if (!(m.gamma() > 0.0))
    throw ModelError("equivalent_mdp: undiscounted reduction (gamma = 0) unsupported");
  m.validate();
  EquivalentMdp out;
  out.gamma = m.gamma();
  const std::size_t n = m.num_states();
  out.tr.resize(n);
  out.r_gamma.resize(n);
  out.z_gamma.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t na = m.num_actions(s);
    out.tr[s].assign(na, std::vector<double>(n, 0.0));
    out.r_gamma[s].assign(na, std::vector<double>(n, 0.0));
    out.z_gamma[s].assign(na, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t next = 0; next < n; ++next) {
        const double p = m.transition_row(s, a)[next];
        out.tr[s][a][next] = p;
        if (p == 0.0) continue;
        const double z = m.sojourn(s, a, next).laplace(m.gamma());
        const double r = m.immediate_reward(s, a, next) +
                         m.reward_rate(s, a) / m.gamma() * (1.0 - z);
        if (std::abs(r) > m.reward_bound())
          throw ModelError("equivalent_mdp: |r^gamma| = " + std::to_string(std::abs(r)) +
                           " exceeds the declared bound " +
                           std::to_string(m.reward_bound()));
        out.z_gamma[s][a][next] = z;
        out.r_gamma[s][a][next] = r;
      }
    }
  }
  return out;
}

struct RegularityViolation {
  std::size_t state;
  std::size_t action;
  double mass_below_delta;  // sum tr * P(sojourn <= delta)
};

struct RegularityReport {
  bool pass = true;
  double delta = 0.0;
  double theta = 0.0;
  double worst_mass = 0.0;
  std::vector<RegularityViolation> violations;
};

/// Checks that no (state, action) can complete its transition too quickly:
/// sum_{s'} tr(s'|s,a) P(sojourn <= delta) <= 1 - theta. The sojourn "z" in
/// the condition is read as the CDF at delta.
inline RegularityReport check_regularity(const SmdpModel& m, double delta, double theta) {
  if (!(delta > 0.0)) throw std::domain_error("check_regularity: delta must be > 0");
  if (!(theta > 0.0 && theta < 1.0))
    throw std::domain_error("check_regularity: theta must be in (0, 1)");
  RegularityReport report;
  report.delta = delta;
  report.theta = theta;
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    for (std::size_t a = 0; a < m.num_actions(s); ++a) {
      double mass = 0.0;
      for (std::size_t next = 0; next < m.num_states(); ++next) {
        const double p = m.transition_row(s, a)[next];
        if (p > 0.0) mass += p * m.sojourn(s, a, next).cdf(delta);
      }
      report.worst_mass = std::max(report.worst_mass, mass);
      if (mass > 1.0 - theta) {
        report.pass = false;
        report.violations.push_back({s, a, mass});
      }
    }
  }
  return report;
}

}  // namespace defenselab::smdp

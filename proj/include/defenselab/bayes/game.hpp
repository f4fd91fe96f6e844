#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "defenselab/errors.hpp"
#include "defenselab/probability.hpp"

namespace defenselab::bayes {

// Players are indexed 0 (defender, row) and 1 (user/attacker, column). Both
// maximize their own utility.
inline constexpr int kDefender = 0;
inline constexpr int kAttacker = 1;

/// Mean-zero stage-payoff noise. Utilities are stored as expectations; the
/// noise family is kept so simulation can emit noisy realized payoffs.
struct NoiseSpec {
  double half_width = 0.0;  // uniform on [-half_width, +half_width]
};

/// One stage's state and action spaces.
struct StageSpace {
  std::vector<std::string> states;
  std::array<std::vector<std::string>, 2> actions;
};

/// Finite two-player multistage game with private types, a deterministic
/// state transition per stage, and type-dependent expected stage utilities.
///
/// Stages run 0..K. Transitions are defined for stages 0..K-1; utilities for
/// all stages. Construction sizes every table; transitions must then be
/// filled completely before validate() passes.
class MultistageGame {
public:
  MultistageGame(std::array<std::vector<std::string>, 2> types,
                 std::vector<StageSpace> stages, int initial_state = 0)
      : types_(std::move(types)), stages_(std::move(stages)), initial_(initial_state) {
    if (types_[0].empty() || types_[1].empty())
      throw ModelError("MultistageGame: empty type space");
    if (stages_.empty()) throw ModelError("MultistageGame: no stages");
    for (const auto& st : stages_) {
      if (st.states.empty() || st.actions[0].empty() || st.actions[1].empty())
        throw ModelError("MultistageGame: empty state or action set");
    }
    if (initial_ < 0 || initial_ >= static_cast<int>(stages_[0].states.size()))
      throw ModelError("MultistageGame: initial state out of range");

    transition_.resize(stages_.size() > 1 ? stages_.size() - 1 : 0);
    for (std::size_t k = 0; k + 1 < stages_.size(); ++k)
      transition_[k].assign(num_states(k) * num_actions(0, k) * num_actions(1, k), -1);
    for (int i = 0; i < 2; ++i) {
      utility_[i].resize(stages_.size());
      for (std::size_t k = 0; k < stages_.size(); ++k)
        utility_[i][k].assign(num_states(k) * num_actions(0, k) * num_actions(1, k) *
                                  num_types(0) * num_types(1),
                              0.0);
      priors_[i].assign(num_types(i), ProbabilityVector::uniform(num_types(1 - i)));
      nature_[i] = ProbabilityVector::uniform(num_types(i));
    }
  }

  int horizon() const { return static_cast<int>(stages_.size()) - 1; }  // K
  int num_stages() const { return static_cast<int>(stages_.size()); }   // K + 1
  int initial_state() const { return initial_; }

  int num_types(int player) const { return static_cast<int>(types_[player].size()); }
  int num_states(int k) const { return static_cast<int>(stages_[k].states.size()); }
  int num_actions(int player, int k) const {
    return static_cast<int>(stages_[k].actions[player].size());
  }

  const std::vector<std::string>& type_labels(int player) const { return types_[player]; }
  const std::vector<std::string>& state_labels(int k) const { return stages_[k].states; }
  const std::vector<std::string>& action_labels(int player, int k) const {
    return stages_[k].actions[player];
  }

  void set_transition(int k, int x, int a0, int a1, int next_state) {
    if (next_state < 0 || next_state >= num_states(k + 1))
      throw ModelError("MultistageGame: transition target out of range");
    transition_[k][joint_index(k, x, a0, a1)] = next_state;
  }

  int transition(int k, int x, int a0, int a1) const {
    const int next = transition_[k][joint_index(k, x, a0, a1)];
    if (next < 0) throw ModelError("MultistageGame: transition not defined");
    return next;
  }

  void set_utility(int player, int k, int x, int a0, int a1, int t0, int t1, double u) {
    if (!std::isfinite(u)) throw ModelError("MultistageGame: non-finite utility");
    utility_[player][k][utility_index(k, x, a0, a1, t0, t1)] = u;
  }

  double utility(int player, int k, int x, int a0, int a1, int t0, int t1) const {
    return utility_[player][k][utility_index(k, x, a0, a1, t0, t1)];
  }

  /// Initial belief of `player` about the opponent's type given own type.
  const ProbabilityVector& prior(int player, int own_type) const {
    return priors_[player][own_type];
  }
  void set_prior(int player, int own_type, ProbabilityVector b) {
    if (static_cast<int>(b.size()) != num_types(1 - player))
      throw ModelError("MultistageGame: prior dimension mismatch");
    priors_[player][own_type] = std::move(b);
  }

  /// Distribution the simulator draws actual types from (not part of either
  /// player's information).
  const ProbabilityVector& nature(int player) const { return nature_[player]; }
  void set_nature(int player, ProbabilityVector d) {
    if (static_cast<int>(d.size()) != num_types(player))
      throw ModelError("MultistageGame: nature dimension mismatch");
    nature_[player] = std::move(d);
  }

  const NoiseSpec& noise(int player) const { return noise_[player]; }
  void set_noise(int player, NoiseSpec n) { noise_[player] = n; }

  /// Checks that every transition entry was filled.
  void validate() const {
    for (std::size_t k = 0; k < transition_.size(); ++k)
      for (int v : transition_[k])
        if (v < 0)
          throw ModelError("MultistageGame: transition table incomplete at stage " +
                           std::to_string(k));
  }

  /// Width of the utility range times the number of stages: an upper bound on
  /// any deviation gain, used as the "slack dominates everything" threshold.
  double utility_span() const {
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < 2; ++i)
      for (const auto& stage : utility_[i])
        for (double u : stage) {
          lo = std::min(lo, u);
          hi = std::max(hi, u);
        }
    return (hi - lo) * num_stages();
  }

private:
  std::size_t joint_index(int k, int x, int a0, int a1) const {
    return (static_cast<std::size_t>(x) * num_actions(0, k) + a0) * num_actions(1, k) + a1;
  }
  std::size_t utility_index(int k, int x, int a0, int a1, int t0, int t1) const {
    return (joint_index(k, x, a0, a1) * num_types(0) + t0) * num_types(1) + t1;
  }

  std::array<std::vector<std::string>, 2> types_;
  std::vector<StageSpace> stages_;
  int initial_;
  std::vector<std::vector<int>> transition_;                  // [k][x,a0,a1]
  std::array<std::vector<std::vector<double>>, 2> utility_;   // [i][k][x,a0,a1,t0,t1]
  std::array<std::vector<ProbabilityVector>, 2> priors_;      // [i][own_type]
  std::array<ProbabilityVector, 2> nature_;
  std::array<NoiseSpec, 2> noise_;
};

/// Per-stage, per-state, per-own-type table of simplices: the common shape of
/// behavioral strategies (rows over actions) and belief systems (rows over
/// opponent types).
class SimplexTable {
public:
  SimplexTable() = default;
  SimplexTable(const MultistageGame& game, int player, bool over_actions) {
    rows_.resize(game.num_stages());
    for (int k = 0; k < game.num_stages(); ++k) {
      const int width = over_actions ? game.num_actions(player, k)
                                     : game.num_types(1 - player);
      rows_[k].assign(game.num_states(k),
                      std::vector<ProbabilityVector>(
                          game.num_types(player), ProbabilityVector::uniform(width)));
    }
  }

  const ProbabilityVector& at(int k, int x, int own_type) const {
    return rows_[k][x][own_type];
  }
  void set(int k, int x, int own_type, ProbabilityVector p) {
    rows_[k][x][own_type] = std::move(p);
  }

  double sup_distance(const SimplexTable& other) const {
    double d = 0.0;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      for (std::size_t x = 0; x < rows_[k].size(); ++x)
        for (std::size_t t = 0; t < rows_[k][x].size(); ++t)
          d = std::max(d, linf_distance(rows_[k][x][t], other.rows_[k][x][t]));
    return d;
  }

  /// Entry-wise convex combination (used to damp belief iteration).
  static SimplexTable mix(const SimplexTable& a, const SimplexTable& b, double weight_b) {
    SimplexTable out = a;
    for (std::size_t k = 0; k < out.rows_.size(); ++k)
      for (std::size_t x = 0; x < out.rows_[k].size(); ++x)
        for (std::size_t t = 0; t < out.rows_[k][x].size(); ++t) {
          std::vector<double> w(a.rows_[k][x][t].size());
          for (std::size_t c = 0; c < w.size(); ++c)
            w[c] = (1.0 - weight_b) * a.rows_[k][x][t][c] +
                   weight_b * b.rows_[k][x][t][c];
          out.rows_[k][x][t] = ProbabilityVector(std::move(w));
        }
    return out;
  }

private:
  std::vector<std::vector<std::vector<ProbabilityVector>>> rows_;
};

/// sigma_i^k(a | x, theta_i): rows over player i's stage-k actions.
using BehavioralStrategy = SimplexTable;
/// b_i^k(theta_j | x, theta_i): rows over the opponent's types.
using BeliefSystem = SimplexTable;

inline BehavioralStrategy uniform_strategy(const MultistageGame& g, int player) {
  return SimplexTable(g, player, /*over_actions=*/true);
}
inline BeliefSystem prior_beliefs(const MultistageGame& g, int player) {
  SimplexTable table(g, player, /*over_actions=*/false);
  for (int k = 0; k < g.num_stages(); ++k)
    for (int x = 0; x < g.num_states(k); ++x)
      for (int t = 0; t < g.num_types(player); ++t)
        table.set(k, x, t, g.prior(player, t));
  return table;
}

}  // namespace defenselab::bayes

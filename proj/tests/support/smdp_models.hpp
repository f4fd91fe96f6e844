#pragma once

#include "defenselab/smdp/model.hpp"

namespace testgames {

using defenselab::smdp::SmdpModel;
using defenselab::smdp::SojournSpec;

// Three states: two engagement nodes and the absorbing end. Small enough for
// exhaustive Q-learning convergence runs.
inline SmdpModel three_state_model() {
  SmdpModel m({"h1", "h2", "end"}, {{"stay", "move"}, {"milk", "out"}, {"none"}},
              /*absorbing=*/2, /*gamma=*/0.3, /*reward_bound=*/100.0);
  m.set_transition(0, 0, 0, 0.7, SojournSpec::exponential(1.0), 0.0);
  m.set_transition(0, 0, 2, 0.3, SojournSpec::exponential(1.0), 0.0);
  m.set_reward_rate(0, 0, 2.0);
  m.set_transition(0, 1, 1, 0.8, SojournSpec::exponential(1.5), -0.5);
  m.set_transition(0, 1, 2, 0.2, SojournSpec::exponential(1.5), -0.5);
  m.set_reward_rate(0, 1, 1.0);
  m.set_transition(1, 0, 1, 0.6, SojournSpec::uniform(0.5, 1.5), 0.0);
  m.set_transition(1, 0, 2, 0.4, SojournSpec::uniform(0.5, 1.5), 0.0);
  m.set_reward_rate(1, 0, 4.0);
  m.set_transition(1, 1, 0, 0.5, SojournSpec::exponential(1.0), 0.2);
  m.set_transition(1, 1, 2, 0.5, SojournSpec::exponential(1.0), 0.2);
  m.set_reward_rate(1, 1, 0.5);
  m.set_transition(2, 0, 2, 1.0, SojournSpec::exponential(1.0), 0.0);
  m.set_initial_distribution(defenselab::ProbabilityVector({0.5, 0.5, 0.0}));
  m.set_noise_fraction(0.0);
  m.validate();
  return m;
}

// Fully deterministic: vertex kernel rows, fixed sojourns, no noise.
inline SmdpModel deterministic_model() {
  SmdpModel m({"a", "b", "end"}, {{"go"}, {"go"}, {"none"}}, /*absorbing=*/2,
              /*gamma=*/0.5, /*reward_bound=*/100.0);
  m.set_transition(0, 0, 1, 1.0, SojournSpec::deterministic(1.0), 1.0);
  m.set_transition(1, 0, 2, 1.0, SojournSpec::deterministic(2.0), 0.5);
  m.set_transition(2, 0, 2, 1.0, SojournSpec::deterministic(1.0), 0.0);
  m.set_reward_rate(0, 0, 1.0);
  m.set_reward_rate(1, 0, 0.0);
  m.set_initial_distribution(defenselab::ProbabilityVector({1.0, 0.0, 0.0}));
  m.set_noise_fraction(0.0);
  m.validate();
  return m;
}

}  // namespace testgames

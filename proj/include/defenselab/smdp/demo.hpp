#pragma once

#include <vector>

#include "defenselab/smdp/model.hpp"

namespace defenselab::smdp {

// Thirteen-state honeynet: honeypots s1..s11 emulating a production network,
// the normal zone s12, and the absorbing s13 (attacker ejected or gone).
// Honeypots s1, s2 and s8 bridge to the normal zone. The database decoy s10
// and the sensor decoy s11 carry the highest investigation reward rates.
//
// All numbers are synthetic: the engagement rewards, costs and kernels below
// are chosen so that planning on the model reproduces the qualitative
// structure described above (high interaction only pays at the database
// node, bridge nodes prefer the low-interaction action to curb penetration
// into the normal zone, attract beats eject in the normal zone). Planning
// results on these exact tables are pinned in the test suite as golden
// values, not as ground truth.
inline SmdpModel build_demo_honeynet() {
  const std::vector<std::string> states = {"s1", "s2", "s3",  "s4",  "s5",  "s6", "s7",
                                           "s8", "s9", "s10", "s11", "s12", "s13"};
  const std::vector<std::string> honeypot_actions = {"eject", "record", "low", "high"};
  std::vector<std::vector<std::string>> actions(13);
  for (int s = 0; s < 11; ++s) actions[s] = honeypot_actions;
  actions[11] = {"eject", "attract"};
  actions[12] = {"none"};

  SmdpModel m(states, actions, /*absorbing=*/12, /*gamma=*/0.2, /*reward_bound=*/100.0);

  // Honeypot adjacency (indices into states). Bridges also reach s12.
  const std::vector<std::vector<std::size_t>> neighbors = {
      {2, 3},           // s1
      {4, 5},           // s2
      {0, 3, 6},        // s3
      {0, 2, 4},        // s4
      {1, 3, 8},        // s5
      {1, 6},           // s6
      {2, 5, 8},        // s7
      {8, 9},           // s8
      {4, 6, 7, 9, 10}, // s9
      {7, 8, 10},       // s10
      {8, 9},           // s11
  };
  const bool bridge[11] = {true, true, false, false, false, false,
                           false, true, false, false, false};
  const double reward_rate[11] = {3.0, 3.0, 4.0, 4.0, 4.0, 3.5, 4.0, 3.0, 5.0, 10.0, 7.0};

  const std::size_t kNormal = 11, kAbsorbing = 12;
  const double penetration_penalty = -20.0;

  struct ActionShape {
    double stay, move, terminate, normal_share, cost, rate_factor;
    SojournSpec sojourn;
  };
  const ActionShape shapes[3] = {
      // record
      {0.28, 0.60, 0.12, 0.30, -0.1, 0.8, SojournSpec::exponential(0.4)},
      // low interaction
      {0.30, 0.60, 0.10, 0.10, -4.0, 0.9, SojournSpec::uniform(1.5, 5.0)},
      // high interaction
      {0.50, 0.45, 0.05, 0.04, -10.0, 1.1, SojournSpec::exponential(0.15)},
  };

  for (std::size_t s = 0; s < 11; ++s) {
    // eject: straight to the absorbing state, small handling cost
    m.set_transition(s, 0, kAbsorbing, 1.0, SojournSpec::deterministic(0.3), -0.2);
    m.set_known(s, 0);

    for (std::size_t shape_i = 0; shape_i < 3; ++shape_i) {
      const auto& shape = shapes[shape_i];
      const std::size_t a = shape_i + 1;
      const double to_normal = bridge[s] ? shape.move * shape.normal_share : 0.0;
      const double to_peers = shape.move - to_normal;
      const double per_peer = to_peers / static_cast<double>(neighbors[s].size());

      m.set_transition(s, a, s, shape.stay, shape.sojourn, shape.cost);
      m.set_transition(s, a, kAbsorbing, shape.terminate, shape.sojourn, shape.cost);
      for (std::size_t peer : neighbors[s])
        m.set_transition(s, a, peer, per_peer, shape.sojourn, shape.cost);
      if (to_normal > 0.0)
        m.set_transition(s, a, kNormal, to_normal, shape.sojourn,
                         shape.cost + penetration_penalty);
      m.set_reward_rate(s, a, reward_rate[s] * shape.rate_factor);
    }
  }

  // Normal zone: eject ends the engagement; attract lures the attacker onto
  // the bridge honeypots while production damage accrues.
  m.set_transition(kNormal, 0, kAbsorbing, 1.0, SojournSpec::deterministic(0.3), 0.0);
  m.set_known(kNormal, 0);
  m.set_transition(kNormal, 1, kNormal, 0.10, SojournSpec::exponential(1.2), -0.3);
  m.set_transition(kNormal, 1, 0, 0.30, SojournSpec::exponential(1.2), -0.3);
  m.set_transition(kNormal, 1, 1, 0.30, SojournSpec::exponential(1.2), -0.3);
  m.set_transition(kNormal, 1, 7, 0.30, SojournSpec::exponential(1.2), -0.3);
  m.set_reward_rate(kNormal, 1, -2.5);

  m.set_transition(kAbsorbing, 0, kAbsorbing, 1.0, SojournSpec::exponential(1.0), 0.0);

  // Engagements start either with the attacker in the normal zone or already
  // roaming the honeynet, so every region gathers experience from the start.
  {
    std::vector<double> init(13, 0.0);
    init[kNormal] = 0.5;
    for (std::size_t s = 0; s < 11; ++s) init[s] = 0.5 / 11.0;
    m.set_initial_distribution(ProbabilityVector(std::move(init)));
  }
  m.set_noise_fraction(0.1);
  m.validate();
  return m;
}

}  // namespace defenselab::smdp

#pragma once

// Small hand-built multistage games reused across the bayes tests.

#include <array>
#include <vector>

#include "defenselab/bayes/game.hpp"
#include "defenselab/matrix_game.hpp"
#include "defenselab/random.hpp"

namespace testgames {

using defenselab::Matrix;
using defenselab::ProbabilityVector;
using defenselab::bayes::MultistageGame;
using defenselab::bayes::StageSpace;

// One stage, one type per player, zero-sum: defender maximizes -M, attacker
// maximizes M, for the cost matrix M (row player of the MatrixGame).
inline MultistageGame zero_sum_single_type(const Matrix& cost) {
  StageSpace stage;
  stage.states = {"x0"};
  for (std::size_t i = 0; i < cost.rows(); ++i)
    stage.actions[0].push_back("r" + std::to_string(i));
  for (std::size_t j = 0; j < cost.cols(); ++j)
    stage.actions[1].push_back("c" + std::to_string(j));
  MultistageGame g({{{"only"}, {"only"}}}, {stage});
  for (std::size_t i = 0; i < cost.rows(); ++i)
    for (std::size_t j = 0; j < cost.cols(); ++j) {
      g.set_utility(0, 0, 0, static_cast<int>(i), static_cast<int>(j), 0, 0, -cost(i, j));
      g.set_utility(1, 0, 0, static_cast<int>(i), static_cast<int>(j), 0, 0, cost(i, j));
    }
  return g;
}

// Two stages, two types per player, two actions per player per stage. The
// stage-0 state is "recon"; monitoring a probe is detected and leads to
// "alert", everything else to "calm".
inline MultistageGame deception_2x2() {
  StageSpace s0;
  s0.states = {"recon"};
  s0.actions[0] = {"monitor", "idle"};
  s0.actions[1] = {"probe", "wait"};
  StageSpace s1;
  s1.states = {"alert", "calm"};
  s1.actions[0] = {"block", "allow"};
  s1.actions[1] = {"attack", "retreat"};

  MultistageGame g({{{"high", "low"}, {"good", "bad"}}}, {s0, s1});

  // monitor & probe -> alert; otherwise calm.
  g.set_transition(0, 0, 0, 0, 0);
  g.set_transition(0, 0, 0, 1, 1);
  g.set_transition(0, 0, 1, 0, 1);
  g.set_transition(0, 0, 1, 1, 1);

  // Stage 0. Monitoring is cheap for a sophisticated defender and expensive
  // for a primitive one; probing pays the bad type only when unobserved.
  for (int t0 = 0; t0 < 2; ++t0) {
    for (int t1 = 0; t1 < 2; ++t1) {
      const double monitor_cost = (t0 == 0) ? 0.2 : 1.0;
      const bool bad = (t1 == 1);
      for (int a0 = 0; a0 < 2; ++a0) {
        for (int a1 = 0; a1 < 2; ++a1) {
          const bool monitored = (a0 == 0);
          const bool probed = (a1 == 0);
          double u0 = monitored ? -monitor_cost : 0.0;
          double u1 = 0.0;
          if (probed && bad) {
            u0 += monitored ? 1.0 : -1.5;
            u1 += monitored ? ((t0 == 0) ? -1.2 : -0.3) : 0.8;
          }
          if (probed && !bad) u1 += 0.3;  // legitimate usage value
          g.set_utility(0, 0, 0, a0, a1, t0, t1, u0);
          g.set_utility(1, 0, 0, a0, a1, t0, t1, u1);
        }
      }
    }
  }

  // Stage 1. Blocking stops an attack but disturbs legitimate users; a bad
  // attacker gains from attacking a permissive (low-type) system.
  for (int x = 0; x < 2; ++x) {
    const bool alert = (x == 0);
    for (int t0 = 0; t0 < 2; ++t0) {
      for (int t1 = 0; t1 < 2; ++t1) {
        const bool bad = (t1 == 1);
        for (int a0 = 0; a0 < 2; ++a0) {
          for (int a1 = 0; a1 < 2; ++a1) {
            const bool block = (a0 == 0);
            const bool attack = (a1 == 0);
            double u0 = 0.0, u1 = 0.0;
            if (attack && bad) {
              if (block) {
                u0 += alert ? 1.5 : 0.5;
                u1 -= (t0 == 0) ? 1.0 : 0.4;
              } else {
                u0 -= (t0 == 0) ? 1.0 : 2.0;
                u1 += (t0 == 0) ? 0.5 : 1.5;
              }
            }
            if (block && !bad) {
              u0 -= 0.8;  // service disruption
              u1 -= 0.5;
            }
            if (!attack && bad) u1 += 0.1;  // quietly persists
            g.set_utility(0, 1, x, a0, a1, t0, t1, u0);
            g.set_utility(1, 1, x, a0, a1, t0, t1, u1);
          }
        }
      }
    }
  }

  g.set_prior(0, 0, ProbabilityVector({0.5, 0.5}));
  g.set_prior(0, 1, ProbabilityVector({0.5, 0.5}));
  g.set_prior(1, 0, ProbabilityVector({0.6, 0.4}));
  g.set_prior(1, 1, ProbabilityVector({0.6, 0.4}));
  g.validate();
  return g;
}

// Random game on the same stage/type skeleton as deception_2x2.
inline MultistageGame random_2x2(defenselab::RandomSource& rng) {
  StageSpace s0;
  s0.states = {"x0"};
  s0.actions[0] = {"u", "d"};
  s0.actions[1] = {"l", "r"};
  StageSpace s1;
  s1.states = {"ya", "yb"};
  s1.actions[0] = {"u", "d"};
  s1.actions[1] = {"l", "r"};
  MultistageGame g({{{"t0a", "t0b"}, {"t1a", "t1b"}}}, {s0, s1});
  for (int a0 = 0; a0 < 2; ++a0)
    for (int a1 = 0; a1 < 2; ++a1)
      g.set_transition(0, 0, a0, a1, static_cast<int>(rng.next_u64() % 2));
  for (int k = 0; k < 2; ++k)
    for (int x = 0; x < (k == 0 ? 1 : 2); ++x)
      for (int a0 = 0; a0 < 2; ++a0)
        for (int a1 = 0; a1 < 2; ++a1)
          for (int t0 = 0; t0 < 2; ++t0)
            for (int t1 = 0; t1 < 2; ++t1) {
              g.set_utility(0, k, x, a0, a1, t0, t1, rng.uniform(-2.0, 2.0));
              g.set_utility(1, k, x, a0, a1, t0, t1, rng.uniform(-2.0, 2.0));
            }
  auto random_prior = [&rng]() {
    const double p = rng.uniform(0.15, 0.85);
    return ProbabilityVector({p, 1.0 - p});
  };
  for (int i = 0; i < 2; ++i)
    for (int t = 0; t < 2; ++t) g.set_prior(i, t, random_prior());
  g.validate();
  return g;
}

}  // namespace testgames

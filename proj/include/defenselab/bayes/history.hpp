#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "defenselab/bayes/belief.hpp"
#include "defenselab/bayes/game.hpp"
#include "defenselab/errors.hpp"

namespace defenselab::bayes {

/// Joint action history: one (a0, a1) pair per elapsed stage.
struct History {
  std::vector<std::pair<int, int>> actions;
  int stage() const { return static_cast<int>(actions.size()); }
};

/// Strategy under perfect recall: information point is (history, own type).
using HistoryStrategy = std::function<ProbabilityVector(const History&, int own_type)>;

// Perfect recall keeps the full action history, whose count grows as the
// product of joint action spaces per stage; enumeration is capped at K <= 6.
inline constexpr int kMaxPerfectRecallHorizon = 6;

/// All histories reaching stage k, in lexicographic action order.
inline std::vector<History> enumerate_histories(const MultistageGame& g, int k) {
  if (g.horizon() > kMaxPerfectRecallHorizon)
    throw CapacityError("perfect-recall histories supported only for horizons K <= " +
                        std::to_string(kMaxPerfectRecallHorizon));
  std::vector<History> out = {History{}};
  for (int stage = 0; stage < k; ++stage) {
    std::vector<History> next;
    next.reserve(out.size() * g.num_actions(0, stage) * g.num_actions(1, stage));
    for (const auto& h : out)
      for (int a0 = 0; a0 < g.num_actions(0, stage); ++a0)
        for (int a1 = 0; a1 < g.num_actions(1, stage); ++a1) {
          History ext = h;
          ext.actions.emplace_back(a0, a1);
          next.push_back(std::move(ext));
        }
    out = std::move(next);
  }
  return out;
}

/// History-based Bayes update for `player` after observing the stage's action
/// pair. Both strategy factors enter the numerator as written; the own-action
/// factor cancels unless it is zero, in which case the fallback applies.
inline ProbabilityVector update_belief_history(const MultistageGame& g,
                                               const HistoryStrategy& sigma0,
                                               const HistoryStrategy& sigma1,
                                               const ProbabilityVector& belief,
                                               const History& h, int a0, int a1,
                                               int player, int own_type) {
  const int opp = 1 - player;
  const int own_action = (player == 0) ? a0 : a1;
  const int opp_action = (player == 0) ? a1 : a0;
  const HistoryStrategy& own = (player == 0) ? sigma0 : sigma1;
  const HistoryStrategy& other = (player == 0) ? sigma1 : sigma0;

  const double own_prob = own(h, own_type)[own_action];
  std::vector<double> opp_probs(g.num_types(opp));
  for (int tj = 0; tj < g.num_types(opp); ++tj)
    opp_probs[tj] = other(h, tj)[opp_action];
  return update_belief_history(belief, own_prob, opp_probs,
                               g.prior(player, own_type));
}

}  // namespace defenselab::bayes

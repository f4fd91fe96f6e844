#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "defenselab/bayes/pbne.hpp"
#include "defenselab/bayes/simulate.hpp"
#include "defenselab/io/scenario.hpp"
#include "defenselab/io/traces.hpp"
#include "defenselab/matrix_game.hpp"
#include "defenselab/mtd/learning.hpp"
#include "defenselab/schedule.hpp"
#include "defenselab/smdp/planning.hpp"
#include "defenselab/smdp/simulate.hpp"

namespace defenselab::lab {

using io::Cell;
using io::Engine;
using io::TraceFormat;
using io::TraceTable;

struct ExperimentPlan {
  Engine engine = Engine::kSmdp;
  std::string scenario_path;
  int replications = 1;
  std::uint64_t base_seed = 1;
  std::string out_dir;
  TraceFormat format = TraceFormat::kCsv;
  std::int64_t record_every = 1;

  // bayes
  double pbne_epsilon = 1e-6;
  int pbne_max_iter = 200;

  // mtd
  std::int64_t mtd_steps = 10000;
  RateSchedule mtd_lambda = RateSchedule::harmonic_like(1.0);
  RateSchedule mtd_mu = RateSchedule::power(0.6);
  mtd::EntropySchedule mtd_entropy;
  double mtd_noise_half_width = 0.0;
  double mtd_exploration = 0.05;
  bool mtd_expect_convergence = false;

  // smdp
  std::int64_t smdp_epochs = 5000;
  double smdp_epsilon = 0.2;
  double smdp_k_c = 1.0;
  double smdp_initial_q = 0.0;

  void validate() const {
    if (replications < 1) throw ConfigError("replications", 0, "replications must be >= 1");
    if (scenario_path.empty()) throw ConfigError("scenario", 0, "scenario path required");
    if (out_dir.empty()) throw ConfigError("out", 0, "output directory required");
    if (record_every < 1) throw ConfigError("record-every", 0, "record-every must be >= 1");
    if (mtd_steps < 1 || smdp_epochs < 1)
      throw ConfigError("steps", 0, "step/epoch counts must be >= 1");
    if (!(smdp_epsilon >= 0.0 && smdp_epsilon <= 1.0))
      throw ConfigError("epsilon", 0, "epsilon must be in [0, 1]");
    if (!(smdp_k_c > 0.0)) throw ConfigError("kc", 0, "k_c must be > 0");
    if (!(pbne_epsilon >= 0.0)) throw ConfigError("eps", 0, "PBNE slack must be >= 0");
  }
};

struct TraceBundle {
  Engine engine = Engine::kSmdp;
  std::vector<TraceTable> tables;  // per-replication traces plus aux series
  nlohmann::ordered_json summary;
  std::vector<std::string> failures;  // one message per failed replication
  bool complete() const { return failures.empty(); }
};

/// Writes every table plus summary.json into `dir`; returns the file paths.
inline std::vector<std::filesystem::path> export_traces(const TraceBundle& bundle,
                                                        TraceFormat format,
                                                        const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& table : bundle.tables)
    paths.push_back(io::write_trace(table, format, dir));
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string());
  const auto summary_path = dir / "summary.json";
  io::detail::write_atomically(summary_path, bundle.summary.dump(2) + "\n");
  paths.push_back(summary_path);
  return paths;
}

namespace detail {

inline std::string replication_name(int r) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "trace_%03d", r);
  return buf;
}

inline nlohmann::ordered_json base_summary(const ExperimentPlan& plan) {
  nlohmann::ordered_json s;
  s["engine"] = io::engine_name(plan.engine);
  s["scenario"] = std::filesystem::path(plan.scenario_path).filename().string();
  s["replications"] = plan.replications;
  s["base_seed"] = plan.base_seed;
  nlohmann::ordered_json seeds = nlohmann::ordered_json::array();
  for (int r = 0; r < plan.replications; ++r)
    seeds.push_back(plan.base_seed + static_cast<std::uint64_t>(r));
  s["seeds"] = seeds;
  return s;
}

// ---- mtd ----

inline TraceBundle run_mtd(const ExperimentPlan& plan, const mtd::LayerGame& layer) {
  TraceBundle bundle;
  bundle.engine = Engine::kMtd;
  bundle.summary = base_summary(plan);

  const auto spe = solve_zero_sum(layer.cost_game());
  const std::size_t width = std::max(layer.num_configs(), layer.num_attacks());

  std::vector<std::string> columns = {"replication", "step", "side", "action", "payoff"};
  for (std::size_t i = 0; i < width; ++i) columns.push_back("policy_" + std::to_string(i));
  for (std::size_t i = 0; i < width; ++i) columns.push_back("risk_" + std::to_string(i));

  nlohmann::ordered_json final_dists = nlohmann::ordered_json::array();
  double mean_final = 0.0;
  int ok = 0;

  for (int r = 0; r < plan.replications; ++r) {
    try {
      RandomSource rng(plan.base_seed + static_cast<std::uint64_t>(r));
      auto defender = mtd::LearnerState::defender(layer.num_configs(), plan.mtd_lambda,
                                                  plan.mtd_mu, plan.mtd_entropy);
      auto attacker = mtd::LearnerState::attacker(layer.num_attacks(), plan.mtd_lambda,
                                                  plan.mtd_mu, plan.mtd_entropy);
      const auto traj = mtd::run_coupled_learning(
          layer, std::move(defender), std::move(attacker), plan.mtd_steps, rng,
          plan.mtd_noise_half_width, plan.mtd_expect_convergence, plan.record_every,
          plan.mtd_exploration);

      TraceTable table;
      table.name = replication_name(r);
      table.columns = columns;
      for (const auto& step : traj.steps) {
        for (int side = 0; side < 2; ++side) {
          std::vector<Cell> row;
          row.emplace_back(static_cast<std::int64_t>(r));
          row.emplace_back(step.t);
          row.emplace_back(std::string(side == 0 ? "S" : "A"));
          row.emplace_back(side == 0 ? layer.config_labels()[step.config]
                                     : layer.attack_labels()[step.attack]);
          row.emplace_back(step.payoff);
          const auto& policy = side == 0 ? step.policy_defender : step.policy_attacker;
          const auto& risk = side == 0 ? step.risk_defender : step.risk_attacker;
          for (std::size_t i = 0; i < width; ++i)
            row.emplace_back(i < policy.size() ? Cell(policy[i]) : Cell(std::monostate{}));
          for (std::size_t i = 0; i < width; ++i)
            row.emplace_back(i < risk.size() ? Cell(risk[i]) : Cell(std::monostate{}));
          table.rows.push_back(std::move(row));
        }
      }
      bundle.tables.push_back(std::move(table));

      const double dist =
          std::max(linf_distance(traj.final_defender.policy, spe.row_strategy),
                   linf_distance(traj.final_attacker.policy, spe.col_strategy));
      final_dists.push_back(dist);
      mean_final += dist;
      ++ok;
    } catch (const std::exception& e) {
      bundle.failures.push_back("replication " + std::to_string(r) + ": " + e.what());
    }
  }

  nlohmann::ordered_json spe_json;
  spe_json["value"] = spe.value;
  spe_json["defender"] = std::vector<double>(spe.row_strategy.begin(), spe.row_strategy.end());
  spe_json["attacker"] = std::vector<double>(spe.col_strategy.begin(), spe.col_strategy.end());
  bundle.summary["saddle_point"] = spe_json;
  bundle.summary["final_linf_to_spe"] = final_dists;
  bundle.summary["final_linf_to_spe_mean"] = ok ? mean_final / ok : 0.0;
  return bundle;
}

// ---- smdp ----

inline TraceBundle run_smdp(const ExperimentPlan& plan, const smdp::SmdpModel& model) {
  TraceBundle bundle;
  bundle.engine = Engine::kSmdp;
  bundle.summary = base_summary(plan);

  const auto equiv = smdp::equivalent_mdp(model);
  const auto oracle = smdp::value_iterate(equiv, 1e-10);

  // Watch the most likely start state's greedy action.
  std::size_t watch_state = 0;
  for (std::size_t s = 1; s < model.num_states(); ++s)
    if (model.initial_distribution()[s] > model.initial_distribution()[watch_state])
      watch_state = s;
  const smdp::WatchTarget watch{watch_state, oracle.greedy_policy[watch_state]};

  const std::vector<std::string> columns = {"replication", "epoch",  "state", "action",
                                            "sojourn",     "reward", "q_value"};
  std::vector<std::vector<double>> watch_series;

  for (int r = 0; r < plan.replications; ++r) {
    try {
      RandomSource rng(plan.base_seed + static_cast<std::uint64_t>(r));
      const auto result = smdp::simulate_engagement(
          model, smdp::LearnerConfig{plan.smdp_epsilon, plan.smdp_k_c, plan.smdp_initial_q},
          plan.smdp_epochs, rng, watch);

      TraceTable table;
      table.name = replication_name(r);
      table.columns = columns;
      for (const auto& rec : result.log) {
        if (rec.epoch % plan.record_every != 0 &&
            rec.epoch + 1 != static_cast<std::int64_t>(result.log.size()))
          continue;
        const double discounted_reward =
            rec.r1_observed + rec.r2_observed *
                                  (1.0 - std::exp(-model.gamma() * rec.sojourn)) /
                                  model.gamma();
        table.rows.push_back({Cell(static_cast<std::int64_t>(r)), Cell(rec.epoch),
                              Cell(model.state_labels()[rec.state]),
                              Cell(model.action_labels(rec.state)[rec.action]),
                              Cell(rec.sojourn), Cell(discounted_reward),
                              Cell(rec.q_after)});
      }
      bundle.tables.push_back(std::move(table));

      TraceTable watch_table;
      watch_table.name = "watch_" + std::to_string(r);
      watch_table.columns = {"replication", "epoch", "q_watch"};
      for (std::size_t e = 0; e < result.watch_series.size(); ++e)
        watch_table.rows.push_back({Cell(static_cast<std::int64_t>(r)),
                                    Cell(static_cast<std::int64_t>(e)),
                                    Cell(result.watch_series[e])});
      bundle.tables.push_back(std::move(watch_table));
      watch_series.push_back(result.watch_series);
    } catch (const std::exception& e) {
      bundle.failures.push_back("replication " + std::to_string(r) + ": " + e.what());
    }
  }

  // Aggregate mean/variance series over replications, recomputable from the
  // watch_* files (plain left-to-right sums in replication order).
  nlohmann::ordered_json mean_series = nlohmann::ordered_json::array();
  nlohmann::ordered_json var_series = nlohmann::ordered_json::array();
  if (!watch_series.empty()) {
    const std::size_t epochs = watch_series.front().size();
    for (std::size_t e = 0; e < epochs; ++e) {
      double mean = 0.0;
      for (const auto& series : watch_series) mean += series[e];
      mean /= static_cast<double>(watch_series.size());
      double var = 0.0;
      if (watch_series.size() > 1) {
        for (const auto& series : watch_series)
          var += (series[e] - mean) * (series[e] - mean);
        var /= static_cast<double>(watch_series.size() - 1);
      }
      mean_series.push_back(mean);
      var_series.push_back(var);
    }
  }
  bundle.summary["watch_state"] = model.state_labels()[watch.state];
  bundle.summary["watch_action"] = model.action_labels(watch.state)[watch.action];
  bundle.summary["oracle_value"] = oracle.value[watch.state];
  bundle.summary["oracle_contraction_modulus"] = oracle.contraction_modulus;
  bundle.summary["q_watch_mean"] = mean_series;
  bundle.summary["q_watch_var"] = var_series;
  return bundle;
}

// ---- bayes ----

inline TraceBundle run_bayes(const ExperimentPlan& plan, const bayes::MultistageGame& game) {
  TraceBundle bundle;
  bundle.engine = Engine::kBayes;
  bundle.summary = base_summary(plan);

  const auto solved = bayes::solve_pbne(game, plan.pbne_epsilon, plan.pbne_max_iter);

  std::vector<std::string> columns = {"replication", "stage",    "state",   "action_1",
                                      "action_2",    "payoff_1", "payoff_2"};
  for (int t = 0; t < game.num_types(1); ++t)
    columns.push_back("belief_1_" + game.type_labels(1)[t]);
  for (int t = 0; t < game.num_types(0); ++t)
    columns.push_back("belief_2_" + game.type_labels(0)[t]);

  double payoff_mean[2] = {0.0, 0.0};
  for (int r = 0; r < plan.replications; ++r) {
    try {
      RandomSource rng(plan.base_seed + static_cast<std::uint64_t>(r));
      const int t0 = static_cast<int>(sample_categorical(game.nature(0), rng));
      const int t1 = static_cast<int>(sample_categorical(game.nature(1), rng));
      const auto traj = bayes::simulate_episode(game, solved.profile, t0, t1, rng);

      TraceTable table;
      table.name = replication_name(r);
      table.columns = columns;
      for (const auto& step : traj.steps) {
        std::vector<Cell> row = {
            Cell(static_cast<std::int64_t>(r)),
            Cell(static_cast<std::int64_t>(step.stage)),
            Cell(game.state_labels(step.stage)[step.state]),
            Cell(game.action_labels(0, step.stage)[step.action0]),
            Cell(game.action_labels(1, step.stage)[step.action1]),
            Cell(step.payoff0),
            Cell(step.payoff1)};
        for (double w : step.belief0) row.emplace_back(w);
        for (double w : step.belief1) row.emplace_back(w);
        table.rows.push_back(std::move(row));
        payoff_mean[0] += step.payoff0 / plan.replications;
        payoff_mean[1] += step.payoff1 / plan.replications;
      }
      bundle.tables.push_back(std::move(table));
    } catch (const std::exception& e) {
      bundle.failures.push_back("replication " + std::to_string(r) + ": " + e.what());
    }
  }

  bundle.summary["converged"] = solved.converged;
  bundle.summary["sweeps"] = solved.sweeps;
  bundle.summary["belief_residual"] = solved.belief_residual;
  bundle.summary["consistency_residual"] = solved.report.consistency_residual;
  bundle.summary["max_deviation_gain"] = solved.report.max_deviation_gain();
  bundle.summary["mean_cumulative_payoff_1"] = payoff_mean[0];
  bundle.summary["mean_cumulative_payoff_2"] = payoff_mean[1];
  return bundle;
}

}  // namespace detail

/// Runs the plan: replication r uses seed base_seed + r; outputs are written
/// atomically; identical plans reproduce identical bundles byte for byte.
/// Engine failures are collected per replication rather than aborting.
inline TraceBundle run_experiment(const ExperimentPlan& plan) {
  plan.validate();
  const auto scenario = io::parse_scenario(plan.scenario_path);
  if (scenario.engine != plan.engine)
    throw ConfigError("engine", 0,
                      "scenario engine is " + io::engine_name(scenario.engine) +
                          " but the plan asks for " + io::engine_name(plan.engine));

  TraceBundle bundle;
  switch (plan.engine) {
    case Engine::kMtd:
      bundle = detail::run_mtd(plan, *scenario.layer);
      break;
    case Engine::kSmdp:
      bundle = detail::run_smdp(plan, *scenario.smdp_model);
      break;
    case Engine::kBayes:
      bundle = detail::run_bayes(plan, *scenario.bayes_game);
      break;
  }
  if (!bundle.failures.empty()) {
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const auto& f : bundle.failures) fails.push_back(f);
    bundle.summary["failures"] = fails;
  }
  export_traces(bundle, plan.format, plan.out_dir);
  return bundle;
}

}  // namespace defenselab::lab

#pragma once

// Scenario files: a line-oriented text format with [section] headers and
// whitespace-separated key lines. One file describes one model for one
// engine. The serializers below emit the canonical form; parsing the
// canonical form and re-serializing reproduces it byte for byte.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "defenselab/bayes/game.hpp"
#include "defenselab/errors.hpp"
#include "defenselab/io/format.hpp"
#include "defenselab/mtd/layer_game.hpp"
#include "defenselab/smdp/model.hpp"

namespace defenselab::io {

enum class Engine { kBayes, kMtd, kSmdp };

inline std::string engine_name(Engine e) {
  switch (e) {
    case Engine::kBayes: return "bayes";
    case Engine::kMtd: return "mtd";
    case Engine::kSmdp: return "smdp";
  }
  return "?";
}

struct Scenario {
  Engine engine = Engine::kSmdp;
  std::optional<bayes::MultistageGame> bayes_game;
  std::optional<mtd::LayerGame> layer;
  std::optional<smdp::SmdpModel> smdp_model;
};

namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path.string());
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line;
    line.number = number;
    std::string token;
    while (ss >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] inline void fail(const Line& line, const std::string& msg) {
  throw ConfigError(line.tokens.empty() ? "" : line.tokens[0], line.number, msg);
}

inline double want_double(const Line& line, std::size_t idx) {
  if (idx >= line.tokens.size()) fail(line, "missing numeric field");
  double v = 0.0;
  if (!parse_double(line.tokens[idx], v))
    fail(line, "'" + line.tokens[idx] + "' is not a number");
  return v;
}

inline std::int64_t want_int(const Line& line, std::size_t idx) {
  if (idx >= line.tokens.size()) fail(line, "missing integer field");
  std::int64_t v = 0;
  if (!parse_int(line.tokens[idx], v))
    fail(line, "'" + line.tokens[idx] + "' is not an integer");
  return v;
}

inline const std::string& want_token(const Line& line, std::size_t idx) {
  if (idx >= line.tokens.size()) fail(line, "missing field");
  return line.tokens[idx];
}

inline std::size_t find_label(const Line& line, const std::vector<std::string>& labels,
                              const std::string& token, const char* kind) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == token) return i;
  fail(line, std::string("unknown ") + kind + " '" + token + "'");
}

inline smdp::SojournSpec parse_sojourn(const Line& line, std::size_t idx,
                                       std::size_t* consumed) {
  const std::string& family = want_token(line, idx);
  if (family == "exponential") {
    *consumed = 2;
    return smdp::SojournSpec::exponential(want_double(line, idx + 1));
  }
  if (family == "deterministic") {
    *consumed = 2;
    return smdp::SojournSpec::deterministic(want_double(line, idx + 1));
  }
  if (family == "uniform") {
    *consumed = 3;
    return smdp::SojournSpec::uniform(want_double(line, idx + 1),
                                      want_double(line, idx + 2));
  }
  fail(line, "unknown sojourn family '" + family +
                 "' (expected exponential, deterministic or uniform)");
}

inline std::string sojourn_text(const smdp::SojournSpec& spec) {
  using Family = smdp::SojournSpec::Family;
  switch (spec.family()) {
    case Family::kExponential:
      return "exponential " + format_double(spec.param_a());
    case Family::kDeterministic:
      return "deterministic " + format_double(spec.param_a());
    case Family::kUniform:
      return "uniform " + format_double(spec.param_a()) + " " +
             format_double(spec.param_b());
  }
  return "?";
}

// ---- smdp ----

inline smdp::SmdpModel parse_smdp(const std::vector<Line>& lines, std::size_t start) {
  double gamma = -1.0, reward_bound = -1.0, noise_fraction = -1.0;
  std::string absorbing_label;
  std::vector<std::string> states;
  std::vector<std::vector<std::string>> actions;
  std::vector<std::pair<Line, std::vector<std::string>>> deferred;  // non-[states] lines
  std::vector<std::pair<std::string, double>> initial;

  std::string section;
  for (std::size_t i = start; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& head = line.tokens[0];
    if (head.front() == '[') {
      section = head;
      continue;
    }
    if (section == "[model]") {
      if (head == "gamma") gamma = want_double(line, 1);
      else if (head == "reward-bound") reward_bound = want_double(line, 1);
      else if (head == "noise-fraction") noise_fraction = want_double(line, 1);
      else if (head == "absorbing") absorbing_label = want_token(line, 1);
      else fail(line, "unknown key in [model]");
    } else if (section == "[states]") {
      if (head != "state") fail(line, "expected 'state' lines in [states]");
      if (line.tokens.size() < 3) fail(line, "state needs a label and actions");
      states.push_back(line.tokens[1]);
      actions.emplace_back(line.tokens.begin() + 2, line.tokens.end());
    } else if (section == "[initial]" || section == "[transitions]" ||
               section == "[rewards]" || section == "[known]") {
      deferred.emplace_back(line, std::vector<std::string>{section});
    } else {
      fail(line, "unknown section " + section + " for engine smdp");
    }
  }

  if (states.empty()) throw ConfigError("states", 0, "scenario defines no states");
  if (gamma < 0.0) throw ConfigError("gamma", 0, "[model] must set gamma");
  if (reward_bound < 0.0) throw ConfigError("reward-bound", 0, "[model] must set reward-bound");
  if (absorbing_label.empty()) throw ConfigError("absorbing", 0, "[model] must set absorbing");

  int absorbing = -1;
  for (std::size_t s = 0; s < states.size(); ++s)
    if (states[s] == absorbing_label) absorbing = static_cast<int>(s);
  if (absorbing < 0)
    throw ConfigError("absorbing", 0, "absorbing state '" + absorbing_label + "' undefined");

  smdp::SmdpModel model(states, actions, absorbing, gamma, reward_bound);
  if (noise_fraction >= 0.0) model.set_noise_fraction(noise_fraction);

  std::vector<double> init(states.size(), 0.0);
  bool have_initial = false;

  for (const auto& [line, meta] : deferred) {
    const std::string& section_name = meta[0];
    const std::string& head = line.tokens[0];
    if (section_name == "[initial]") {
      if (head != "start") fail(line, "expected 'start' lines in [initial]");
      const std::size_t s = find_label(line, states, want_token(line, 1), "state");
      init[s] = want_double(line, 2);
      have_initial = true;
    } else if (section_name == "[transitions]") {
      if (head != "tr") fail(line, "expected 'tr' lines in [transitions]");
      const std::size_t s = find_label(line, states, want_token(line, 1), "state");
      const std::size_t a = find_label(line, actions[s], want_token(line, 2), "action");
      const std::size_t next = find_label(line, states, want_token(line, 3), "state");
      const double prob = want_double(line, 4);
      std::size_t consumed = 0;
      const auto sojourn = parse_sojourn(line, 5, &consumed);
      const double r1 = (line.tokens.size() > 5 + consumed)
                            ? want_double(line, 5 + consumed)
                            : 0.0;
      try {
        model.set_transition(s, a, next, prob, sojourn, r1);
      } catch (const ModelError& e) {
        fail(line, e.what());
      }
    } else if (section_name == "[rewards]") {
      if (head != "rate") fail(line, "expected 'rate' lines in [rewards]");
      const std::size_t s = find_label(line, states, want_token(line, 1), "state");
      const std::size_t a = find_label(line, actions[s], want_token(line, 2), "action");
      model.set_reward_rate(s, a, want_double(line, 3));
    } else {  // [known]
      if (head != "known") fail(line, "expected 'known' lines in [known]");
      const std::size_t s = find_label(line, states, want_token(line, 1), "state");
      const std::size_t a = find_label(line, actions[s], want_token(line, 2), "action");
      model.set_known(s, a);
    }
  }

  if (have_initial) {
    try {
      model.set_initial_distribution(ProbabilityVector(init));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("start", 0, std::string("[initial] is not a distribution: ") + e.what());
    }
  }
  try {
    model.validate();
  } catch (const ModelError& e) {
    throw ConfigError("tr", 0, e.what());
  }
  return model;
}

inline void serialize_smdp(std::ostream& out, const smdp::SmdpModel& m) {
  out << "\n[model]\n";
  out << "gamma " << format_double(m.gamma()) << "\n";
  out << "reward-bound " << format_double(m.reward_bound()) << "\n";
  out << "noise-fraction " << format_double(m.noise_fraction()) << "\n";
  out << "absorbing " << m.state_labels()[m.absorbing_state()] << "\n";

  out << "\n[states]\n";
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    out << "state " << m.state_labels()[s];
    for (const auto& a : m.action_labels(s)) out << " " << a;
    out << "\n";
  }

  out << "\n[initial]\n";
  for (std::size_t s = 0; s < m.num_states(); ++s)
    if (m.initial_distribution()[s] > 0.0)
      out << "start " << m.state_labels()[s] << " "
          << format_double(m.initial_distribution()[s]) << "\n";

  out << "\n[transitions]\n";
  for (std::size_t s = 0; s < m.num_states(); ++s)
    for (std::size_t a = 0; a < m.num_actions(s); ++a)
      for (std::size_t next = 0; next < m.num_states(); ++next) {
        const double p = m.transition_row(s, a)[next];
        if (p == 0.0) continue;
        out << "tr " << m.state_labels()[s] << " " << m.action_labels(s)[a] << " "
            << m.state_labels()[next] << " " << format_double(p) << " "
            << sojourn_text(m.sojourn(s, a, next)) << " "
            << format_double(m.immediate_reward(s, a, next)) << "\n";
      }

  out << "\n[rewards]\n";
  for (std::size_t s = 0; s < m.num_states(); ++s)
    for (std::size_t a = 0; a < m.num_actions(s); ++a)
      if (m.reward_rate(s, a) != 0.0)
        out << "rate " << m.state_labels()[s] << " " << m.action_labels(s)[a] << " "
            << format_double(m.reward_rate(s, a)) << "\n";

  out << "\n[known]\n";
  for (std::size_t s = 0; s < m.num_states(); ++s)
    for (std::size_t a = 0; a < m.num_actions(s); ++a)
      if (m.known(s, a))
        out << "known " << m.state_labels()[s] << " " << m.action_labels(s)[a] << "\n";
}

// ---- mtd ----

inline mtd::LayerGame parse_mtd(const std::vector<Line>& lines, std::size_t start) {
  std::vector<std::string> configs, vulns, attacks;
  std::vector<std::pair<std::string, std::string>> exposures;
  std::vector<std::vector<double>> rows;
  std::vector<Line> row_lines;

  std::string section;
  for (std::size_t i = start; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& head = line.tokens[0];
    if (head.front() == '[') {
      section = head;
      continue;
    }
    if (section == "[layer]") {
      if (head == "configs") configs.assign(line.tokens.begin() + 1, line.tokens.end());
      else if (head == "vulns") vulns.assign(line.tokens.begin() + 1, line.tokens.end());
      else if (head == "attacks") attacks.assign(line.tokens.begin() + 1, line.tokens.end());
      else fail(line, "unknown key in [layer]");
    } else if (section == "[surface]") {
      if (head != "expose") fail(line, "expected 'expose' lines in [surface]");
      exposures.emplace_back(want_token(line, 1), want_token(line, 2));
    } else if (section == "[damage]") {
      if (head != "row") fail(line, "expected 'row' lines in [damage]");
      std::vector<double> row;
      for (std::size_t c = 1; c < line.tokens.size(); ++c)
        row.push_back(want_double(line, c));
      rows.push_back(std::move(row));
      row_lines.push_back(line);
    } else {
      fail(line, "unknown section " + section + " for engine mtd");
    }
  }

  if (configs.empty()) throw ConfigError("configs", 0, "[layer] must list configs");
  if (vulns.empty()) throw ConfigError("vulns", 0, "[layer] must list vulns");
  if (rows.size() != vulns.size())
    throw ConfigError("row", 0, "[damage] must have one row per vulnerability");
  Matrix damage(vulns.size(), configs.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != configs.size())
      fail(row_lines[r], "damage row needs one entry per configuration");
    for (std::size_t c = 0; c < configs.size(); ++c) damage(r, c) = rows[r][c];
  }

  std::vector<std::vector<std::size_t>> surface(configs.size());
  for (const auto& [config, vuln] : exposures) {
    std::size_t ci = configs.size(), vi = vulns.size();
    for (std::size_t i = 0; i < configs.size(); ++i)
      if (configs[i] == config) ci = i;
    for (std::size_t i = 0; i < vulns.size(); ++i)
      if (vulns[i] == vuln) vi = i;
    if (ci == configs.size())
      throw ConfigError("expose", 0, "unknown configuration '" + config + "'");
    if (vi == vulns.size())
      throw ConfigError("expose", 0, "unknown vulnerability '" + vuln + "'");
    surface[ci].push_back(vi);
  }

  try {
    return mtd::LayerGame(configs, vulns, attacks, surface, damage);
  } catch (const ModelError& e) {
    throw ConfigError("layer", 0, e.what());
  }
}

inline void serialize_mtd(std::ostream& out, const mtd::LayerGame& g) {
  out << "\n[layer]\n";
  out << "configs";
  for (const auto& c : g.config_labels()) out << " " << c;
  out << "\nvulns";
  for (const auto& v : g.vuln_labels()) out << " " << v;
  out << "\nattacks";
  for (const auto& a : g.attack_labels()) out << " " << a;
  out << "\n\n[surface]\n";
  for (std::size_t c = 0; c < g.num_configs(); ++c)
    for (std::size_t v = 0; v < g.vuln_labels().size(); ++v)
      if (g.exposes(v, c))
        out << "expose " << g.config_labels()[c] << " " << g.vuln_labels()[v] << "\n";
  out << "\n[damage]\n";
  for (std::size_t v = 0; v < g.vuln_labels().size(); ++v) {
    out << "row";
    for (std::size_t c = 0; c < g.num_configs(); ++c)
      out << " " << format_double(g.damage_matrix()(v, c));
    out << "\n";
  }
}

// ---- bayes ----

inline bayes::MultistageGame parse_bayes(const std::vector<Line>& lines,
                                         std::size_t start) {
  std::array<std::vector<std::string>, 2> types;
  std::string initial_label;
  std::vector<bayes::StageSpace> stages;
  std::vector<Line> game_lines, transition_lines, utility_lines;

  std::string section;
  int current_stage = -1;
  for (std::size_t i = start; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& head = line.tokens[0];
    if (head == "[stage") {
      const std::string& num = want_token(line, 1);
      if (num.empty() || num.back() != ']') fail(line, "malformed [stage k] header");
      std::int64_t k = 0;
      if (!parse_int(num.substr(0, num.size() - 1), k) ||
          k != static_cast<std::int64_t>(stages.size()))
        fail(line, "stages must appear in order 0, 1, ...");
      current_stage = static_cast<int>(k);
      stages.emplace_back();
      section = "[stage]";
      continue;
    }
    if (head.front() == '[') {
      section = head;
      current_stage = -1;
      continue;
    }
    if (section == "[game]") {
      if (head == "types1") types[0].assign(line.tokens.begin() + 1, line.tokens.end());
      else if (head == "types2") types[1].assign(line.tokens.begin() + 1, line.tokens.end());
      else if (head == "initial") initial_label = want_token(line, 1);
      else game_lines.push_back(line);
    } else if (section == "[stage]") {
      auto& stage = stages[current_stage];
      if (head == "states")
        stage.states.assign(line.tokens.begin() + 1, line.tokens.end());
      else if (head == "actions1")
        stage.actions[0].assign(line.tokens.begin() + 1, line.tokens.end());
      else if (head == "actions2")
        stage.actions[1].assign(line.tokens.begin() + 1, line.tokens.end());
      else fail(line, "unknown key in [stage]");
    } else if (section == "[transitions]") {
      if (head != "f") fail(line, "expected 'f' lines in [transitions]");
      transition_lines.push_back(line);
    } else if (section == "[utilities]") {
      if (head != "u") fail(line, "expected 'u' lines in [utilities]");
      utility_lines.push_back(line);
    } else {
      fail(line, "unknown section " + section + " for engine bayes");
    }
  }

  if (types[0].empty() || types[1].empty())
    throw ConfigError("types", 0, "[game] must list types1 and types2");
  if (stages.empty()) throw ConfigError("stage", 0, "no [stage k] sections");

  int initial_state = 0;
  if (!initial_label.empty()) {
    initial_state = -1;
    for (std::size_t s = 0; s < stages[0].states.size(); ++s)
      if (stages[0].states[s] == initial_label) initial_state = static_cast<int>(s);
    if (initial_state < 0)
      throw ConfigError("initial", 0, "initial state '" + initial_label + "' undefined");
  }

  bayes::MultistageGame game(types, stages, initial_state);

  for (const Line& line : game_lines) {
    const std::string& head = line.tokens[0];
    auto read_dist = [&](std::size_t from, std::size_t count) {
      std::vector<double> w;
      for (std::size_t i = 0; i < count; ++i) w.push_back(want_double(line, from + i));
      try {
        return ProbabilityVector(std::move(w));
      } catch (const std::invalid_argument& e) {
        fail(line, std::string("not a distribution: ") + e.what());
      }
    };
    if (head == "prior1" || head == "prior2") {
      const int player = (head == "prior1") ? 0 : 1;
      const std::size_t own =
          find_label(line, types[player], want_token(line, 1), "type");
      game.set_prior(player, static_cast<int>(own),
                     read_dist(2, types[1 - player].size()));
    } else if (head == "nature1" || head == "nature2") {
      const int player = (head == "nature1") ? 0 : 1;
      game.set_nature(player, read_dist(1, types[player].size()));
    } else if (head == "noise1" || head == "noise2") {
      const int player = (head == "noise1") ? 0 : 1;
      game.set_noise(player, bayes::NoiseSpec{want_double(line, 1)});
    } else {
      fail(line, "unknown key in [game]");
    }
  }

  for (const Line& line : transition_lines) {
    const int k = static_cast<int>(want_int(line, 1));
    if (k < 0 || k + 1 >= game.num_stages()) fail(line, "stage out of range");
    const auto x = find_label(line, stages[k].states, want_token(line, 2), "state");
    const auto a0 = find_label(line, stages[k].actions[0], want_token(line, 3), "action");
    const auto a1 = find_label(line, stages[k].actions[1], want_token(line, 4), "action");
    const auto next =
        find_label(line, stages[k + 1].states, want_token(line, 5), "state");
    game.set_transition(k, static_cast<int>(x), static_cast<int>(a0),
                        static_cast<int>(a1), static_cast<int>(next));
  }

  for (const Line& line : utility_lines) {
    const int k = static_cast<int>(want_int(line, 1));
    if (k < 0 || k >= game.num_stages()) fail(line, "stage out of range");
    const auto x = find_label(line, stages[k].states, want_token(line, 2), "state");
    const auto a0 = find_label(line, stages[k].actions[0], want_token(line, 3), "action");
    const auto a1 = find_label(line, stages[k].actions[1], want_token(line, 4), "action");
    const auto t0 = find_label(line, types[0], want_token(line, 5), "type");
    const auto t1 = find_label(line, types[1], want_token(line, 6), "type");
    game.set_utility(0, k, static_cast<int>(x), static_cast<int>(a0),
                     static_cast<int>(a1), static_cast<int>(t0), static_cast<int>(t1),
                     want_double(line, 7));
    game.set_utility(1, k, static_cast<int>(x), static_cast<int>(a0),
                     static_cast<int>(a1), static_cast<int>(t0), static_cast<int>(t1),
                     want_double(line, 8));
  }

  try {
    game.validate();
  } catch (const ModelError& e) {
    throw ConfigError("f", 0, e.what());
  }
  return game;
}

inline void serialize_bayes(std::ostream& out, const bayes::MultistageGame& g) {
  out << "\n[game]\n";
  out << "types1";
  for (const auto& t : g.type_labels(0)) out << " " << t;
  out << "\ntypes2";
  for (const auto& t : g.type_labels(1)) out << " " << t;
  out << "\ninitial " << g.state_labels(0)[g.initial_state()] << "\n";
  for (int player = 0; player < 2; ++player)
    for (int own = 0; own < g.num_types(player); ++own) {
      out << "prior" << (player + 1) << " " << g.type_labels(player)[own];
      for (double w : g.prior(player, own)) out << " " << format_double(w);
      out << "\n";
    }
  for (int player = 0; player < 2; ++player) {
    out << "nature" << (player + 1);
    for (double w : g.nature(player)) out << " " << format_double(w);
    out << "\n";
  }
  for (int player = 0; player < 2; ++player)
    out << "noise" << (player + 1) << " " << format_double(g.noise(player).half_width)
        << "\n";

  for (int k = 0; k < g.num_stages(); ++k) {
    out << "\n[stage " << k << "]\n";
    out << "states";
    for (const auto& s : g.state_labels(k)) out << " " << s;
    out << "\nactions1";
    for (const auto& a : g.action_labels(0, k)) out << " " << a;
    out << "\nactions2";
    for (const auto& a : g.action_labels(1, k)) out << " " << a;
    out << "\n";
  }

  out << "\n[transitions]\n";
  for (int k = 0; k + 1 < g.num_stages(); ++k)
    for (int x = 0; x < g.num_states(k); ++x)
      for (int a0 = 0; a0 < g.num_actions(0, k); ++a0)
        for (int a1 = 0; a1 < g.num_actions(1, k); ++a1)
          out << "f " << k << " " << g.state_labels(k)[x] << " "
              << g.action_labels(0, k)[a0] << " " << g.action_labels(1, k)[a1] << " "
              << g.state_labels(k + 1)[g.transition(k, x, a0, a1)] << "\n";

  out << "\n[utilities]\n";
  for (int k = 0; k < g.num_stages(); ++k)
    for (int x = 0; x < g.num_states(k); ++x)
      for (int a0 = 0; a0 < g.num_actions(0, k); ++a0)
        for (int a1 = 0; a1 < g.num_actions(1, k); ++a1)
          for (int t0 = 0; t0 < g.num_types(0); ++t0)
            for (int t1 = 0; t1 < g.num_types(1); ++t1)
              out << "u " << k << " " << g.state_labels(k)[x] << " "
                  << g.action_labels(0, k)[a0] << " " << g.action_labels(1, k)[a1]
                  << " " << g.type_labels(0)[t0] << " " << g.type_labels(1)[t1] << " "
                  << format_double(g.utility(0, k, x, a0, a1, t0, t1)) << " "
                  << format_double(g.utility(1, k, x, a0, a1, t0, t1)) << "\n";
}

}  // namespace detail

/// Parses and validates a scenario file; every model invariant is checked at
/// load, and schema problems carry the offending line.
inline Scenario parse_scenario(const std::filesystem::path& path) {
  const auto lines = detail::tokenize_file(path);
  if (lines.size() < 2 || lines[0].tokens[0] != "version")
    throw ConfigError("version", lines.empty() ? 0 : lines[0].number,
                      "scenario must start with 'version 1'");
  if (detail::want_int(lines[0], 1) != 1)
    detail::fail(lines[0], "unsupported schema version (expected 1)");
  if (lines[1].tokens[0] != "engine")
    throw ConfigError("engine", lines[1].number, "second line must be 'engine <name>'");
  const std::string& name = detail::want_token(lines[1], 1);

  Scenario scenario;
  if (name == "smdp") {
    scenario.engine = Engine::kSmdp;
    scenario.smdp_model = detail::parse_smdp(lines, 2);
  } else if (name == "mtd") {
    scenario.engine = Engine::kMtd;
    scenario.layer = detail::parse_mtd(lines, 2);
  } else if (name == "bayes") {
    scenario.engine = Engine::kBayes;
    scenario.bayes_game = detail::parse_bayes(lines, 2);
  } else {
    detail::fail(lines[1], "unknown engine '" + name + "' (valid: bayes, mtd, smdp)");
  }
  return scenario;
}

inline std::string serialize_scenario(const smdp::SmdpModel& m) {
  std::ostringstream out;
  out << "version 1\nengine smdp\n";
  detail::serialize_smdp(out, m);
  return out.str();
}

inline std::string serialize_scenario(const mtd::LayerGame& g) {
  std::ostringstream out;
  out << "version 1\nengine mtd\n";
  detail::serialize_mtd(out, g);
  return out.str();
}

inline std::string serialize_scenario(const bayes::MultistageGame& g) {
  std::ostringstream out;
  out << "version 1\nengine bayes\n";
  detail::serialize_bayes(out, g);
  return out.str();
}

}  // namespace defenselab::io

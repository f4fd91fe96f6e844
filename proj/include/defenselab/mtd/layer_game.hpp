#pragma once

#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "defenselab/errors.hpp"
#include "defenselab/matrix_game.hpp"
#include "defenselab/probability.hpp"

namespace defenselab::mtd {

/// One moving-target-defense layer: the defender rotates configurations, each
/// exposing a subset of the layer's vulnerabilities; the attacker picks the
/// attack matched to one vulnerability and causes damage only when that
/// vulnerability is on the current attack surface.
class LayerGame {
public:
  LayerGame(std::vector<std::string> configs, std::vector<std::string> vulns,
            std::vector<std::string> attacks,
            std::vector<std::vector<std::size_t>> surface, Matrix damage)
      : configs_(std::move(configs)),
        vulns_(std::move(vulns)),
        attacks_(std::move(attacks)),
        damage_(std::move(damage)) {
    if (configs_.empty() || vulns_.empty())
      throw ModelError("LayerGame: empty configuration or vulnerability set");
    if (attacks_.size() != vulns_.size())
      throw ModelError("LayerGame: attack map must be a bijection onto vulnerabilities");
    if (std::set<std::string>(attacks_.begin(), attacks_.end()).size() != attacks_.size())
      throw ModelError("LayerGame: duplicate attack labels");
    if (surface.size() != configs_.size())
      throw ModelError("LayerGame: vulnerability map must cover every configuration");
    if (damage_.rows() != vulns_.size() || damage_.cols() != configs_.size())
      throw ModelError("LayerGame: damage matrix must be |vulns| x |configs|");
    for (double d : damage_.data())
      if (!std::isfinite(d) || d < 0.0)
        throw ModelError("LayerGame: damage entries must be finite and nonnegative");

    exposed_.assign(vulns_.size(), std::vector<bool>(configs_.size(), false));
    for (std::size_t c = 0; c < surface.size(); ++c)
      for (std::size_t v : surface[c]) {
        if (v >= vulns_.size())
          throw ModelError("LayerGame: surface names an unknown vulnerability");
        exposed_[v][c] = true;
      }
  }

  std::size_t num_configs() const { return configs_.size(); }
  std::size_t num_attacks() const { return attacks_.size(); }
  const std::vector<std::string>& config_labels() const { return configs_; }
  const std::vector<std::string>& vuln_labels() const { return vulns_; }
  const std::vector<std::string>& attack_labels() const { return attacks_; }
  bool exposes(std::size_t vuln, std::size_t config) const { return exposed_[vuln][config]; }
  const Matrix& damage_matrix() const { return damage_; }

  std::size_t config_index(const std::string& label) const {
    return find_label(configs_, label, "configuration");
  }
  std::size_t attack_index(const std::string& label) const {
    return find_label(attacks_, label, "attack");
  }

  /// Damage of attack a against configuration c: the matched vulnerability
  /// must be on c's attack surface, otherwise the attack fizzles.
  double damage(std::size_t attack, std::size_t config) const {
    if (attack >= attacks_.size() || config >= configs_.size())
      throw ModelError("LayerGame: index out of range");
    return exposed_[attack][config] ? damage_(attack, config) : 0.0;
  }
  double damage(const std::string& attack, const std::string& config) const {
    return damage(attack_index(attack), config_index(config));
  }

  /// Expected cost under mixed configuration f and mixed attack g.
  double expected_cost(const ProbabilityVector& f, const ProbabilityVector& g) const {
    if (f.size() != configs_.size() || g.size() != attacks_.size())
      throw ModelError("LayerGame: strategy dimension mismatch");
    double acc = 0.0;
    for (std::size_t h = 0; h < configs_.size(); ++h) {
      if (f[h] == 0.0) continue;
      for (std::size_t k = 0; k < attacks_.size(); ++k)
        acc += f[h] * g[k] * damage(k, h);
    }
    return acc;
  }

  /// The layer as a zero-sum matrix game: rows are configurations (the
  /// defender minimizes), columns are attacks.
  MatrixGame cost_game() const {
    Matrix m(configs_.size(), attacks_.size());
    for (std::size_t h = 0; h < configs_.size(); ++h)
      for (std::size_t k = 0; k < attacks_.size(); ++k) m(h, k) = damage(k, h);
    return MatrixGame(m);
  }

private:
  static std::size_t find_label(const std::vector<std::string>& labels,
                                const std::string& label, const char* kind) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return i;
    throw ModelError(std::string("LayerGame: unknown ") + kind + " label '" + label + "'");
  }

  std::vector<std::string> configs_;
  std::vector<std::string> vulns_;
  std::vector<std::string> attacks_;
  std::vector<std::vector<bool>> exposed_;
  Matrix damage_;
};

}  // namespace defenselab::mtd

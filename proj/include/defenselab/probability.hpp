#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "defenselab/random.hpp"

namespace defenselab {

inline constexpr double kSimplexTolerance = 1e-9;
// Inputs farther than this from the simplex are rejected rather than repaired.
inline constexpr double kSimplexRejection = 1e-6;

/// A point on a finite probability simplex. Construction validates and then
/// renormalizes, so weights sum to 1 up to floating-point rounding.
class ProbabilityVector {
public:
  ProbabilityVector() = default;

  explicit ProbabilityVector(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("ProbabilityVector: empty weights");
    double sum = 0.0;
    for (double x : w_) {
      if (!std::isfinite(x) || x < -kSimplexRejection || x > 1.0 + kSimplexRejection)
        throw std::invalid_argument("ProbabilityVector: weight " + std::to_string(x) +
                                    " outside [0, 1]");
      sum += x;
    }
    if (std::abs(sum - 1.0) > kSimplexRejection)
      throw std::invalid_argument("ProbabilityVector: weights sum to " +
                                  std::to_string(sum) + ", expected 1");
    for (double& x : w_)
      x = (x < 0.0) ? 0.0 : x;
    sum = 0.0;
    for (double x : w_) sum += x;
    for (double& x : w_) x /= sum;
  }

  ProbabilityVector(std::initializer_list<double> weights)
      : ProbabilityVector(std::vector<double>(weights)) {}

  static ProbabilityVector uniform(std::size_t n) {
    return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  /// Point mass on index i.
  static ProbabilityVector vertex(std::size_t n, std::size_t i) {
    std::vector<double> w(n, 0.0);
    w.at(i) = 1.0;
    return ProbabilityVector(std::move(w));
  }

  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& weights() const { return w_; }

  auto begin() const { return w_.begin(); }
  auto end() const { return w_.end(); }

private:
  std::vector<double> w_;
};

/// Draws an index i with probability dist[i], advancing rng by one uniform.
inline std::size_t sample_categorical(const ProbabilityVector& dist, RandomSource& rng) {
  const double u = rng.uniform01();
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    acc += dist[i];
    if (u < acc) return i;
  }
  // u can land past the accumulated sum by rounding; return the last
  // positive-mass index so degenerate distributions stay exact.
  for (std::size_t i = dist.size(); i-- > 0;)
    if (dist[i] > 0.0) return i;
  return dist.size() - 1;
}

inline double linf_distance(const ProbabilityVector& a, const ProbabilityVector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace defenselab

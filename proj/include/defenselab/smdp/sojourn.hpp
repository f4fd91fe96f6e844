#pragma once

#include <cmath>
#include <stdexcept>

#include "defenselab/random.hpp"

namespace defenselab::smdp {

/// Continuous sojourn-time distribution, restricted to families with
/// closed-form Laplace transforms and CDFs.
class SojournSpec {
public:
  enum class Family { kExponential, kDeterministic, kUniform };

  static SojournSpec exponential(double rate) {
    if (!(rate > 0.0)) throw std::domain_error("exponential sojourn needs rate > 0");
    return {Family::kExponential, rate, 0.0};
  }
  static SojournSpec deterministic(double duration) {
    if (!(duration >= 0.0))
      throw std::domain_error("deterministic sojourn needs duration >= 0");
    return {Family::kDeterministic, duration, 0.0};
  }
  static SojournSpec uniform(double lo, double hi) {
    if (!(lo >= 0.0 && lo < hi))
      throw std::domain_error("uniform sojourn needs 0 <= lo < hi");
    return {Family::kUniform, lo, hi};
  }

  Family family() const { return family_; }
  double param_a() const { return a_; }
  double param_b() const { return b_; }

  /// E[e^{-gamma tau}]; equals 1 at gamma = 0 and decreases in gamma.
  double laplace(double gamma) const {
    if (gamma < 0.0) throw std::domain_error("laplace: gamma must be >= 0");
    switch (family_) {
      case Family::kExponential:
        return a_ / (a_ + gamma);
      case Family::kDeterministic:
        return std::exp(-gamma * a_);
      case Family::kUniform: {
        // e^{-g lo}(1 - e^{-g (hi-lo)}) / (g (hi-lo)), written with expm1 so
        // the gamma -> 0 limit needs no special case beyond t = 0.
        const double t = gamma * (b_ - a_);
        const double factor = (t == 0.0) ? 1.0 : -std::expm1(-t) / t;
        return std::exp(-gamma * a_) * factor;
      }
    }
    throw std::logic_error("unreachable sojourn family");
  }

  double cdf(double tau) const {
    if (tau < 0.0) return 0.0;
    switch (family_) {
      case Family::kExponential:
        return -std::expm1(-a_ * tau);
      case Family::kDeterministic:
        return tau >= a_ ? 1.0 : 0.0;
      case Family::kUniform:
        if (tau <= a_) return 0.0;
        if (tau >= b_) return 1.0;
        return (tau - a_) / (b_ - a_);
    }
    throw std::logic_error("unreachable sojourn family");
  }

  double mean() const {
    switch (family_) {
      case Family::kExponential:
        return 1.0 / a_;
      case Family::kDeterministic:
        return a_;
      case Family::kUniform:
        return 0.5 * (a_ + b_);
    }
    throw std::logic_error("unreachable sojourn family");
  }

  /// Deterministic sojourns consume no randomness.
  double sample(RandomSource& rng) const {
    switch (family_) {
      case Family::kExponential:
        return rng.exponential(a_);
      case Family::kDeterministic:
        return a_;
      case Family::kUniform:
        return rng.uniform(a_, b_);
    }
    throw std::logic_error("unreachable sojourn family");
  }

private:
  SojournSpec(Family family, double a, double b) : family_(family), a_(a), b_(b) {}
  Family family_;
  double a_, b_;
};

inline double laplace_sojourn(const SojournSpec& spec, double gamma) {
  return spec.laplace(gamma);
}

}  // namespace defenselab::smdp

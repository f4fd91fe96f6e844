#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace defenselab {

/// Raised when a schedule family outside the supported set is requested.
class UnsupportedScheduleError : public std::invalid_argument {
public:
  explicit UnsupportedScheduleError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Declared step-size families. Whether a schedule has a divergent sum and a
// convergent sum of squares is a property of its infinite tail, so it is
// classified analytically from the family, never estimated from finitely many
// terms.
class RateSchedule {
public:
  enum class Family {
    kHarmonicLike,  // kc / (n - 1 + kc), kc > 0
    kPower,         // 1 / n^p, p > 0
    kConstant,      // c, c in (0, 1]
  };

  RateSchedule(Family family, double param) : family_(family), param_(param) {
    switch (family_) {
      case Family::kHarmonicLike:
        if (!(param > 0.0))
          throw std::invalid_argument("harmonic-like schedule needs kc > 0");
        break;
      case Family::kPower:
        if (!(param > 0.0)) throw std::invalid_argument("power schedule needs p > 0");
        break;
      case Family::kConstant:
        if (!(param > 0.0 && param <= 1.0))
          throw std::invalid_argument("constant schedule needs c in (0, 1]");
        break;
      default:
        throw UnsupportedScheduleError("unknown schedule family");
    }
  }

  static RateSchedule harmonic_like(double kc) { return {Family::kHarmonicLike, kc}; }
  static RateSchedule power(double p) { return {Family::kPower, p}; }
  static RateSchedule constant(double c) { return {Family::kConstant, c}; }

  Family family() const { return family_; }
  double param() const { return param_; }

  /// Step size at step n >= 1; always in (0, 1].
  double at(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("schedule evaluated at step < 1");
    const double t = static_cast<double>(n);
    switch (family_) {
      case Family::kHarmonicLike:
        return param_ / (t - 1.0 + param_);
      case Family::kPower:
        return std::pow(t, -param_);
      case Family::kConstant:
        return param_;
    }
    throw UnsupportedScheduleError("unknown schedule family");
  }

  /// True iff sum x_t diverges while sum x_t^2 converges for this family.
  /// harmonic-like: both hold for any kc > 0 (terms are kc/t up to a shift).
  /// power 1/n^p: divergent sum needs p <= 1, convergent squares need p > 1/2.
  /// constant: the squared sum always diverges.
  bool satisfies_convergency() const {
    switch (family_) {
      case Family::kHarmonicLike:
        return true;
      case Family::kPower:
        return param_ > 0.5 && param_ <= 1.0;
      case Family::kConstant:
        return false;
    }
    throw UnsupportedScheduleError("unknown schedule family");
  }

private:
  Family family_;
  double param_;
};

inline bool classify_schedule(const RateSchedule& s) { return s.satisfies_convergency(); }

}  // namespace defenselab

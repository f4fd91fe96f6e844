#include <catch2/catch_amalgamated.hpp>

#include "defenselab/schedule.hpp"

using defenselab::classify_schedule;
using defenselab::RateSchedule;

TEST_CASE("power schedule classification") {
  CHECK(classify_schedule(RateSchedule::power(1.0)));      // 1/t
  CHECK_FALSE(classify_schedule(RateSchedule::power(2.0)));  // both sums converge
  CHECK(classify_schedule(RateSchedule::power(0.6)));
  CHECK_FALSE(classify_schedule(RateSchedule::power(0.5)));  // squared sum diverges
  CHECK_FALSE(classify_schedule(RateSchedule::power(0.3)));
}

TEST_CASE("harmonic-like schedules always satisfy the condition") {
  // kc/(t-1+kc) is kc/t up to an index shift, so term-by-term comparison with
  // 1/t settles both sums for any kc > 0.
  CHECK(classify_schedule(RateSchedule::harmonic_like(1.0)));
  CHECK(classify_schedule(RateSchedule::harmonic_like(0.1)));
  CHECK(classify_schedule(RateSchedule::harmonic_like(100.0)));
}

TEST_CASE("constant schedules never satisfy the condition") {
  CHECK_FALSE(classify_schedule(RateSchedule::constant(0.5)));
  CHECK_FALSE(classify_schedule(RateSchedule::constant(1.0)));
}

TEST_CASE("schedule values stay in (0, 1]") {
  const RateSchedule schedules[] = {
      RateSchedule::harmonic_like(5.0),
      RateSchedule::power(0.7),
      RateSchedule::constant(0.25),
  };
  for (const auto& s : schedules) {
    for (std::int64_t t : {1, 2, 3, 10, 1000, 1000000}) {
      const double x = s.at(t);
      CHECK(x > 0.0);
      CHECK(x <= 1.0);
    }
  }
  CHECK(RateSchedule::harmonic_like(3.0).at(1) == 1.0);
  CHECK(RateSchedule::harmonic_like(1.0).at(10) == Catch::Approx(0.1));
}

TEST_CASE("schedule parameter domains are enforced") {
  CHECK_THROWS_AS(RateSchedule::harmonic_like(0.0), std::invalid_argument);
  CHECK_THROWS_AS(RateSchedule::power(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(RateSchedule::constant(1.5), std::invalid_argument);
  CHECK_THROWS_AS(RateSchedule::constant(0.0), std::invalid_argument);
  CHECK_THROWS_AS(RateSchedule::power(1.0).at(0), std::invalid_argument);
}

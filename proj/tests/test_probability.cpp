#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "defenselab/probability.hpp"
#include "defenselab/random.hpp"
#include "support/oracles.hpp"

using defenselab::ProbabilityVector;
using defenselab::RandomSource;
using defenselab::sample_categorical;

TEST_CASE("simplex construction renormalizes within tolerance") {
  ProbabilityVector p({0.3, 0.7 + 5e-7});
  double sum = 0.0;
  for (double w : p) sum += w;
  CHECK(sum == Catch::Approx(1.0).margin(1e-15));
  CHECK(p.size() == 2);
}

TEST_CASE("simplex construction rejects inputs far from the simplex") {
  CHECK_THROWS_AS(ProbabilityVector({0.3, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityVector({-0.01, 1.01}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityVector(std::vector<double>{}), std::invalid_argument);
  // Within the 1e-6 band, small negatives are clamped instead.
  ProbabilityVector p({-5e-7, 1.0});
  CHECK(p[0] == 0.0);
  CHECK(p[1] == 1.0);
}

TEST_CASE("degenerate distributions sample deterministically") {
  RandomSource rng(7);
  ProbabilityVector first({1.0, 0.0});
  ProbabilityVector second({0.0, 1.0});
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_categorical(first, rng) == 0);
    CHECK(sample_categorical(second, rng) == 1);
  }
}

TEST_CASE("sampling frequencies track the distribution") {
  RandomSource rng(42);
  ProbabilityVector p({0.3, 0.7});
  const std::size_t draws = 100000;
  std::vector<std::size_t> counts(2, 0);
  for (std::size_t i = 0; i < draws; ++i) counts[sample_categorical(p, rng)]++;
  CHECK(std::abs(counts[0] / double(draws) - 0.3) < 0.01);
  CHECK(std::abs(counts[1] / double(draws) - 0.7) < 0.01);
}

TEST_CASE("sampling passes a chi-square goodness-of-fit test") {
  const std::size_t draws = 100000;
  const std::vector<ProbabilityVector> dists = {
      ProbabilityVector({0.5, 0.5}),
      ProbabilityVector({0.1, 0.2, 0.3, 0.4}),
      ProbabilityVector({0.05, 0.05, 0.9}),
      ProbabilityVector({0.25, 0.25, 0.25, 0.25}),
  };
  std::uint64_t seed = 1;
  for (const auto& p : dists) {
    RandomSource rng(seed++);
    std::vector<std::size_t> counts(p.size(), 0);
    for (std::size_t i = 0; i < draws; ++i) counts[sample_categorical(p, rng)]++;
    const double stat = oracles::chi_square_statistic(counts, p, draws);
    CHECK(stat < oracles::chi_square_critical_001(p.size() - 1));
  }
}

TEST_CASE("identical seeds give identical draw sequences") {
  RandomSource a(123456789), b(123456789);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  RandomSource c(9), d(9);
  for (int i = 0; i < 1000; ++i) {
    CHECK(c.uniform01() == d.uniform01());
  }
}

TEST_CASE("uniform01 stays in [0, 1)") {
  RandomSource rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hankelmu/weights.hpp"

using namespace hankelmu;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("power weight evaluates t^alpha") {
  const Weight w = Weight::power(0.5);
  CHECK(w(0.0) == 0.0);
  CHECK(w(0.25) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(w(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w(kPi) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK_THROWS_AS(w(-0.1), std::domain_error);
  CHECK_THROWS_AS(w(3.2), std::domain_error);
}

TEST_CASE("power_log weight evaluates t^alpha log(e pi/t)^beta") {
  const Weight w = Weight::power_log(0.5, 1.0);
  // 0.25^{1/2} * log(e*pi/0.25) = 0.5 * (1 + log(4 pi)).
  const double expected = 0.5 * (1.0 + std::log(4.0 * kPi));
  CHECK(w(0.25) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(w(0.0) == 0.0);
}

TEST_CASE("weight factories validate their parameters") {
  CHECK_THROWS_AS(Weight::power(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Weight::power(1.5), std::invalid_argument);
  CHECK_THROWS_AS(Weight::power_log(-0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Weight::custom({0.5}, {0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Weight::custom({0.5, 0.4}, {0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(Weight::custom({0.4, 0.5}, {0.6, 0.5}), std::invalid_argument);
}

TEST_CASE("custom weight reproduces a power law it was sampled from") {
  std::vector<double> t, v;
  for (int k = 10; k >= 1; --k) {
    t.push_back(std::ldexp(1.0, -k));
    v.push_back(std::sqrt(t.back()));
  }
  const Weight w = Weight::custom(t, v);
  // Inside the table, between nodes.
  CHECK(w(0.01) == doctest::Approx(0.1).epsilon(1e-12));
  // Below the table: extrapolated with the first segment's slope.
  CHECK(w(1e-6) == doctest::Approx(1e-3).epsilon(1e-10));
  // Above the table: clamped.
  CHECK(w(3.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("dini ratio of a power weight is 1/alpha at every delta") {
  for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
    const Weight w = Weight::power(alpha);
    for (double delta : {1e-4, 0.01, 0.5, 3.0}) {
      const auto r = dini_ratio(w, delta);
      REQUIRE_FALSE(r.diverged);
      CHECK(r.value == doctest::Approx(1.0 / alpha).epsilon(1e-8));
    }
  }
}

TEST_CASE("b1 ratio of a power weight matches the closed form") {
  for (double alpha : {0.25, 0.5, 0.75}) {
    const Weight w = Weight::power(alpha);
    for (double delta : {1e-4, 0.01, 0.5}) {
      const auto r = b1_ratio(w, delta);
      REQUIRE_FALSE(r.diverged);
      const double expected =
          (1.0 - std::pow(delta / kPi, 1.0 - alpha)) / (1.0 - alpha);
      CHECK(r.value == doctest::Approx(expected).epsilon(1e-8));
    }
  }
  CHECK(b1_ratio(Weight::power(0.5), kPi).value == 0.0);
}

TEST_CASE("power_log b1 ratio stays finite for alpha < 1") {
  const auto r = b1_ratio(Weight::power_log(0.5, 1.0), 1e-4);
  REQUIRE_FALSE(r.diverged);
  CHECK(r.value > 0.0);
  CHECK(r.value <= 4.0);
}

TEST_CASE("admissibility growth classification at p = 2") {
  const auto grid = default_delta_grid();
  SUBCASE("t^{1/2}: constant ratio, bounded") {
    const auto rep = admissibility(Weight::power(0.5), 2.0, grid);
    CHECK(rep.admissible());
    CHECK(rep.growth_class == GrowthClass::bounded);
    CHECK(rep.dini_sup == doctest::Approx(2.0).epsilon(1e-7));
  }
  SUBCASE("t^{1/4}: delta^{-1/4}, blows up") {
    const auto rep = admissibility(Weight::power(0.25), 2.0, grid);
    CHECK(rep.admissible());
    CHECK(rep.growth_class == GrowthClass::blows_up);
  }
  SUBCASE("t^{3/4}: delta^{1/4} -> 0, bounded") {
    const auto rep = admissibility(Weight::power(0.75), 2.0, grid);
    CHECK(rep.admissible());
    CHECK(rep.growth_class == GrowthClass::bounded);
  }
  SUBCASE("t^{1/2} log(e pi/t): log factor blows up") {
    const auto rep = admissibility(Weight::power_log(0.5, 1.0), 2.0, grid);
    CHECK(rep.admissible());
    CHECK(rep.growth_class == GrowthClass::blows_up);
  }
}

TEST_CASE("admissibility sups stay finite for the Lipschitz scale") {
  for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
    const auto rep = admissibility(Weight::power(alpha), 2.0, default_delta_grid());
    CAPTURE(alpha);
    CHECK_FALSE(rep.dini_diverged);
    CHECK_FALSE(rep.b1_diverged);
    CHECK(std::isfinite(rep.dini_sup));
    CHECK(std::isfinite(rep.b1_sup));
    CHECK(rep.monotone_ok);
    CHECK(rep.positivity_ok);
  }
}

TEST_CASE("admissibility validates the grid") {
  const Weight w = Weight::power(0.5);
  CHECK_THROWS_AS(admissibility(w, 2.0, {0.5, 0.25}), std::invalid_argument);
  std::vector<double> decreasing;
  for (int k = 1; k <= 16; ++k) decreasing.push_back(std::ldexp(1.0, -k));
  const std::vector<double> increasing(decreasing.rbegin(), decreasing.rend());
  CHECK_THROWS_AS(admissibility(w, 2.0, increasing), std::invalid_argument);
  CHECK_NOTHROW(admissibility(w, 2.0, decreasing));
}

TEST_CASE("weights are monotone along the default grid") {
  const auto grid = default_delta_grid();
  // power_log weights are only monotone below e*pi*exp(-beta/alpha); the
  // default grid stays under that threshold for (1/2, 1).
  for (const Weight& w : {Weight::power(0.3), Weight::power_log(0.5, 1.0)}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double d : grid) {
      CHECK(w(d) <= prev * (1.0 + 1e-12));
      prev = w(d);
    }
  }
}

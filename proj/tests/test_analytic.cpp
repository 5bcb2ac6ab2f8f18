#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hankelmu/analytic.hpp"
#include "oracles.hpp"

using namespace hankelmu;

namespace {

std::vector<double> random_coeffs(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> a(n);
  for (auto& v : a) v = dist(rng);
  return a;
}

}  // namespace

TEST_CASE("taylor function basics") {
  const TaylorFunction f({1.0, 2.0, 3.0});
  CHECK(f.degree() == 2);
  CHECK_FALSE(f.has_generator());
  const auto v = f.eval({0.5, 0.0});
  CHECK(v.real() == doctest::Approx(1.0 + 1.0 + 0.75).epsilon(1e-15));
  CHECK(v.imag() == 0.0);
  CHECK_NOTHROW(f.eval({1.0, 0.0}));
  CHECK_THROWS_AS(f.eval({1.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(f.extended_to(5), std::invalid_argument);

  const TaylorFunction g([](std::size_t n) { return double(n); }, 3);
  CHECK(g.coeffs() == std::vector<double>{0.0, 1.0, 2.0, 3.0});
  const auto g5 = g.extended_to(5);
  CHECK(g5.degree() == 5);
  CHECK(g5.coeffs()[5] == 5.0);
  CHECK(g.extended_to(2).degree() == 3);  // never shrinks
}

TEST_CASE("derivative shifts and scales coefficients") {
  const TaylorFunction f({5.0, 1.0, 2.0, 3.0});
  const auto d = derivative(f);
  CHECK(d.coeffs() == std::vector<double>{1.0, 4.0, 9.0});
  CHECK(derivative(TaylorFunction({7.0})).coeffs() == std::vector<double>{0.0});
}

TEST_CASE("dyadic blocks keep coefficient positions") {
  std::vector<double> a(17);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = double(i + 1);
  const TaylorFunction f(a);

  const auto b0 = dyadic_block(f, 0);  // indices 0, 1
  CHECK(b0.coeffs() == std::vector<double>{1.0, 2.0});
  const auto b2 = dyadic_block(f, 2);  // indices 4..7
  CHECK(b2.coeffs()[3] == 0.0);
  CHECK(b2.coeffs()[4] == 5.0);
  CHECK(b2.coeffs()[7] == 8.0);
  const auto b4 = dyadic_block(f, 4);  // indices 16..31, truncated at 16
  CHECK(b4.degree() == 16);
  CHECK(b4.coeffs()[16] == 17.0);
  CHECK_THROWS_AS(dyadic_block(f, 5), std::invalid_argument);
  CHECK_THROWS_AS(dyadic_block(f, -1), std::invalid_argument);
}

TEST_CASE("circle mean p = 2 equals the Parseval value") {
  const auto a = random_coeffs(33, 7);
  const TaylorFunction f(a);
  for (double r : {0.0, 0.5, 0.9, 1.0}) {
    double parseval = 0.0;
    double rk = 1.0;
    for (double c : a) {
      parseval += c * c * rk * rk;
      rk *= r;
    }
    CHECK(circle_mean(f, r, 2.0) ==
          doctest::Approx(std::sqrt(parseval)).epsilon(1e-12));
  }
}

TEST_CASE("circle mean agrees with a dense sampling oracle") {
  const auto a = random_coeffs(20, 11);
  const TaylorFunction f(a);
  // Same grid on both sides: the transform path must reproduce direct
  // Horner evaluation exactly (up to roundoff).
  for (double p : {1.5, 4.0}) {
    for (double r : {0.3, 0.95}) {
      const double ref = oracles::circle_mean(a, r, p, 4096);
      CHECK(circle_mean(f, r, p, 4096) == doctest::Approx(ref).epsilon(1e-12));
    }
  }
  // Default sample count is dense enough to be close to a much finer grid.
  CHECK(circle_mean(f, 0.5, 4.0) ==
        doctest::Approx(oracles::circle_mean(a, 0.5, 4.0, 1 << 14)).epsilon(1e-6));
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(circle_mean(f, 0.8, inf, 1 << 14) ==
        doctest::Approx(oracles::circle_mean(a, 0.8, inf, 1 << 14)).epsilon(1e-12));
}

TEST_CASE("circle mean argument validation") {
  const TaylorFunction f({1.0, 1.0});
  CHECK_THROWS_AS(circle_mean(f, -0.1, 2.0), std::domain_error);
  CHECK_THROWS_AS(circle_mean(f, 1.5, 2.0), std::domain_error);
  CHECK_THROWS_AS(circle_mean(f, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(circle_mean(f, 0.5, 2.0, 4), std::invalid_argument);
}

TEST_CASE("block norms: Parseval at p = 2, circle means otherwise") {
  const auto a = random_coeffs(32, 3);
  const TaylorFunction f(a);
  const auto bn = block_norms(f, 2.0, 3);
  REQUIRE(bn.norms.size() == 4);
  for (int j = 0; j <= 3; ++j) {
    const std::size_t lo = j == 0 ? 0 : (std::size_t{1} << j);
    const std::size_t hi = (std::size_t{1} << (j + 1)) - 1;
    double s = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) s += a[k] * a[k];
    CHECK(bn.norms[j] == doctest::Approx(std::sqrt(s)).epsilon(1e-12));
  }
  const auto bn4 = block_norms(f, 4.0, 3);
  const auto block1 = dyadic_block(f, 1);
  CHECK(bn4.norms[1] ==
        doctest::Approx(oracles::circle_mean(block1.coeffs(), 1.0, 4.0, 4096))
            .epsilon(1e-8));
  CHECK_THROWS_AS(block_norms(f, 2.0, 5), std::invalid_argument);
}

TEST_CASE("trend heuristics") {
  CHECK(trends_up({1.0, 1.1, 1.2, 1.4, 1.7}));
  CHECK_FALSE(trends_up({1.0, 1.1, 1.2, 1.2, 1.25}));  // last step < 3%
  CHECK_FALSE(trends_up({1.0, 2.0, 3.0}));             // too short
  CHECK(is_flat({1.0, 2.0, 3.9}));
  CHECK_FALSE(is_flat({1.0, 2.0, 4.1}));
  CHECK(is_flat({0.0, 0.0}));  // zeros ignored
}

TEST_CASE("decreasing-coefficient test: flat extremal sequence") {
  // a_n = omega(1/n) n^{-(1-1/p)} makes the coefficient ratio identically 1.
  const Weight w = Weight::power(0.5);
  const double p = 2.0;
  const CoefficientGenerator extremal = [&w, p](std::size_t n) {
    return n == 0 ? 0.0 : w(1.0 / double(n)) / std::pow(double(n), 1.0 - 1.0 / p);
  };
  const auto res = decreasing_coef_test(extremal, p, w, 8);
  CHECK(res.agree);
  CHECK_FALSE(res.coef_diverging);
  CHECK_FALSE(res.block_diverging);
  CHECK(res.coef_sup == doctest::Approx(1.0).epsilon(1e-12));
  for (double v : res.coef_trace) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("decreasing-coefficient test: diverging sequence") {
  // a_n = n^{-1/2} against omega = t^{1/2}, p = 2: ratio n^{1/2}.
  const auto res = decreasing_coef_test(
      [](std::size_t n) { return n == 0 ? 0.0 : std::pow(double(n), -0.5); }, 2.0,
      Weight::power(0.5), 8);
  CHECK(res.agree);
  CHECK(res.coef_diverging);
  CHECK(res.block_diverging);
}

TEST_CASE("decreasing-coefficient test rejects non-monotone input") {
  CHECK_THROWS_AS(
      decreasing_coef_test([](std::size_t n) { return double(n); }, 2.0,
                           Weight::power(0.5), 4),
      std::invalid_argument);
  CHECK_THROWS_AS(
      decreasing_coef_test([](std::size_t n) { return n == 3 ? -1.0 : 0.5; }, 2.0,
                           Weight::power(0.5), 4),
      std::invalid_argument);
}

TEST_CASE("lambda membership proxies") {
  const Weight w = Weight::power(0.5);
  const auto r_grid = default_r_grid(8);

  SUBCASE("log-type function lies in the space") {
    const TaylorFunction f(
        [](std::size_t n) { return n == 0 ? 0.0 : 1.0 / double(n); }, 63);
    const auto rep = lambda_membership(f, 2.0, w, 5, r_grid);
    CHECK(rep.member_at_scale);
    CHECK(std::isfinite(rep.block_proxy));
    CHECK(std::isfinite(rep.mean_proxy));
    CHECK(rep.block_trace.size() == 6);
    CHECK(rep.mean_trace.size() == r_grid.size());
  }
  SUBCASE("half-power coefficients fall outside") {
    const TaylorFunction f(
        [](std::size_t n) { return n == 0 ? 0.0 : std::pow(double(n), -0.5); }, 63);
    const auto rep = lambda_membership(f, 2.0, w, 5, r_grid);
    CHECK_FALSE(rep.member_at_scale);
  }
  SUBCASE("extension requires a generator") {
    const TaylorFunction f(std::vector<double>{1.0, 1.0});
    CHECK_THROWS_AS(lambda_membership(f, 2.0, w, 5, r_grid),
                    std::invalid_argument);
  }
}

// Independent reference computations used by the test suite.  Everything
// here is deliberately naive: closed forms where they exist, otherwise
// oversampled elementary rules.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

// nth harmonic number.
inline double harmonic(int n) {
  double h = 0.0;
  for (int k = 1; k <= n; ++k) h += 1.0 / k;
  return h;
}

// int_0^1 t^n dt.
inline double lebesgue_moment(int n) { return 1.0 / (n + 1.0); }

// int_0^1 t^n (1-t) dt.
inline double one_minus_t_moment(int n) {
  return 1.0 / ((n + 1.0) * (n + 2.0));
}

// int_0^1 t^n (1-t)^{-sigma} dt = B(n+1, 1-sigma).
inline double power_density_moment(int n, double sigma) {
  return std::exp(std::lgamma(n + 1.0) + std::lgamma(1.0 - sigma) -
                  std::lgamma(n + 2.0 - sigma));
}

// int_0^1 t^n log(1/(1-t)) dt = H_{n+1}/(n+1).
inline double lebesgue_log_moment(int n) { return harmonic(n + 1) / (n + 1.0); }

// int_0^1 t^n log(e*pi/(1-t)) dt.
inline double log_density_moment(int n) {
  return (1.0 + std::log(std::numbers::pi)) / (n + 1.0) + lebesgue_log_moment(n);
}

// Moment of the tail measure F(b) = (1-b)^q: n * B(n, q+1).
inline double power_tail_moment(int n, double q) {
  if (n == 0) return 1.0;
  return n * std::exp(std::lgamma(double(n)) + std::lgamma(q + 1.0) -
                      std::lgamma(n + q + 1.0));
}

// Midpoint rule on [0,1] after the substitution u = v^2, which removes
// power singularities up to u^{-1/2} at the origin.
inline double integral01(const std::function<double(double)>& f,
                         int points = 200000) {
  double s = 0.0;
  for (int i = 0; i < points; ++i) {
    const double v = (i + 0.5) / points;
    s += 2.0 * v * f(v * v);
  }
  return s / points;
}

// M_p(r, f) by direct Horner evaluation on a dense uniform circle grid.
inline double circle_mean(const std::vector<double>& coeffs, double r, double p,
                          int samples) {
  double s = 0.0;
  double peak = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / samples;
    const std::complex<double> z = std::polar(r, theta);
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * z + *it;
    const double m = std::abs(acc);
    peak = std::max(peak, m);
    s += std::pow(m, p);
  }
  if (std::isinf(p)) return peak;
  return std::pow(s / samples, 1.0 / p);
}

// Largest singular value of the symmetric Hankel matrix built from a
// moment sequence, via a dense eigensolver.
inline double dense_top_sigma(const std::vector<double>& moments,
                              std::size_t dim) {
  Eigen::MatrixXd H(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) H(i, j) = moments[i + j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  const auto& ev = es.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(dim - 1)));
}

}  // namespace oracles

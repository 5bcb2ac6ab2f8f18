#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hankelmu/analytic.hpp"
#include "hankelmu/fft.hpp"
#include "hankelmu/measures.hpp"

namespace hankelmu {

/// N x N truncation of the moment Hankel matrix: entry (n, k) = mu_{n+k}.
/// Read-only after construction; the circulant embedding for the fast path
/// is precomputed eagerly.
class HankelOp {
 public:
  HankelOp(std::size_t dim, std::vector<double> moments);
  static HankelOp from_measure(const Measure& mu, std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<double>& moments() const { return moments_; }
  double entry(std::size_t n, std::size_t k) const { return moments_[n + k]; }

  /// b_n = sum_k mu_{n+k} a_k, direct accumulation in index order.
  std::vector<double> apply_naive(std::span<const double> a) const;

  /// Same product through the circulant embedding, O(N log N).
  std::vector<double> apply_fast(std::span<const double> a) const;

  /// Materialized matrix; debug path, dim <= 1024.
  std::vector<std::vector<double>> dense() const;

 private:
  std::size_t dim_;
  std::vector<double> moments_;
  fft::CorrelationKernel kernel_;
};

struct FubiniResult {
  std::vector<double> quadrature;  // int t^n f(t) dmu(t)
  std::vector<double> matrix;      // apply_naive on the truncated coefficients
  double gap = 0.0;                // max abs difference
};

/// Coefficients of H_mu(f) computed on the measure side; f polynomial.
FubiniResult hankel_coefficients_via_fubini(const Measure& mu,
                                            const TaylorFunction& f,
                                            std::size_t dim);

/// I_mu(f)(z) = int f(t) / (1 - t z) dmu(t); the absolute-integrability
/// precondition is checked numerically and failure raises IntegrabilityError.
std::complex<double> i_mu_eval(const Measure& mu, const TaylorFunction& f,
                               std::complex<double> z);

struct PowerIterResult {
  double sigma = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Largest singular value of the truncation, matrix-free power iteration on
/// H*H with a deterministic all-ones seed.
PowerIterResult top_singular_value(const HankelOp& H, double tol = 1e-9,
                                   int max_iter = 10000);

}  // namespace hankelmu

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hankelmu/weights.hpp"

namespace hankelmu {

/// Generator rule: a_n for any index n (used to extend truncations).
using CoefficientGenerator = std::function<double(std::size_t)>;

/// A finite Taylor truncation a_0 .. a_N, optionally backed by a generator.
class TaylorFunction {
 public:
  explicit TaylorFunction(std::vector<double> coeffs);
  TaylorFunction(CoefficientGenerator gen, std::size_t degree);

  const std::vector<double>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  bool has_generator() const { return static_cast<bool>(gen_); }

  /// Truncation at a higher degree; throws if no generator is attached.
  TaylorFunction extended_to(std::size_t degree) const;

  /// Horner evaluation; |z| < 1 for general truncations, but polynomials
  /// extend continuously so |z| <= 1 is accepted.
  std::complex<double> eval(std::complex<double> z) const;

 private:
  std::vector<double> coeffs_;
  CoefficientGenerator gen_;
};

TaylorFunction derivative(const TaylorFunction& f);

/// Taylor slice with indices 2^j .. 2^{j+1}-1 (j = 0 keeps a_0 + a_1 z);
/// coefficients stay at their original positions.
TaylorFunction dyadic_block(const TaylorFunction& f, int j);

/// M_p(r, f) from samples uniform points on |z| = r via one zero-padded
/// transform; p may be infinity. samples must be >= 4 * (degree + 1).
double circle_mean(const TaylorFunction& f, double r, double p,
                   std::size_t samples);

/// Convenience overload picking a power-of-two sample count.
double circle_mean(const TaylorFunction& f, double r, double p);

struct BlockNorms {
  double p = 2.0;
  std::vector<double> norms;  // ||Delta_j f||_{H^p}, j = 0..J
};

/// Block H^p norms as boundary circle means; p = 2 goes through Parseval.
BlockNorms block_norms(const TaylorFunction& f, double p, int J);

struct NormProxyReport {
  double block_proxy = 0.0;   // |a_0| + max_j ||Delta_j f||_p / omega(2^-j)
  double mean_proxy = 0.0;    // max_r (1-r) M_p(r, f') / omega(1-r)
  double bloch_proxy = 0.0;   // max_r (1-r^2) M_inf(r, f')
  double growth_proxy = 0.0;  // max_r M_inf(r, f) (1-r)^{1/p} / omega(1-r)
  std::vector<double> block_trace;
  std::vector<double> mean_trace;
  std::vector<double> bloch_trace;
  std::vector<double> growth_trace;
  std::vector<double> r_grid;
  bool member_at_scale = false;
};

/// Membership diagnostics at scale J; a verdict is "bounded at scale J",
/// never membership proper.
NormProxyReport lambda_membership(const TaylorFunction& f, double p,
                                  const Weight& w, int J,
                                  const std::vector<double>& r_grid);

/// r_k = 1 - 2^-k, k = 1..k_max.
std::vector<double> default_r_grid(int k_max = 10);

struct DecreasingCoefResult {
  std::vector<double> coef_trace;   // a_n n^{1-1/p} / omega(1/n) at n = 2^j
  std::vector<double> block_trace;  // ||Delta_j f||_p / omega(2^-j)
  double coef_sup = 0.0;
  bool coef_diverging = false;
  bool block_diverging = false;
  bool agree = false;
};

/// Two-sided test of the decreasing-coefficient characterization; the
/// generator must be nonnegative and nonincreasing from n = 1 on.
DecreasingCoefResult decreasing_coef_test(const CoefficientGenerator& a,
                                          double p, const Weight& w, int J);

/// Shared trend heuristic: the last three doubling steps each grow >= 3%.
bool trends_up(const std::vector<double>& trace);

/// max/min over the trace <= 4 (ignoring exact zeros).
bool is_flat(const std::vector<double>& trace);

}  // namespace hankelmu

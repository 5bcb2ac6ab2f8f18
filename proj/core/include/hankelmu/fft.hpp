#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hankelmu::fft {

/// Unnormalized DFT; sign = -1 forward, +1 backward.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in,
                                      int sign);

std::size_t next_pow2(std::size_t n);

/// Circular correlation c_n = sum_k m_{(n+k) mod L} a_k, both inputs
/// zero-padded to length L.
std::vector<double> circular_correlation(const std::vector<double>& m,
                                         const std::vector<double>& a,
                                         std::size_t L);

/// Precomputed spectrum of one correlation operand; lets repeated
/// correlations against the same kernel skip one transform.
class CorrelationKernel {
 public:
  CorrelationKernel() = default;
  CorrelationKernel(const std::vector<double>& m, std::size_t L);

  std::size_t length() const { return L_; }

  /// corr_n for n = 0..n_out-1 against zero-padded a.
  std::vector<double> correlate(const std::vector<double>& a,
                                std::size_t n_out) const;

 private:
  std::size_t L_ = 0;
  std::vector<std::complex<double>> spectrum_;
};

}  // namespace hankelmu::fft

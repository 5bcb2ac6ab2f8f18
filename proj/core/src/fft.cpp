#include "hankelmu/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace hankelmu::fft {

namespace {
// FFTW's planner is not reentrant.
std::mutex planner_mutex;
}  // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in,
                                      int sign) {
  const std::size_t n = in.size();
  std::vector<std::complex<double>> out(n);
  if (n == 0) return out;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    plan = fftw_plan_dft_1d(
        static_cast<int>(n),
        reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
        reinterpret_cast<fftw_complex*>(out.data()),
        sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  if (!plan) throw std::runtime_error("fftw plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
  return out;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

CorrelationKernel::CorrelationKernel(const std::vector<double>& m, std::size_t L)
    : L_(L) {
  if (m.size() > L) throw std::invalid_argument("kernel longer than embedding");
  std::vector<std::complex<double>> padded(L);
  for (std::size_t i = 0; i < m.size(); ++i) padded[i] = m[i];
  spectrum_ = dft(padded, -1);
}

std::vector<double> CorrelationKernel::correlate(const std::vector<double>& a,
                                                 std::size_t n_out) const {
  if (a.size() > L_) throw std::invalid_argument("input longer than embedding");
  std::vector<std::complex<double>> padded(L_);
  for (std::size_t i = 0; i < a.size(); ++i) padded[i] = a[i];
  auto fa = dft(padded, -1);
  for (std::size_t i = 0; i < L_; ++i) fa[i] = spectrum_[i] * std::conj(fa[i]);
  auto c = dft(fa, +1);
  std::vector<double> out(n_out);
  const double scale = 1.0 / static_cast<double>(L_);
  for (std::size_t i = 0; i < n_out; ++i) out[i] = c[i].real() * scale;
  return out;
}

std::vector<double> circular_correlation(const std::vector<double>& m,
                                         const std::vector<double>& a,
                                         std::size_t L) {
  return CorrelationKernel(m, L).correlate(a, L);
}

}  // namespace hankelmu::fft

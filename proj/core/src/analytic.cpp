#include "hankelmu/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hankelmu/fft.hpp"

namespace hankelmu {

TaylorFunction::TaylorFunction(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

TaylorFunction::TaylorFunction(CoefficientGenerator gen, std::size_t degree)
    : gen_(std::move(gen)) {
  coeffs_.resize(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) coeffs_[n] = gen_(n);
}

TaylorFunction TaylorFunction::extended_to(std::size_t degree) const {
  if (degree <= this->degree()) return *this;
  if (!gen_)
    throw std::invalid_argument("extension past stored degree needs a generator");
  return TaylorFunction(gen_, degree);
}

std::complex<double> TaylorFunction::eval(std::complex<double> z) const {
  if (std::abs(z) > 1.0)
    throw std::domain_error("evaluation requires |z| <= 1");
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TaylorFunction derivative(const TaylorFunction& f) {
  const auto& a = f.coeffs();
  if (a.size() == 1) return TaylorFunction(std::vector<double>{0.0});
  std::vector<double> d(a.size() - 1);
  for (std::size_t n = 1; n < a.size(); ++n) d[n - 1] = n * a[n];
  return TaylorFunction(std::move(d));
}

TaylorFunction dyadic_block(const TaylorFunction& f, int j) {
  if (j < 0) throw std::invalid_argument("block index must be >= 0");
  const std::size_t lo = j == 0 ? 0 : (std::size_t{1} << j);
  const std::size_t hi = (std::size_t{1} << (j + 1)) - 1;  // inclusive
  if (lo > f.degree())
    throw std::invalid_argument("block index beyond stored degree");
  std::vector<double> b(std::min(hi, f.degree()) + 1, 0.0);
  for (std::size_t k = lo; k < b.size(); ++k) b[k] = f.coeffs()[k];
  return TaylorFunction(std::move(b));
}

namespace {

// |f| sampled at `samples` uniform points on |z| = r.
std::vector<double> sample_circle(const TaylorFunction& f, double r,
                                  std::size_t samples) {
  const auto& a = f.coeffs();
  std::vector<std::complex<double>> c(samples);
  double rk = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    c[k] = a[k] * rk;
    rk *= r;
  }
  auto v = fft::dft(c, +1);
  std::vector<double> mags(samples);
  for (std::size_t i = 0; i < samples; ++i) mags[i] = std::abs(v[i]);
  return mags;
}

double p_mean(const std::vector<double>& mags, double p) {
  if (std::isinf(p)) return *std::max_element(mags.begin(), mags.end());
  double s = 0.0;
  if (p == 2.0) {
    for (double m : mags) s += m * m;
  } else {
    for (double m : mags) s += std::pow(m, p);
  }
  return std::pow(s / mags.size(), 1.0 / p);
}

std::size_t default_samples(std::size_t degree) {
  return fft::next_pow2(std::max<std::size_t>(64, 4 * (degree + 1)));
}

}  // namespace

double circle_mean(const TaylorFunction& f, double r, double p,
                   std::size_t samples) {
  if (r < 0.0 || r > 1.0)
    throw std::domain_error("circle mean needs r in [0, 1]");
  if (p <= 1.0) throw std::invalid_argument("circle mean needs p > 1");
  if (samples < 4 * (f.degree() + 1))
    throw std::invalid_argument("undersampled circle mean");
  return p_mean(sample_circle(f, r, samples), p);
}

double circle_mean(const TaylorFunction& f, double r, double p) {
  return circle_mean(f, r, p, default_samples(f.degree()));
}

BlockNorms block_norms(const TaylorFunction& f, double p, int J) {
  if (J < 0) throw std::invalid_argument("J must be >= 0");
  const std::size_t needed = (std::size_t{1} << (J + 1)) - 1;
  if (f.degree() < needed)
    throw std::invalid_argument("degree too small for requested block count");
  BlockNorms bn;
  bn.p = p;
  for (int j = 0; j <= J; ++j) {
    const auto block = dyadic_block(f, j);
    if (p == 2.0) {
      double s = 0.0;
      for (double a : block.coeffs()) s += a * a;
      bn.norms.push_back(std::sqrt(s));
    } else {
      bn.norms.push_back(circle_mean(block, 1.0, p));
    }
  }
  return bn;
}

std::vector<double> default_r_grid(int k_max) {
  std::vector<double> g;
  for (int k = 1; k <= k_max; ++k) g.push_back(1.0 - std::ldexp(1.0, -k));
  return g;
}

bool trends_up(const std::vector<double>& trace) {
  if (trace.size() < 4) return false;
  const std::size_t m = trace.size() - 1;
  for (std::size_t i = m - 2; i <= m; ++i) {
    // Strict positivity so an identically-zero trace does not count.
    if (!(trace[i] > 0.0 && trace[i] >= 1.03 * trace[i - 1])) return false;
  }
  return true;
}

bool is_flat(const std::vector<double>& trace) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double v : trace) {
    if (v <= 0.0) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == 0.0) return true;
  return hi / lo <= 4.0;
}

NormProxyReport lambda_membership(const TaylorFunction& f, double p,
                                  const Weight& w, int J,
                                  const std::vector<double>& r_grid) {
  if (r_grid.empty()) throw std::invalid_argument("membership needs an r grid");
  const double r_max = *std::max_element(r_grid.begin(), r_grid.end());
  const std::size_t block_degree = (std::size_t{1} << (J + 1)) - 1;
  const std::size_t mean_degree =
      static_cast<std::size_t>(std::ceil(32.0 / (1.0 - r_max)));
  const std::size_t degree = std::max(block_degree, mean_degree);
  const TaylorFunction g =
      f.degree() >= degree ? f : f.extended_to(degree);  // throws w/o generator
  const TaylorFunction gd = derivative(g);

  NormProxyReport rep;
  rep.r_grid = r_grid;

  const auto bn = block_norms(g, p, J);
  for (int j = 0; j <= J; ++j)
    rep.block_trace.push_back(bn.norms[j] / w(std::ldexp(1.0, -j)));
  rep.block_proxy = std::abs(g.coeffs()[0]) +
                    *std::max_element(rep.block_trace.begin(), rep.block_trace.end());

  const std::size_t samples = default_samples(g.degree());
  for (double r : r_grid) {
    const auto d_mags = sample_circle(gd, r, samples);
    const auto f_mags = sample_circle(g, r, samples);
    const double u = 1.0 - r;
    rep.mean_trace.push_back(u * p_mean(d_mags, p) / w(u));
    rep.bloch_trace.push_back((1.0 - r * r) *
                              *std::max_element(d_mags.begin(), d_mags.end()));
    rep.growth_trace.push_back(*std::max_element(f_mags.begin(), f_mags.end()) *
                               std::pow(u, 1.0 / p) / w(u));
  }
  rep.mean_proxy = *std::max_element(rep.mean_trace.begin(), rep.mean_trace.end());
  rep.bloch_proxy = *std::max_element(rep.bloch_trace.begin(), rep.bloch_trace.end());
  rep.growth_proxy =
      *std::max_element(rep.growth_trace.begin(), rep.growth_trace.end());

  rep.member_at_scale = !trends_up(rep.block_trace) && !trends_up(rep.mean_trace) &&
                        std::isfinite(rep.block_proxy) && std::isfinite(rep.mean_proxy);
  return rep;
}

DecreasingCoefResult decreasing_coef_test(const CoefficientGenerator& a, double p,
                                          const Weight& w, int J) {
  if (J < 1) throw std::invalid_argument("J must be >= 1");
  const std::size_t n_top = std::size_t{1} << J;
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= n_top + 1; ++n) {
    const double an = a(n);
    if (an < 0.0 || an > prev * (1.0 + 1e-12))
      throw std::invalid_argument("generator must be nonnegative and nonincreasing");
    prev = an;
  }

  DecreasingCoefResult res;
  const TaylorFunction f(a, (std::size_t{1} << (J + 1)) - 1);
  const auto bn = block_norms(f, p, J);
  const double q = 1.0 - 1.0 / p;
  for (std::size_t n = 1; n <= n_top; ++n) {
    const double ratio = a(n) * std::pow(double(n), q) / w(1.0 / double(n));
    res.coef_sup = std::max(res.coef_sup, ratio);
  }
  for (int j = 1; j <= J; ++j) {
    const double n = std::ldexp(1.0, j);
    res.coef_trace.push_back(a(std::size_t(n)) * std::pow(n, q) / w(1.0 / n));
    res.block_trace.push_back(bn.norms[j] / w(std::ldexp(1.0, -j)));
  }
  res.coef_diverging = trends_up(res.coef_trace);
  res.block_diverging = trends_up(res.block_trace);
  res.agree = res.coef_diverging == res.block_diverging;
  return res;
}

}  // namespace hankelmu

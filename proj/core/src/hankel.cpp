#include "hankelmu/hankel.hpp"

#include <cmath>
#include <stdexcept>

#include "hankelmu/errors.hpp"
#include "hankelmu/quadrature.hpp"

namespace hankelmu {

HankelOp::HankelOp(std::size_t dim, std::vector<double> moments)
    : dim_(dim), moments_(std::move(moments)) {
  if (dim_ == 0) throw std::invalid_argument("dimension must be >= 1");
  if (moments_.size() != 2 * dim_ - 1)
    throw std::invalid_argument("moment vector must have length 2N-1");
  kernel_ = fft::CorrelationKernel(moments_, fft::next_pow2(2 * dim_));
}

HankelOp HankelOp::from_measure(const Measure& mu, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
  auto mv = moments_upto(mu, static_cast<int>(2 * dim - 2));
  return HankelOp(dim, std::move(mv.values));
}

std::vector<double> HankelOp::apply_naive(std::span<const double> a) const {
  if (a.size() != dim_) throw std::invalid_argument("length mismatch");
  std::vector<double> b(dim_, 0.0);
  for (std::size_t n = 0; n < dim_; ++n) {
    double s = 0.0;
    const double* row = moments_.data() + n;
    for (std::size_t k = 0; k < dim_; ++k) s += row[k] * a[k];
    b[n] = s;
  }
  return b;
}

std::vector<double> HankelOp::apply_fast(std::span<const double> a) const {
  if (a.size() != dim_) throw std::invalid_argument("length mismatch");
  return kernel_.correlate(std::vector<double>(a.begin(), a.end()), dim_);
}

std::vector<std::vector<double>> HankelOp::dense() const {
  if (dim_ > 1024) throw std::invalid_argument("dense dump capped at N = 1024");
  std::vector<std::vector<double>> m(dim_, std::vector<double>(dim_));
  for (std::size_t n = 0; n < dim_; ++n)
    for (std::size_t k = 0; k < dim_; ++k) m[n][k] = moments_[n + k];
  return m;
}

FubiniResult hankel_coefficients_via_fubini(const Measure& mu,
                                            const TaylorFunction& f,
                                            std::size_t dim) {
  FubiniResult res;
  const auto H = HankelOp::from_measure(mu, dim);
  std::vector<double> a = f.coeffs();
  a.resize(dim, 0.0);
  res.matrix = H.apply_naive(a);

  res.quadrature.resize(dim);
  if (mu.has_tail_spec())
    throw std::invalid_argument("fubini path needs an atoms+density measure");
  const auto eval_poly = [&f](double t) {
    double acc = 0.0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
      acc = acc * t + *it;
    return acc;
  };
  for (std::size_t n = 0; n < dim; ++n) {
    double s = 0.0;
    for (const auto& at : mu.atoms())
      s += at.mass * std::pow(at.location, double(n)) * eval_poly(at.location);
    if (mu.density()) {
      const auto& d = *mu.density();
      const auto r = quad::integrate_toward_lower(
          [&](double u) {
            const double t = 1.0 - u;
            return d.gu(u) * std::pow(t, double(n)) * eval_poly(t);
          },
          0.0, 1.0, static_cast<int>(std::ceil(std::log2(n + 2.0))) + 8, 2000, 1e-13);
      if (!r.converged) throw DivergenceError("fubini coefficient integral diverged");
      s += r.value;
    }
    res.quadrature[n] = s;
  }
  for (std::size_t n = 0; n < dim; ++n)
    res.gap = std::max(res.gap, std::abs(res.quadrature[n] - res.matrix[n]));
  return res;
}

std::complex<double> i_mu_eval(const Measure& mu, const TaylorFunction& f,
                               std::complex<double> z) {
  if (std::abs(z) >= 1.0) throw std::domain_error("i_mu_eval requires |z| < 1");
  if (mu.has_tail_spec())
    throw std::invalid_argument("i_mu_eval needs an atoms+density measure");
  const auto eval_poly = [&f](double t) {
    double acc = 0.0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
      acc = acc * t + *it;
    return acc;
  };

  // Absolute-integrability check (the integrand's modulus).
  double abs_part = 0.0;
  for (const auto& at : mu.atoms())
    abs_part += at.mass * std::abs(eval_poly(at.location)) /
                std::abs(1.0 - at.location * z);
  if (mu.density()) {
    const auto& d = *mu.density();
    const auto r = quad::integrate_toward_lower(
        [&](double u) {
          const double t = 1.0 - u;
          return d.gu(u) * std::abs(eval_poly(t)) / std::abs(1.0 - t * z);
        },
        0.0, 1.0, 8, 2000, 1e-12);
    if (!r.converged)
      throw IntegrabilityError("I_mu integrand not absolutely integrable");
    abs_part += r.value;
  }
  if (!std::isfinite(abs_part))
    throw IntegrabilityError("I_mu integrand not absolutely integrable");

  std::complex<double> s = 0.0;
  for (const auto& at : mu.atoms())
    s += at.mass * eval_poly(at.location) / (1.0 - at.location * z);
  if (mu.density()) {
    const auto& d = *mu.density();
    const auto part = [&](bool real_part) {
      return quad::integrate_toward_lower(
          [&, real_part](double u) {
            const double t = 1.0 - u;
            const auto v = d.gu(u) * eval_poly(t) / (1.0 - t * z);
            return real_part ? v.real() : v.imag();
          },
          0.0, 1.0, 8, 2000, 1e-12);
    };
    const auto re = part(true);
    const auto im = part(false);
    if (!re.converged || !im.converged)
      throw DivergenceError("I_mu integral diverged");
    s += std::complex<double>(re.value, im.value);
  }
  return s;
}

PowerIterResult top_singular_value(const HankelOp& H, double tol, int max_iter) {
  const std::size_t n = H.dim();
  PowerIterResult res;
  std::vector<double> x(n, 1.0 / std::sqrt(double(n)));
  double lambda = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    // H is symmetric; iterate on H^2 so the limit is sigma_max^2.
    auto y = H.apply_fast(H.apply_fast(x));
    double rayleigh = 0.0, norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      rayleigh += x[i] * y[i];
      norm2 += y[i] * y[i];
    }
    const double ynorm = std::sqrt(norm2);
    if (ynorm == 0.0) {  // zero operator
      res.sigma = 0.0;
      res.converged = true;
      res.iterations = it;
      return res;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ynorm;
    res.iterations = it;
    if (it > 1 && std::abs(rayleigh - lambda) <= tol * std::abs(rayleigh)) {
      res.sigma = std::sqrt(rayleigh);
      res.converged = true;
      return res;
    }
    lambda = rayleigh;
  }
  res.sigma = std::sqrt(std::max(lambda, 0.0));
  res.converged = false;
  return res;
}

}  // namespace hankelmu

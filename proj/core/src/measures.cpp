#include "hankelmu/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hankelmu/errors.hpp"
#include "hankelmu/quadrature.hpp"

namespace hankelmu {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

int peak_panels(int n) {
  // t^n concentrates at 1 - O(1/n); panels must reach past the peak
  // before the relative-decay stop is trusted.
  return static_cast<int>(std::ceil(std::log2(n + 2.0))) + 8;
}

int singularity_panels(double sigma) {
  const double s = std::clamp(sigma, 0.0, 0.95);
  return static_cast<int>(std::ceil(48.0 / (1.0 - s))) + 60;
}

double check(const quad::DyadicResult& r, const char* what) {
  if (!r.converged) throw DivergenceError(what);
  return r.value;
}

}  // namespace

Measure Measure::from_atoms(std::vector<Atom> atoms) {
  Measure m;
  for (const auto& a : atoms)
    if (a.location < 0.0 || a.location >= 1.0 || a.mass <= 0.0)
      throw std::invalid_argument("atom needs location in [0,1) and positive mass");
  m.atoms_ = std::move(atoms);
  m.name_ = "atoms";
  return m;
}

Measure Measure::from_density(std::function<double(double)> g, double sigma_hint,
                              std::vector<Atom> atoms) {
  Measure m = from_atoms(std::move(atoms));
  auto gu = [g](double u) { return g(1.0 - u); };
  m.density_ = Density{std::move(g), sigma_hint, std::move(gu)};
  m.name_ = "density";
  return m;
}

Measure Measure::from_tail(std::function<double(double)> F) {
  Measure m;
  m.tail_u_ = [F](double u) { return F(1.0 - u); };
  m.tail_ = std::move(F);
  m.name_ = "tail";
  return m;
}

Measure Measure::from_density_u(std::function<double(double)> gu,
                                double sigma_hint, std::vector<Atom> atoms) {
  Measure m = from_atoms(std::move(atoms));
  auto g = [gu](double t) { return gu(1.0 - t); };
  m.density_ = Density{std::move(g), sigma_hint, std::move(gu)};
  m.name_ = "density";
  return m;
}

Measure Measure::lebesgue() {
  return from_density_u([](double) { return 1.0; }, 0.0).set_name("lebesgue");
}

Measure Measure::power_density(double sigma) {
  if (sigma >= 1.0) throw std::invalid_argument("power density needs sigma < 1");
  return from_density_u([sigma](double u) { return std::pow(u, -sigma); }, sigma)
      .set_name("power_sigma");
}

Measure Measure::one_minus_t() {
  return from_density_u([](double u) { return u; }, 0.0).set_name("one_minus_t");
}

Measure Measure::log_density() {
  return from_density_u([](double u) { return std::log(kE * kPi / u); }, 0.0)
      .set_name("log_density");
}

Measure Measure::log_carleson_canonical() {
  Measure m = from_tail([](double b) {
    const double u = 1.0 - b;
    return u > 0.0 ? u / std::log(kE / u) : 0.0;
  });
  m.tail_u_ = [](double u) { return u > 0.0 ? u / std::log(kE / u) : 0.0; };
  return m.set_name("log_carleson_1_1");
}

Measure Measure::power_tail(double q) {
  if (q <= 0.0 || q > 1.0) throw std::invalid_argument("power tail needs q in (0,1]");
  Measure m = from_tail([q](double b) { return std::pow(1.0 - b, q); });
  m.tail_u_ = [q](double u) { return std::pow(u, q); };
  return m.set_name("power_tail");
}

Measure Measure::power_log_tail(double q, double s) {
  if (q <= 0.0 || q > 1.0) throw std::invalid_argument("power_log tail needs q in (0,1]");
  auto Fu = [q, s](double u) {
    return u > 0.0 ? std::pow(u, q) * std::pow(std::log(kE * kPi / u), s) : 0.0;
  };
  Measure m = from_tail([Fu](double b) { return Fu(1.0 - b); });
  m.tail_u_ = Fu;
  return m.set_name("power_log_tail");
}

double moment(const Measure& mu, int n) {
  if (n < 0) throw std::invalid_argument("moment order must be >= 0");
  // All t-integrals run in u = 1-t: dyadic panels toward u = 0 keep their
  // endpoints exactly representable however close to the singularity.
  if (mu.has_tail_spec()) {
    const auto& F = mu.tail_spec_u();
    if (n == 0) return F(1.0);
    const auto r = quad::integrate_toward_lower(
        [&F, n](double u) { return F(u) * std::pow(1.0 - u, n - 1); }, 0.0, 1.0,
        peak_panels(n), singularity_panels(0.0) + peak_panels(n), 1e-13);
    return n * check(r, "tail-formula moment integral diverged");
  }
  double s = 0.0;
  for (const auto& a : mu.atoms()) s += a.mass * std::pow(a.location, n);
  if (mu.density()) {
    const auto& d = *mu.density();
    const auto r = quad::integrate_toward_lower(
        [&d, n](double u) { return d.gu(u) * std::pow(1.0 - u, n); }, 0.0, 1.0,
        peak_panels(n), singularity_panels(d.sigma_hint) + peak_panels(n), 1e-13);
    s += check(r, "density moment integral diverged");
  }
  return s;
}

double tail(const Measure& mu, double b) {
  if (b < 0.0 || b >= 1.0) throw std::domain_error("tail needs b in [0, 1)");
  if (mu.has_tail_spec()) return mu.tail_spec()(b);
  double s = 0.0;
  for (const auto& a : mu.atoms())
    if (a.location >= b) s += a.mass;
  if (mu.density()) {
    const auto& d = *mu.density();
    const auto r = quad::integrate_toward_lower(
        d.gu, 0.0, 1.0 - b, 8, singularity_panels(d.sigma_hint), 1e-13);
    s += check(r, "density tail integral diverged");
  }
  return s;
}

double log_moment(const Measure& mu, int n) {
  if (n < 1) throw std::invalid_argument("log_moment needs n >= 1");
  if (mu.has_tail_spec()) {
    const auto& F = mu.tail_spec_u();
    // Integration by parts against the tail: the boundary term vanishes
    // since t^n log(1/(1-t)) is 0 at t = 0.
    const auto r = quad::integrate_toward_lower(
        [&F, n](double u) {
          const double t = 1.0 - u;
          return (n * std::pow(t, n - 1) * std::log(1.0 / u) + std::pow(t, n) / u) *
                 F(u);
        },
        0.0, 1.0, peak_panels(n), singularity_panels(0.5) + peak_panels(n), 1e-13);
    return check(r, "tail-formula log-moment integral diverged");
  }
  double s = 0.0;
  for (const auto& a : mu.atoms())
    s += a.mass * std::pow(a.location, n) * std::log(1.0 / (1.0 - a.location));
  if (mu.density()) {
    const auto& d = *mu.density();
    const auto r = quad::integrate_toward_lower(
        [&d, n](double u) {
          return d.gu(u) * std::pow(1.0 - u, n) * std::log(1.0 / u);
        },
        0.0, 1.0, peak_panels(n), singularity_panels(d.sigma_hint) + peak_panels(n),
        1e-13);
    s += check(r, "density log-moment integral diverged");
  }
  return s;
}

MomentVector moments_upto(const Measure& mu, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  MomentVector mv;
  mv.n_max = n_max;
  mv.values.assign(n_max + 1, 0.0);

  const bool tail_form = mu.has_tail_spec();
  const double sigma = (!tail_form && mu.density()) ? mu.density()->sigma_hint : 0.0;
  const int depth = peak_panels(n_max) + singularity_panels(sigma);

  // Shared nodes over the dyadic panel ladder toward t = 1, parameterized
  // by u = 1-t so panel endpoints stay exactly representable.
  std::vector<double> node_t, node_c;
  if (tail_form || mu.density()) {
    node_t.reserve(static_cast<std::size_t>(depth) * quad::kGaussOrder);
    node_c.reserve(node_t.capacity());
    std::array<double, quad::kGaussOrder> x{}, w{};
    for (int k = 0; k < depth; ++k) {
      const double a = std::ldexp(1.0, -k - 1);
      const double b = std::ldexp(1.0, -k);
      quad::gauss16_nodes(a, b, x, w);
      for (int i = 0; i < quad::kGaussOrder; ++i) {
        const double f =
            tail_form ? mu.tail_spec_u()(x[i]) : mu.density()->gu(x[i]);
        if (!std::isfinite(f)) throw DivergenceError("non-finite integrand sample");
        node_t.push_back(1.0 - x[i]);
        node_c.push_back(w[i] * f);
      }
    }
  }

  std::vector<double> powers(node_t.size(), 1.0);
  if (tail_form) {
    mv.values[0] = mu.tail_spec()(0.0);
    for (int n = 1; n <= n_max; ++n) {
      double s = 0.0;
      for (std::size_t i = 0; i < node_t.size(); ++i) s += node_c[i] * powers[i];
      mv.values[n] = n * s;
      for (std::size_t i = 0; i < node_t.size(); ++i) powers[i] *= node_t[i];
    }
    return mv;
  }

  for (int n = 0; n <= n_max; ++n) {
    double s = 0.0;
    for (std::size_t i = 0; i < node_t.size(); ++i) s += node_c[i] * powers[i];
    for (const auto& a : mu.atoms()) s += a.mass * std::pow(a.location, n);
    mv.values[n] = s;
    for (std::size_t i = 0; i < node_t.size(); ++i) powers[i] *= node_t[i];
  }
  return mv;
}

const char* to_string(CarlesonVerdict v) {
  return v == CarlesonVerdict::bounded ? "bounded" : "diverging";
}

std::vector<double> default_b_grid(int k_max) {
  std::vector<double> g;
  for (int k = 1; k <= k_max; ++k) g.push_back(1.0 - std::ldexp(1.0, -k));
  return g;
}

CarlesonReport carleson_ratio(const Measure& mu, double s, double alpha,
                              const std::vector<double>& b_grid) {
  if (s <= 0.0) throw std::invalid_argument("carleson_ratio needs s > 0");
  if (alpha < 0.0) throw std::invalid_argument("carleson_ratio needs alpha >= 0");
  if (b_grid.empty()) throw std::invalid_argument("carleson_ratio needs a grid");
  CarlesonReport rep;
  rep.s = s;
  rep.alpha = alpha;
  rep.grid = b_grid;
  for (double b : b_grid) {
    const double u = 1.0 - b;
    const double ratio =
        tail(mu, b) * std::pow(std::log(2.0 * kPi / u), alpha) / std::pow(u, s);
    rep.ratios.push_back(ratio);
    if (ratio >= rep.sup_ratio) {
      rep.sup_ratio = ratio;
      rep.witness_b = b;
    }
  }
  // Trend heuristic: still climbing by >= 10% over the last ten grid steps.
  const std::size_t m = rep.ratios.size() - 1;
  const std::size_t back = m >= 10 ? m - 10 : 0;
  if (rep.ratios[m] >= 1.10 * rep.ratios[back] && rep.ratios[m] > 0.0)
    rep.verdict = CarlesonVerdict::diverging;
  return rep;
}

}  // namespace hankelmu

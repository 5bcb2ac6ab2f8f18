#include "hankelmu/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hankelmu/quadrature.hpp"

namespace hankelmu {

namespace {
constexpr double kPi = std::numbers::pi;
}

Weight Weight::power(double alpha) {
  if (alpha <= 0.0 || alpha > 1.0)
    throw std::invalid_argument("power weight needs alpha in (0, 1]");
  Weight w;
  w.family_ = WeightFamily::power;
  w.alpha_ = alpha;
  return w;
}

Weight Weight::power_log(double alpha, double beta) {
  if (alpha <= 0.0 || alpha > 1.0)
    throw std::invalid_argument("power_log weight needs alpha in (0, 1]");
  Weight w;
  w.family_ = WeightFamily::power_log;
  w.alpha_ = alpha;
  w.beta_ = beta;
  return w;
}

Weight Weight::custom(std::vector<double> t, std::vector<double> values) {
  if (t.size() != values.size() || t.size() < 2)
    throw std::invalid_argument("custom weight needs matching tables, >= 2 rows");
  Weight w;
  w.family_ = WeightFamily::custom;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] <= 0.0 || t[i] > kPi || values[i] <= 0.0)
      throw std::invalid_argument("custom weight samples must be positive on (0, pi]");
    if (i > 0 && (t[i] <= t[i - 1] || values[i] < values[i - 1]))
      throw std::invalid_argument("custom weight samples must be increasing");
    w.log_t_.push_back(std::log(t[i]));
    w.log_v_.push_back(std::log(values[i]));
  }
  return w;
}

double Weight::eval_custom(double t) const {
  const double lt = std::log(t);
  // Segment lookup; extrapolate below the table with the first segment's
  // power law, clamp above.
  std::size_t hi = std::upper_bound(log_t_.begin(), log_t_.end(), lt) - log_t_.begin();
  if (hi == 0) hi = 1;
  if (hi == log_t_.size()) {
    if (lt >= log_t_.back()) return std::exp(log_v_.back());
    hi = log_t_.size() - 1;
  }
  const std::size_t lo = hi - 1;
  const double slope = (log_v_[hi] - log_v_[lo]) / (log_t_[hi] - log_t_[lo]);
  return std::exp(log_v_[lo] + slope * (lt - log_t_[lo]));
}

double Weight::operator()(double t) const {
  if (t < 0.0 || t > kPi * (1.0 + 1e-15))
    throw std::domain_error("weight evaluated outside [0, pi]");
  if (t == 0.0) return 0.0;
  switch (family_) {
    case WeightFamily::power:
      return std::pow(t, alpha_);
    case WeightFamily::power_log:
      return std::pow(t, alpha_) * std::pow(std::log(std::numbers::e * kPi / t), beta_);
    case WeightFamily::custom:
      return eval_custom(t);
  }
  return 0.0;
}

std::string Weight::describe() const {
  std::ostringstream os;
  switch (family_) {
    case WeightFamily::power:
      os << "power(" << alpha_ << ")";
      break;
    case WeightFamily::power_log:
      os << "power_log(" << alpha_ << "," << beta_ << ")";
      break;
    case WeightFamily::custom:
      os << "custom[" << log_t_.size() << "]";
      break;
  }
  return os.str();
}

RatioResult dini_ratio(const Weight& w, double delta) {
  if (delta <= 0.0 || delta > kPi)
    throw std::domain_error("dini_ratio needs delta in (0, pi]");
  const auto integrand = [&w](double t) { return w(t) / t; };
  const auto r = quad::integrate_toward_lower(integrand, 0.0, delta, 16, 4000, 1e-12);
  RatioResult out;
  out.diverged = !r.converged;
  if (!out.diverged) out.value = r.value / w(delta);
  return out;
}

RatioResult b1_ratio(const Weight& w, double delta) {
  if (delta <= 0.0 || delta > kPi)
    throw std::domain_error("b1_ratio needs delta in (0, pi]");
  RatioResult out;
  if (delta == kPi) {
    out.value = 0.0;
    return out;
  }
  const auto integrand = [&w](double t) { return w(t) / (t * t); };
  // The integrand concentrates at the lower endpoint delta.
  const auto r = quad::integrate_toward_lower(integrand, delta, kPi, 16, 4000, 1e-12);
  out.diverged = !r.converged;
  if (!out.diverged) out.value = r.value / (w(delta) / delta);
  return out;
}

const char* to_string(GrowthClass g) {
  switch (g) {
    case GrowthClass::blows_up: return "blows_up";
    case GrowthClass::bounded: return "bounded";
    case GrowthClass::nonmonotone: return "nonmonotone";
  }
  return "?";
}

std::vector<double> default_delta_grid() {
  std::vector<double> g;
  for (int k = 0; k <= 30; ++k) g.push_back(std::ldexp(1.0, -k));
  return g;
}

AdmissibilityReport admissibility(const Weight& w, double p,
                                  const std::vector<double>& delta_grid) {
  if (delta_grid.size() < 16)
    throw std::invalid_argument("admissibility grid needs >= 16 points");
  for (std::size_t i = 1; i < delta_grid.size(); ++i)
    if (delta_grid[i] >= delta_grid[i - 1] || delta_grid[i] <= 0.0)
      throw std::invalid_argument("admissibility grid must decrease toward 0");

  AdmissibilityReport rep;
  rep.grid = delta_grid;
  rep.monotone_ok = true;
  rep.positivity_ok = true;

  std::vector<double> growth;
  double prev_omega = std::numeric_limits<double>::infinity();
  for (double d : delta_grid) {
    const double od = w(d);
    if (od <= 0.0) rep.positivity_ok = false;
    if (od > prev_omega * (1.0 + 1e-12)) rep.monotone_ok = false;
    prev_omega = od;

    const auto dr = dini_ratio(w, d);
    const auto br = b1_ratio(w, d);
    rep.dini_diverged = rep.dini_diverged || dr.diverged;
    rep.b1_diverged = rep.b1_diverged || br.diverged;
    rep.dini_sup = std::max(rep.dini_sup, dr.value);
    rep.b1_sup = std::max(rep.b1_sup, br.value);

    growth.push_back(od / std::pow(d, 1.0 / p));
  }

  // delta^{-1/p} omega(delta) along the grid (toward delta -> 0): classify.
  bool nondecreasing = true, nonincreasing = true;
  for (std::size_t i = 1; i < growth.size(); ++i) {
    if (growth[i] < growth[i - 1] * (1.0 - 1e-9)) nondecreasing = false;
    if (growth[i] > growth[i - 1] * (1.0 + 1e-9)) nonincreasing = false;
  }
  if (nondecreasing && growth.back() >= 4.0 * growth.front())
    rep.growth_class = GrowthClass::blows_up;
  else if (nondecreasing || nonincreasing)
    rep.growth_class = GrowthClass::bounded;
  else
    rep.growth_class = GrowthClass::nonmonotone;
  return rep;
}

}  // namespace hankelmu

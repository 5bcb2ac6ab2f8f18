#pragma once

#include <string>
#include <vector>

namespace hankelmu {

enum class WeightFamily { power, power_log, custom };

/// A modulus function on [0, pi]: continuous, increasing, vanishing at 0.
/// power:      t^alpha, alpha in (0, 1]
/// power_log:  t^alpha * log(e*pi/t)^beta
/// custom:     monotone log-log interpolation of a sample table
class Weight {
 public:
  static Weight power(double alpha);
  static Weight power_log(double alpha, double beta);
  static Weight custom(std::vector<double> t, std::vector<double> values);

  /// omega(t); throws std::domain_error outside [0, pi].
  double operator()(double t) const;

  WeightFamily family() const { return family_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  std::string describe() const;

 private:
  Weight() = default;
  double eval_custom(double t) const;

  WeightFamily family_ = WeightFamily::power;
  double alpha_ = 1.0;
  double beta_ = 0.0;
  std::vector<double> log_t_, log_v_;  // custom family, log-log samples
};

struct RatioResult {
  double value = 0.0;
  bool diverged = false;
};

/// int_0^delta omega(t)/t dt divided by omega(delta).
RatioResult dini_ratio(const Weight& w, double delta);

/// int_delta^pi omega(t)/t^2 dt divided by omega(delta)/delta.
RatioResult b1_ratio(const Weight& w, double delta);

enum class GrowthClass { blows_up, bounded, nonmonotone };

const char* to_string(GrowthClass g);

struct AdmissibilityReport {
  double dini_sup = 0.0;
  double b1_sup = 0.0;
  bool dini_diverged = false;
  bool b1_diverged = false;
  bool monotone_ok = false;
  bool positivity_ok = false;
  GrowthClass growth_class = GrowthClass::bounded;
  std::vector<double> grid;

  bool admissible() const {
    return !dini_diverged && !b1_diverged && monotone_ok && positivity_ok;
  }
};

/// Tests the admissibility conditions on a strictly decreasing delta grid
/// (>= 16 points); growth_class refers to delta^{-1/p} * omega(delta).
AdmissibilityReport admissibility(const Weight& w, double p,
                                  const std::vector<double>& delta_grid);

/// Dyadic grid 2^0 .. 2^-30.
std::vector<double> default_delta_grid();

}  // namespace hankelmu

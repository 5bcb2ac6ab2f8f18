#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hankelmu {

struct Atom {
  double location;  // in [0, 1)
  double mass;      // > 0
};

/// A finite positive Borel measure on [0, 1): either atoms plus an optional
/// density with a power-singularity hint at t = 1, or a tail function
/// F(b) = mu([b, 1)).
class Measure {
 public:
  struct Density {
    std::function<double(double)> g;
    double sigma_hint = 0.0;  // g(t) * (1-t)^sigma bounded near 1
    // g evaluated at t = 1-u; kept separate so quadrature near t = 1 does
    // not lose the distance to the singularity to rounding.
    std::function<double(double)> gu;
  };

  static Measure from_atoms(std::vector<Atom> atoms);
  static Measure from_density(std::function<double(double)> g, double sigma_hint,
                              std::vector<Atom> atoms = {});
  /// Density given as a function of u = 1-t; preferred when the density is
  /// singular at t = 1.
  static Measure from_density_u(std::function<double(double)> gu,
                                double sigma_hint, std::vector<Atom> atoms = {});
  static Measure from_tail(std::function<double(double)> F);

  // Built-ins.
  static Measure lebesgue();
  /// (1-t)^{-sigma} dt, sigma < 1.
  static Measure power_density(double sigma);
  /// (1-t) dt.
  static Measure one_minus_t();
  /// log(e*pi/(1-t)) dt.
  static Measure log_density();
  /// Canonical 1-logarithmic 1-Carleson example: tail (1-b)/log(e/(1-b)).
  static Measure log_carleson_canonical();
  /// Tail (1-b)^q, 0 < q <= 1.
  static Measure power_tail(double q);
  /// Tail (1-b)^q * log(e*pi/(1-b))^s.
  static Measure power_log_tail(double q, double s);

  bool has_tail_spec() const { return static_cast<bool>(tail_); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::optional<Density>& density() const { return density_; }
  const std::function<double(double)>& tail_spec() const { return tail_; }
  /// F evaluated at b = 1-u, stable for u near 0.
  const std::function<double(double)>& tail_spec_u() const { return tail_u_; }
  const std::string& name() const { return name_; }
  Measure& set_name(std::string n) { name_ = std::move(n); return *this; }

 private:
  Measure() = default;
  std::vector<Atom> atoms_;
  std::optional<Density> density_;
  std::function<double(double)> tail_;
  std::function<double(double)> tail_u_;
  std::string name_ = "custom";
};

struct MomentVector {
  int n_max = 0;
  std::vector<double> values;  // mu_0 .. mu_{n_max}
};

/// mu_n = int t^n dmu; tail-spec measures use mu_n = n * int_0^1 F(t) t^{n-1} dt.
double moment(const Measure& mu, int n);

/// mu([b, 1)), atoms at t >= b included.
double tail(const Measure& mu, double b);

/// int t^n log(1/(1-t)) dmu, n >= 1.
double log_moment(const Measure& mu, int n);

/// Batch of moments with shared quadrature nodes.
MomentVector moments_upto(const Measure& mu, int n_max);

enum class CarlesonVerdict { bounded, diverging };

const char* to_string(CarlesonVerdict v);

struct CarlesonReport {
  double s = 1.0;
  double alpha = 0.0;
  double sup_ratio = 0.0;
  double witness_b = 0.0;
  std::vector<double> grid;
  std::vector<double> ratios;
  CarlesonVerdict verdict = CarlesonVerdict::bounded;
};

/// sup over the grid of tail(b) * log(2*pi/(1-b))^alpha / (1-b)^s; the
/// "diverging" verdict is a trend heuristic (>= 10% growth over the last
/// ten grid steps), not a proof.
CarlesonReport carleson_ratio(const Measure& mu, double s, double alpha,
                              const std::vector<double>& b_grid);

/// b_k = 1 - 2^-k, k = 1..k_max.
std::vector<double> default_b_grid(int k_max = 40);

}  // namespace hankelmu

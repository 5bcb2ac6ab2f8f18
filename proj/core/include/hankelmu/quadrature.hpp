#pragma once

#include <array>
#include <functional>

namespace hankelmu::quad {

inline constexpr int kGaussOrder = 16;

/// Nodes and weights of the 16-point Gauss-Legendre rule mapped to [a, b].
void gauss16_nodes(double a, double b,
                   std::array<double, kGaussOrder>& x,
                   std::array<double, kGaussOrder>& w);

double gauss16(const std::function<double(double)>& f, double a, double b);

struct DyadicResult {
  double value = 0.0;
  bool converged = false;
  int panels = 0;
};

/// Integrates f over [lo, hi] with dyadic panels refining toward hi,
/// one Gauss rule per panel. Stops once a panel past min_panels contributes
/// less than rel_tol relative to the running total; if max_panels is reached
/// first the result is flagged non-converged.
DyadicResult integrate_toward_upper(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    int min_panels = 8, int max_panels = 2000,
                                    double rel_tol = 1e-12);

/// Same scheme with panels refining toward lo.
DyadicResult integrate_toward_lower(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    int min_panels = 8, int max_panels = 2000,
                                    double rel_tol = 1e-12);

}  // namespace hankelmu::quad

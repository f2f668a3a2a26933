#pragma once

#include <functional>
#include <utility>

namespace rwcollide {

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int subdivisions = 0;
  std::pair<double, double> t_range{0.0, 0.0};

  friend bool operator==(const QuadratureResult&, const QuadratureResult&) = default;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 4000;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature on a finite [a, b].
/// Stops once the summed error estimate is within max(abs_tol, rel_tol*|I|).
/// Throws NumericalError (carrying the partial value) when the subdivision
/// budget runs out. Output does not depend on anything but the arguments.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

}  // namespace rwcollide

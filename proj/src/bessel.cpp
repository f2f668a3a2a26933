#include "rwcollide/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rwcollide/errors.hpp"
#include "rwcollide/quadrature.hpp"

namespace rwcollide {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLogSpaceThreshold = 1e3;  // d*t above which p^d goes through exp(d log p)

void check_argument(double z) {
  if (!std::isfinite(z) || z < 0.0) throw InputError("Bessel argument must be finite and nonnegative");
}

void check_time(double t) {
  if (!std::isfinite(t) || t < 0.0) throw InputError("time must be finite and nonnegative");
}

}  // namespace

ScaledBesselValue i0_scaled_series(double z) {
  check_argument(z);
  const double q = 0.25 * z * z;
  double term = std::exp(-z);
  double sum = term;
  int k = 0;
  for (;; ++k) {
    const double ratio = q / ((k + 1.0) * (k + 1.0));
    term *= ratio;
    sum += term;
    if (ratio < 1.0 && term < 1e-18 * sum) break;
  }
  // Term ratios keep shrinking, so the tail is dominated by a geometric series.
  const double next_ratio = q / ((k + 2.0) * (k + 2.0));
  const double tail = term * next_ratio / (1.0 - next_ratio);
  const double rounding = 2.0 * (k + 3) * kEps * sum;
  return {sum, BesselRegime::series, tail + rounding};
}

ScaledBesselValue i0_scaled_asymptotic(double z) {
  check_argument(z);
  if (z == 0.0) throw InputError("asymptotic expansion needs z > 0");
  const double eight_z = 8.0 * z;
  double term = 1.0;
  double sum = 1.0;
  double next = 0.0;
  for (int k = 1;; ++k) {
    const double odd = 2.0 * k - 1.0;
    next = term * odd * odd / (k * eight_z);
    if (next >= term || next < 1e-17 * sum) break;
    term = next;
    sum += term;
  }
  const double prefactor = 1.0 / std::sqrt(2.0 * std::numbers::pi * z);
  const double value = prefactor * sum;
  // Truncation (twice the first omitted term), the exponentially small
  // e^{-2z} companion, and rounding.
  const double err = prefactor * (2.0 * next + std::exp(-2.0 * z)) + 8.0 * kEps * value;
  return {value, BesselRegime::asymptotic, err};
}

ScaledBesselValue i0_scaled(double z) {
  check_argument(z);
  if (z == 0.0) return {1.0, BesselRegime::series, 0.0};
  return z <= kBesselRegimeSwitch ? i0_scaled_series(z) : i0_scaled_asymptotic(z);
}

double i0_quadrature(double z) {
  check_argument(z);
  // cos(theta) - 1 = -2 sin^2(theta/2) keeps the exponent accurate near 0.
  auto integrand = [z](double theta) {
    const double s = std::sin(0.5 * theta);
    return std::exp(-2.0 * z * s * s);
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-14 * std::numbers::pi;  // 1e-14 after the 1/pi normalisation
  opts.rel_tol = 0.0;
  opts.max_subdivisions = 2000;
  return integrate(integrand, 0.0, std::numbers::pi, opts).value / std::numbers::pi;
}

Probability coordinate_return_prob(double t, Dimension d) {
  check_time(t);
  const auto k = i0_scaled(2.0 / d.value() * t);
  return {k.value, k.err_bound, false};
}

Probability series_prob_oracle(double t, Dimension d, int K) {
  check_time(t);
  if (K < 0) throw InputError("series truncation index must be nonnegative");
  const double z = 2.0 / d.value() * t;
  double poisson = std::exp(-z);  // Poisson(z) mass at 2k
  double central = 1.0;           // C(2k, k) 2^{-2k}
  double sum = poisson;
  for (int k = 1; k <= K; ++k) {
    poisson *= z * z / ((2.0 * k - 1.0) * (2.0 * k));
    central *= (2.0 * k - 1.0) / (2.0 * k);
    sum += poisson * central;
  }
  return {sum, series_prob_tail_bound(t, d, K), false};
}

double series_prob_tail_bound(double t, Dimension d, int K) {
  check_time(t);
  const double z = 2.0 / d.value() * t;
  if (z == 0.0) return 0.0;
  const double m = 2.0 * K + 2.0;
  // Poisson mass at m, times a geometric bound on the masses beyond it.
  const double log_mass = -z + m * std::log(z) - std::lgamma(m + 1.0);
  const double ratio = z / (m + 1.0);
  if (ratio >= 1.0) return 1.0;
  return std::exp(log_mass) / (1.0 - ratio);
}

double log_collision_prob(double t, Dimension d) {
  const auto p = coordinate_return_prob(t, d);
  return d.value() * std::log(p.value);
}

Probability collision_prob(double t, Dimension d) {
  const auto p = coordinate_return_prob(t, d);
  const int n = d.value();
  Probability out;
  if (n * t > kLogSpaceThreshold) {
    out.value = std::exp(n * std::log(p.value));
  } else {
    out.value = std::pow(p.value, n);
  }
  out.err_bound = out.value * (n * p.err_bound / p.value + 4.0 * kEps);
  out.underflow = out.value < std::numeric_limits<double>::min();
  return out;
}

}  // namespace rwcollide

#include "rwcollide/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rwcollide/bessel.hpp"
#include "rwcollide/errors.hpp"

namespace rwcollide {

namespace {

void check_t_max(double t_max) {
  if (!std::isfinite(t_max) || t_max <= 0.0) throw InputError("t_max must be finite and positive");
}

void check_dp(Dimension d, int m_max) {
  if (d.value() > kDpMaxDimension) {
    throw InputError("return-probability DP supports d <= " + std::to_string(kDpMaxDimension));
  }
  if (m_max < 0 || m_max > kDpMaxSteps) {
    throw InputError("return-probability DP supports 0 <= m <= " + std::to_string(kDpMaxSteps));
  }
}

// Breakpoints 0, 1, 10, 100, ... capped at t_max.
std::vector<double> decade_breaks(double t_max) {
  std::vector<double> breaks{0.0};
  for (double b = 1.0; b < t_max; b *= 10.0) breaks.push_back(b);
  breaks.push_back(t_max);
  return breaks;
}

double collision_integrand(double t, Dimension d) { return collision_prob(t, d).value; }

}  // namespace

std::vector<CurvePoint> occupation_curve(Dimension d, double t_max) {
  check_t_max(t_max);
  const auto breaks = decade_breaks(t_max);
  const auto pieces = static_cast<double>(breaks.size() - 1);
  QuadratureOptions opts;
  opts.abs_tol = 1e-10 / pieces;
  opts.rel_tol = 1e-8;
  std::vector<CurvePoint> curve;
  double running = 0.0;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    running += integrate([d](double t) { return collision_integrand(t, d); }, breaks[i - 1], breaks[i], opts).value;
    curve.push_back({breaks[i], running});
  }
  return curve;
}

OccupationResult expected_occupation(Dimension d, double t_max) {
  check_t_max(t_max);
  const auto breaks = decade_breaks(t_max);
  const auto pieces = static_cast<double>(breaks.size() - 1);
  QuadratureOptions opts;
  opts.abs_tol = 1e-10 / pieces;
  opts.rel_tol = 1e-8;

  OccupationResult out;
  out.dim = d.value();
  out.quadrature.t_range = {0.0, t_max};
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    try {
      const auto piece =
          integrate([d](double t) { return collision_integrand(t, d); }, breaks[i - 1], breaks[i], opts);
      out.quadrature.value += piece.value;
      out.quadrature.err_estimate += piece.err_estimate;
      out.quadrature.subdivisions += piece.subdivisions;
    } catch (const NumericalError& e) {
      throw NumericalError(std::string("expected occupation: ") + e.what(),
                           out.quadrature.value + e.partial_value(), out.quadrature.err_estimate + e.err_estimate());
    }
  }

  const int n = d.value();
  if (n >= 3) {
    // P(D(t)=0) = c t^{-d/2} (1 + d^2/(16 t) + O(t^{-2})).
    const double c = derived_constant(d);
    const double p = 0.5 * n;
    const double leading = c * std::pow(t_max, 1.0 - p) / (p - 1.0);
    const double correction = c * (n * n / 16.0) * std::pow(t_max, -p) / p;
    out.has_tail = true;
    out.tail = leading + correction;
    out.tail_remainder = correction;
  }
  return out;
}

double occupation_increment(Dimension d, double a, double b) {
  QuadratureOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = 1e-10;
  return integrate([d](double t) { return collision_integrand(t, d); }, a, b, opts).value;
}

std::vector<double> dp_return_probs(Dimension d, int m_max) {
  check_dp(d, m_max);
  const auto steps = static_cast<std::size_t>(m_max);

  // Line DP: position i of `f` holds the walker's mass at i - radius. Mass
  // farther out than m_max/2 can never return, so the box stops there.
  const std::size_t radius = steps / 2 + 1;
  std::vector<double> f(2 * radius + 1, 0.0), g(f.size(), 0.0);
  f[radius] = 1.0;
  std::vector<double> line(steps + 1, 0.0);
  line[0] = 1.0;
  for (std::size_t m = 1; m <= steps; ++m) {
    g[0] = 0.5 * f[1];
    g.back() = 0.5 * f[f.size() - 2];
    for (std::size_t i = 1; i + 1 < f.size(); ++i) g[i] = 0.5 * (f[i - 1] + f[i + 1]);
    std::swap(f, g);
    line[m] = f[radius];
  }

  std::vector<double> log_fact(steps + 1, 0.0);
  for (std::size_t m = 1; m <= steps; ++m) log_fact[m] = log_fact[m - 1] + std::log(static_cast<double>(m));

  // Add coordinates one at a time: with j coordinates in play, each step
  // lands on the new one with probability 1/j.
  std::vector<double> probs = line;
  for (int j = 2; j <= d.value(); ++j) {
    const double log_new = std::log(1.0 / j);
    const double log_old = std::log((j - 1.0) / j);
    std::vector<double> next(steps + 1, 0.0);
    for (std::size_t m = 0; m <= steps; m += 2) {
      double acc = 0.0;
      for (std::size_t k = 0; k <= m; k += 2) {
        const double log_weight = log_fact[m] - log_fact[k] - log_fact[m - k] + static_cast<double>(k) * log_new +
                                  static_cast<double>(m - k) * log_old;
        acc += std::exp(log_weight) * line[k] * probs[m - k];
      }
      next[m] = acc;
    }
    probs = std::move(next);
  }
  return probs;
}

double dp_return_prob(Dimension d, int m) { return dp_return_probs(d, m).back(); }

std::vector<double> box_return_probs(Dimension d, int m_max) {
  if (m_max < 0) throw InputError("step count must be nonnegative");
  const int n = d.value();
  const std::size_t radius = static_cast<std::size_t>(m_max) / 2;
  const std::size_t side = 2 * radius + 1;
  double cells = std::pow(static_cast<double>(side), n);
  if (cells > 2e7) throw InputError("box DP would need more than 2e7 cells");

  std::vector<std::size_t> stride(static_cast<std::size_t>(n), 1);
  for (int i = 1; i < n; ++i) stride[static_cast<std::size_t>(i)] = stride[static_cast<std::size_t>(i - 1)] * side;
  const auto total = static_cast<std::size_t>(cells);
  std::size_t origin = 0;
  for (int i = 0; i < n; ++i) origin += radius * stride[static_cast<std::size_t>(i)];

  std::vector<double> f(total, 0.0), g(total, 0.0);
  f[origin] = 1.0;
  std::vector<double> out{1.0};
  const double w = 1.0 / (2.0 * n);
  for (int m = 1; m <= m_max; ++m) {
    std::fill(g.begin(), g.end(), 0.0);
    for (std::size_t c = 0; c < total; ++c) {
      if (f[c] == 0.0) continue;
      const double share = w * f[c];
      for (int i = 0; i < n; ++i) {
        const std::size_t s = stride[static_cast<std::size_t>(i)];
        const std::size_t coord = (c / s) % side;
        if (coord + 1 < side) g[c + s] += share;
        if (coord > 0) g[c - s] += share;
      }
    }
    std::swap(f, g);
    out.push_back(f[origin]);
  }
  return out;
}

double expected_count_discrete(Dimension d, int n_max) {
  if (n_max < 0 || 2 * n_max > kDpMaxSteps) {
    throw InputError("n_max must lie in [0, " + std::to_string(kDpMaxSteps / 2) + "]");
  }
  const auto probs = dp_return_probs(d, 2 * n_max);
  double sum = 0.0;
  for (std::size_t m = 0; m < probs.size(); m += 2) sum += probs[m];
  return sum;
}

double discrete_count_tail(Dimension d, int n_max) {
  const int n = d.value();
  if (n <= 2) return std::numeric_limits<double>::infinity();
  const double p = 0.5 * n;
  return 2.0 * derived_constant(d) * std::pow(n_max + 0.5, 1.0 - p) / (p - 1.0);
}

std::string to_string(Growth g) {
  switch (g) {
    case Growth::sqrt: return "sqrt";
    case Growth::log: return "log";
    case Growth::convergent: return "convergent";
  }
  return "unknown";
}

Growth growth_from_string(const std::string& s) {
  if (s == "sqrt") return Growth::sqrt;
  if (s == "log") return Growth::log;
  if (s == "convergent") return Growth::convergent;
  throw InputError("unknown growth label: " + s);
}

ThresholdVerdict classify_dimension(Dimension d) {
  ThresholdVerdict v;
  v.dim = d.value();
  v.expected_collisions_finite = 0.5 * d.value() > 1.0;
  for (double t : {1e2, 1e3, 1e4}) v.evidence.push_back({t, occupation_increment(d, t, 2.0 * t)});

  // Increments over [T, 2T] scale like T^{1 - d/2}: slope 1/2 per decade for
  // d = 1, flat for d = 2, negative beyond.
  const auto& last = v.evidence.back();
  const auto& prev = v.evidence[v.evidence.size() - 2];
  v.decade_slope = std::log10(last.increment / prev.increment);
  if (v.decade_slope > 0.25) {
    v.growth = Growth::sqrt;
  } else if (v.decade_slope > -0.25) {
    v.growth = Growth::log;
  } else {
    v.growth = Growth::convergent;
  }
  return v;
}

double paper_constant(Dimension d) { return std::pow(d.value() / std::numbers::pi, 0.5 * d.value()); }

double derived_constant(Dimension d) { return std::pow(d.value() / (4.0 * std::numbers::pi), 0.5 * d.value()); }

std::vector<double> default_fit_grid(double t_max) {
  check_t_max(t_max);
  if (t_max < 1e4) throw InputError("fit grid needs t_max >= 1e4");
  std::vector<double> grid;
  const double decades = std::log10(t_max) - 1.0;
  const int points = static_cast<int>(std::ceil(4.0 * decades - 1e-9));
  for (int i = 0; i <= points; ++i) grid.push_back(std::pow(10.0, 1.0 + decades * i / points));
  grid.back() = t_max;
  return grid;
}

AsymptoticFit fit_leading_constant(Dimension d, const std::vector<double>& t_grid) {
  if (t_grid.size() < 4) throw InputError("fit grid needs at least 4 points");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!std::isfinite(t_grid[i]) || t_grid[i] <= 0.0) throw InputError("fit grid points must be positive and finite");
    if (i > 0 && t_grid[i] <= t_grid[i - 1]) throw InputError("fit grid must be strictly increasing");
  }
  if (t_grid.back() < 1e4) throw InputError("fit grid must reach t >= 1e4");

  AsymptoticFit fit;
  fit.dim = d.value();
  fit.t_grid = t_grid;
  fit.paper_constant = paper_constant(d);
  fit.derived_constant = derived_constant(d);
  for (double t : t_grid) {
    fit.g_values.push_back(std::exp(0.5 * d.value() * std::log(t) + log_collision_prob(t, d)));
  }

  // Least squares for g = c + b/t over the largest points, with x = t0/t
  // so the design stays well scaled at any t0.
  const std::size_t n_fit = 4;
  const std::size_t first = t_grid.size() - n_fit;
  const double t0 = t_grid[first];
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = first; i < t_grid.size(); ++i) {
    const double x = t0 / t_grid[i];
    sx += x;
    sy += fit.g_values[i];
    sxx += x * x;
    sxy += x * fit.g_values[i];
  }
  const double nf = static_cast<double>(n_fit);
  const double slope = (nf * sxy - sx * sy) / (nf * sxx - sx * sx);
  const double c = (sy - slope * sx) / nf;
  if (!(c > 0.0)) throw NumericalError("leading-constant fit produced a nonpositive constant", c, 0.0);
  fit.constant_estimate = c;
  fit.correction = slope * t0 / c;
  fit.ratio_to_paper = c / fit.paper_constant;

  for (double g : fit.g_values) fit.residuals.push_back(g / c - 1.0);
  for (std::size_t i = 2; i < fit.residuals.size(); ++i) {
    if (std::abs(fit.residuals[i]) > std::abs(fit.residuals[i - 1])) {
      std::ostringstream msg;
      msg << "fit residuals stopped decreasing at t = " << t_grid[i];
      throw NumericalError(msg.str(), c, std::abs(fit.residuals[i]));
    }
  }
  return fit;
}

double central_binomial_ratio(int k) {
  if (k < 0) throw InputError("moment index must be nonnegative");
  if (k <= 33) {
    // C(2k, k) built up exactly; every intermediate is itself a binomial.
    __extension__ typedef unsigned __int128 wide;
    wide c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned>(k + i) / static_cast<unsigned>(i);
    return std::ldexp(static_cast<double>(c), -2 * k);
  }
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r *= (2.0L * i - 1.0L) / (2.0L * i);
  return static_cast<double>(r);
}

CosineMoment cosine_moment(int k) {
  if (k < 0) throw InputError("moment index must be nonnegative");
  QuadratureOptions opts;
  opts.abs_tol = 1e-15;
  opts.rel_tol = 0.0;
  auto power = [k](double x) { return std::pow(std::cos(x), 2 * k); };
  CosineMoment m;
  m.k = k;
  m.quadrature = integrate(power, 0.0, std::numbers::pi, opts).value / std::numbers::pi;
  m.full_period = integrate(power, -std::numbers::pi, std::numbers::pi, opts).value / std::numbers::pi;
  m.exact = central_binomial_ratio(k);
  if (std::abs(m.quadrature - m.exact) > 1e-12) {
    throw NumericalError("cosine moment quadrature disagrees with C(2k,k)/4^k at k = " + std::to_string(k),
                         m.quadrature, std::abs(m.quadrature - m.exact));
  }
  return m;
}

}  // namespace rwcollide

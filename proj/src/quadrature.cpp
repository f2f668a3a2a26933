#include "rwcollide/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <tuple>
#include <vector>

#include "rwcollide/errors.hpp"

namespace rwcollide {

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double a, b, value, err;
  bool roundoff;  // err is the rounding floor; bisection cannot improve it
};

struct ByError {
  bool operator()(const Piece& l, const Piece& r) const { return l.err < r.err; }
};

Piece qk15(const std::function<double(double)>& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  double f1[7], f2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double ahalf = std::abs(half);
  resk *= half;
  resabs *= ahalf;
  resasc *= ahalf;
  double err = std::abs((resk - resg * half));
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  bool roundoff = false;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps) && 50.0 * eps * resabs >= err) {
    err = 50.0 * eps * resabs;
    roundoff = true;
  }
  return {a, b, resk, err, roundoff};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  if (!std::isfinite(a) || !std::isfinite(b) || b < a) throw InputError("integration range must be finite with a <= b");
  QuadratureResult out;
  out.t_range = {a, b};
  if (a == b) return out;

  std::priority_queue<Piece, std::vector<Piece>, ByError> pending;
  std::vector<Piece> settled;  // rounding-limited pieces
  int subdivisions = 1;
  double value = 0.0;
  double active_err = 0.0;  // error still reducible by bisection
  auto admit = [&](const Piece& p) {
    value += p.value;
    if (p.roundoff) {
      settled.push_back(p);
    } else {
      active_err += p.err;
      pending.push(p);
    }
  };
  admit(qk15(f, a, b));

  auto totals = [&]() {
    std::vector<Piece> all = settled;
    auto copy = pending;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    // Fixed left-to-right summation order.
    std::sort(all.begin(), all.end(), [](const Piece& l, const Piece& r) { return l.a < r.a; });
    double v = 0.0, active = 0.0, total_err = 0.0;
    for (const auto& p : all) {
      v += p.value;
      total_err += p.err;
      if (!p.roundoff) active += p.err;
    }
    return std::tuple{v, active, total_err};
  };

  while (!pending.empty() && active_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
    if (subdivisions >= opts.max_subdivisions) {
      std::ostringstream msg;
      msg << "quadrature budget of " << opts.max_subdivisions << " subdivisions exhausted on [" << a << ", " << b
          << "]: value " << value << ", error estimate " << active_err;
      throw NumericalError(msg.str(), value, active_err);
    }
    Piece worst = pending.top();
    pending.pop();
    value -= worst.value;
    active_err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NumericalError("quadrature interval collapsed to double resolution", value + worst.value,
                           active_err + worst.err);
    }
    admit(qk15(f, worst.a, mid));
    admit(qk15(f, mid, worst.b));
    ++subdivisions;
    // Running totals drift with rounding; recompute exactly every so often.
    if (subdivisions % 64 == 0) {
      double ignored;
      std::tie(value, active_err, ignored) = totals();
    }
  }
  double ignored;
  std::tie(out.value, ignored, out.err_estimate) = totals();
  out.subdivisions = subdivisions;
  return out;
}

}  // namespace rwcollide

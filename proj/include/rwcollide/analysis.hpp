#pragma once

// Expectation integrals of the collision probability, exact discrete return
// probabilities by lattice dynamic programming, the recurrence/transience
// threshold, and the leading constant of P(D(t) = 0) ~ C t^{-d/2}.

#include <string>
#include <vector>

#include "rwcollide/lattice.hpp"
#include "rwcollide/quadrature.hpp"

namespace rwcollide {

/// Integral of P(D(t)=0) over [0, t_max], plus for d >= 3 the analytic tail
/// beyond t_max (leading term and first correction of the kernel asymptotic).
struct OccupationResult {
  int dim = 1;
  QuadratureResult quadrature;
  bool has_tail = false;
  double tail = 0.0;
  double tail_remainder = 0.0;  // magnitude of the correction term, used as the tail's error bar

  double total() const noexcept { return quadrature.value + tail; }
  friend bool operator==(const OccupationResult&, const OccupationResult&) = default;
};

OccupationResult expected_occupation(Dimension d, double t_max);

/// (t, integral_0^t P(D(s)=0) ds) at decade breakpoints up to t_max; the last
/// row is t_max itself.
struct CurvePoint {
  double t;
  double value;
};
std::vector<CurvePoint> occupation_curve(Dimension d, double t_max);

/// Window integral of P(D(t)=0) over [a, b] to relative tolerance 1e-10.
double occupation_increment(Dimension d, double a, double b);

/// Limits of the exact return-probability DP.
inline constexpr int kDpMaxDimension = 4;
inline constexpr int kDpMaxSteps = 2000;

/// P(S_m = 0) for the simple walk on Z^d, m = 0..m_max. Each coordinate's
/// 1-d return probability comes from a line DP; coordinates are combined by
/// conditioning on how many of the m steps each coordinate received.
std::vector<double> dp_return_probs(Dimension d, int m_max);
double dp_return_prob(Dimension d, int m);

/// Brute-force P(S_m = 0), m = 0..m_max, by repeated convolution of the step
/// kernel over a full d-dimensional box. Small sizes only.
std::vector<double> box_return_probs(Dimension d, int m_max);

/// sum_{n=0}^{n_max} P(S_{2n} = 0): the exact truncated expected number of
/// discrete-time collisions.
double expected_count_discrete(Dimension d, int n_max);

/// Estimate of sum_{n > n_max} P(S_{2n} = 0) from the local limit
/// 2 (d/(4 pi n))^{d/2}. Infinite for d <= 2.
double discrete_count_tail(Dimension d, int n_max);

enum class Growth { sqrt, log, convergent };
std::string to_string(Growth g);
Growth growth_from_string(const std::string& s);

struct WindowIncrement {
  double t;          // window is [t, 2t]
  double increment;  // integral of P(D(s)=0) over the window

  friend bool operator==(const WindowIncrement&, const WindowIncrement&) = default;
};

struct ThresholdVerdict {
  int dim = 1;
  bool expected_collisions_finite = false;  // p-series rule on exponent d/2
  Growth growth = Growth::sqrt;             // read off the numerical evidence
  double decade_slope = 0.0;                // log10 of the last decade ratio of increments
  std::vector<WindowIncrement> evidence;

  bool evidence_agrees() const noexcept {
    return expected_collisions_finite == (growth == Growth::convergent);
  }
  friend bool operator==(const ThresholdVerdict&, const ThresholdVerdict&) = default;
};

ThresholdVerdict classify_dimension(Dimension d);

/// (d/pi)^{d/2}, the constant as originally stated.
double paper_constant(Dimension d);
/// (d/(4 pi))^{d/2}, the limit implied by e^{-z} I_0(z) ~ (2 pi z)^{-1/2} at z = 2t/d.
double derived_constant(Dimension d);

struct AsymptoticFit {
  int dim = 1;
  double constant_estimate = 0.0;
  double correction = 0.0;  // a in g(t) ~ c (1 + a/t)
  double paper_constant = 0.0;
  double derived_constant = 0.0;
  double ratio_to_paper = 0.0;
  std::vector<double> t_grid;
  std::vector<double> g_values;   // t^{d/2} P(D(t)=0)
  std::vector<double> residuals;  // g(t)/c - 1

  friend bool operator==(const AsymptoticFit&, const AsymptoticFit&) = default;
};

/// Log-spaced grid from 10 to t_max, four points per decade.
std::vector<double> default_fit_grid(double t_max);

/// Extrapolates lim t^{d/2} P(D(t)=0) by fitting c (1 + a/t) to the four
/// largest grid points. Throws InputError on a bad grid and NumericalError
/// when |residuals| fail to decrease along the grid.
AsymptoticFit fit_leading_constant(Dimension d, const std::vector<double>& t_grid);

struct CosineMoment {
  int k = 0;
  double quadrature = 0.0;   // (1/pi) integral_0^pi cos^{2k}
  double exact = 0.0;        // C(2k, k) 2^{-2k}
  double full_period = 0.0;  // (1/pi) integral_{-pi}^{pi} cos^{2k}
};

/// Evaluates both sides of (1/pi) int_0^pi cos^{2k} = C(2k,k) 4^{-k} and
/// throws NumericalError if they differ by more than 1e-12.
CosineMoment cosine_moment(int k);

/// C(2k, k) 4^{-k}; exact integer binomial for k <= 33.
double central_binomial_ratio(int k);

}  // namespace rwcollide

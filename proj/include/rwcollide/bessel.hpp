#pragma once

// The scaled modified Bessel kernel e^{-z} I_0(z) and the Poissonized
// return/collision probabilities built on it. Raw I_0 is never formed.

#include "rwcollide/lattice.hpp"

namespace rwcollide {

enum class BesselRegime { series, asymptotic };

struct ScaledBesselValue {
  double value = 1.0;      // e^{-z} I_0(z), in (0, 1]
  BesselRegime regime = BesselRegime::series;
  double err_bound = 0.0;  // bound on |value - e^{-z} I_0(z)|
};

/// Below this argument the power series is summed; above it the large-z expansion.
inline constexpr double kBesselRegimeSwitch = 30.0;

ScaledBesselValue i0_scaled(double z);

/// The two regimes, callable on either side of the switch.
ScaledBesselValue i0_scaled_series(double z);
ScaledBesselValue i0_scaled_asymptotic(double z);

/// (1/pi) * integral_0^pi exp(z (cos(theta) - 1)) dtheta by adaptive
/// quadrature to absolute tolerance 1e-14. Independent check on i0_scaled.
double i0_quadrature(double z);

struct Probability {
  double value = 0.0;
  double err_bound = 0.0;
  bool underflow = false;  // result fell below the smallest normal double
};

/// P(D_j(t) = 0) = e^{-2t/d} I_0(2t/d) for one coordinate of the difference walk.
Probability coordinate_return_prob(double t, Dimension d);

/// Direct truncation at k = K of sum_k Poisson(2t/d; 2k) * C(2k,k) 2^{-2k}.
/// Test oracle only.
Probability series_prob_oracle(double t, Dimension d, int K);

/// Upper bound on the terms omitted by series_prob_oracle(t, d, K).
double series_prob_tail_bound(double t, Dimension d, int K);

/// P(D(t) = 0) = P(D_j(t) = 0)^d. Exponentiates in log space for large d*t.
Probability collision_prob(double t, Dimension d);

/// log P(D(t) = 0); finite even where the probability itself underflows.
double log_collision_prob(double t, Dimension d);

}  // namespace rwcollide

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "rwcollide/bessel.hpp"
#include "rwcollide/errors.hpp"

using namespace rwcollide;

namespace {

// e^{-z} sum_{k<terms} (z/2)^{2k} / (k!)^2, each term from lgamma.
double direct_series(double z, int terms) {
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    sum += std::exp(-z + 2.0 * k * std::log(0.5 * z) - 2.0 * std::lgamma(k + 1.0));
  }
  return z == 0.0 ? 1.0 : sum;
}

}  // namespace

TEST_CASE("i0_scaled at fixed points") {
  CHECK(i0_scaled(0.0).value == 1.0);
  CHECK(i0_scaled(0.0).err_bound == 0.0);
  CHECK(i0_scaled(1.0).value == doctest::Approx(direct_series(1.0, 40)).epsilon(1e-12));
  CHECK(i0_scaled(1.0).regime == BesselRegime::series);
  CHECK(i0_scaled(400.0).regime == BesselRegime::asymptotic);
  CHECK(i0_scaled(400.0).value == doctest::Approx(i0_quadrature(400.0)).epsilon(1e-10));
}

TEST_CASE("i0_scaled rejects bad arguments") {
  CHECK_THROWS_AS(i0_scaled(-1e-9), InputError);
  CHECK_THROWS_AS(i0_scaled(std::numeric_limits<double>::infinity()), InputError);
  CHECK_THROWS_AS(i0_scaled(std::nan("")), InputError);
  CHECK_THROWS_AS(i0_quadrature(-1.0), InputError);
  CHECK_THROWS_AS(i0_scaled_asymptotic(0.0), InputError);
}

TEST_CASE("i0_quadrature") {
  CHECK(i0_quadrature(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(i0_quadrature(1.0) - i0_scaled(1.0).value) < 1e-12);
  const double z = 1e4;
  CHECK(i0_quadrature(z) == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi * z)).epsilon(0.01));
}

TEST_CASE("kernel agrees with quadrature on the reference grid") {
  for (double z : {0.0, 0.1, 1.0, 5.0, 30.0, 100.0, 1000.0}) {
    CAPTURE(z);
    CHECK(i0_scaled(z).value == doctest::Approx(i0_quadrature(z)).epsilon(1e-10));
  }
}

TEST_CASE("kernel agrees with quadrature at random arguments") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> log_z(-3.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const double z = std::pow(10.0, log_z(rng));
    CAPTURE(z);
    const auto v = i0_scaled(z);
    CHECK(v.value == doctest::Approx(i0_quadrature(z)).epsilon(1e-10));
    CHECK(v.err_bound <= 1e-12 * v.value);
    CHECK(v.value > 0.0);
    CHECK(v.value < 1.0);
  }
}

TEST_CASE("regimes agree at the switch point") {
  const double z = kBesselRegimeSwitch;
  CHECK(i0_scaled_series(z).value == doctest::Approx(i0_scaled_asymptotic(z).value).epsilon(1e-12));
  // Both expansions remain accurate a little either side.
  for (double dz : {-5.0, 5.0, 20.0}) {
    CHECK(i0_scaled_series(z + dz).value == doctest::Approx(i0_scaled_asymptotic(z + dz).value).epsilon(1e-12));
  }
}

TEST_CASE("kernel is strictly decreasing and bounded by one") {
  double prev = i0_scaled(0.0).value;
  for (int i = 1; i <= 20000; ++i) {
    const double z = 0.01 * i * (1.0 + i / 2000.0);
    const double v = i0_scaled(z).value;
    REQUIRE(v < prev);
    REQUIRE(v > 0.0);
    prev = v;
  }
}

TEST_CASE("large-argument law 2 pi z value^2 -> 1") {
  const double z = 1e6;
  const double v = i0_scaled(z).value;
  CHECK(std::abs(2.0 * std::numbers::pi * z * v * v - 1.0) < 1e-3);
}

TEST_CASE("coordinate_return_prob") {
  CHECK(coordinate_return_prob(0.0, Dimension(3)).value == 1.0);
  // d = 2, t = 1 puts the kernel at z = 1.
  CHECK(coordinate_return_prob(1.0, Dimension(2)).value == doctest::Approx(direct_series(1.0, 40)).epsilon(1e-13));
  const double p = coordinate_return_prob(1.0, Dimension(1)).value;
  CHECK(p == doctest::Approx(0.3085).epsilon(1e-4));
  CHECK(std::abs(p - series_prob_oracle(1.0, Dimension(1), 30).value) < 1e-12);
  CHECK_THROWS_AS(coordinate_return_prob(-1.0, Dimension(1)), InputError);
}

TEST_CASE("series_prob_oracle") {
  for (int k : {0, 1, 7}) CHECK(series_prob_oracle(0.0, Dimension(2), k).value == 1.0);
  CHECK(std::abs(series_prob_oracle(5.0, Dimension(3), 60).value - i0_scaled(10.0 / 3.0).value) < 1e-12);
  CHECK(series_prob_tail_bound(5.0, Dimension(3), 60) < 1e-14);
  CHECK_THROWS_AS(series_prob_oracle(1.0, Dimension(1), -1), InputError);

  SUBCASE("tail bound really bounds the omitted mass") {
    for (int k = 0; k < 25; ++k) {
      const double t = 4.0;
      const Dimension d(1);
      const double gap = series_prob_oracle(t, d, 80).value - series_prob_oracle(t, d, k).value;
      CHECK(gap <= series_prob_tail_bound(t, d, k) * (1.0 + 1e-9) + 1e-16);
    }
  }
  SUBCASE("matches the kernel across the acceptance grid") {
    for (int dim : {1, 2, 3}) {
      for (double t : {0.5, 1.0, 5.0, 20.0}) {
        int k = 0;
        while (series_prob_tail_bound(t, Dimension(dim), k) >= 1e-14) ++k;
        CHECK(std::abs(series_prob_oracle(t, Dimension(dim), k).value -
                       coordinate_return_prob(t, Dimension(dim)).value) < 1e-12);
      }
    }
  }
}

TEST_CASE("collision_prob") {
  for (int d = 1; d <= kMaxDimension; ++d) CHECK(collision_prob(0.0, Dimension(d)).value == 1.0);
  for (double t : {0.3, 2.0, 50.0}) {
    CHECK(collision_prob(t, Dimension(1)).value == coordinate_return_prob(t, Dimension(1)).value);
  }
  const double q = i0_scaled(20.0 / 3.0).value;
  CHECK(collision_prob(10.0, Dimension(3)).value == doctest::Approx(q * q * q).epsilon(1e-14));

  SUBCASE("log-space path agrees with the direct power") {
    const double t = 2000.0;
    const Dimension d(4);
    const double p = coordinate_return_prob(t, d).value;
    CHECK(collision_prob(t, d).value == doctest::Approx(std::pow(p, 4)).epsilon(1e-13));
    CHECK(std::exp(log_collision_prob(t, d)) == doctest::Approx(collision_prob(t, d).value).epsilon(1e-13));
  }
  SUBCASE("no spurious underflow at d = 2, t = 1e6") {
    const auto p = collision_prob(1e6, Dimension(2));
    CHECK(p.value > 0.0);
    CHECK_FALSE(p.underflow);
  }
  SUBCASE("true underflow is flagged") {
    const auto p = collision_prob(1e300, Dimension(16));
    CHECK(p.underflow);
    CHECK(std::isfinite(log_collision_prob(1e300, Dimension(16))));
  }
}

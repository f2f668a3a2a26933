#include "rwcollide/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "rwcollide/analysis.hpp"
#include "rwcollide/bessel.hpp"
#include "rwcollide/errors.hpp"
#include "rwcollide/montecarlo.hpp"
#include "rwcollide/walk.hpp"

namespace rwcollide {

namespace {

constexpr std::uint64_t kVerifySeed = 20240611;

std::string describe(double got, double want) {
  std::ostringstream s;
  s.precision(15);
  s << "got " << got << ", expected " << want;
  return s.str();
}

CheckResult close_rel(std::string name, double got, double want, double rel) {
  const double scale = std::max(std::abs(want), 1e-300);
  return {std::move(name), std::abs(got - want) <= rel * scale, describe(got, want)};
}

CheckResult close_abs(std::string name, double got, double want, double tol) {
  return {std::move(name), std::abs(got - want) <= tol, describe(got, want)};
}

CheckResult within_sigma(std::string name, const Estimate& e, double want, double k = 3.0) {
  std::ostringstream s;
  s.precision(10);
  s << "mean " << e.mean << " +- " << e.std_error << ", expected " << want;
  return {std::move(name), std::abs(e.mean - want) <= k * e.std_error, s.str()};
}

SuiteReport kernel_suite(unsigned) {
  SuiteReport r{"kernel", {}};
  for (double z : {0.0, 0.1, 1.0, 5.0, 30.0, 100.0, 1000.0}) {
    r.checks.push_back(close_rel("i0_scaled vs quadrature at z=" + std::to_string(z), i0_scaled(z).value,
                                 i0_quadrature(z), 1e-10));
  }
  const double zs = kBesselRegimeSwitch;
  r.checks.push_back(close_rel("regime continuity at the switch", i0_scaled_series(zs).value,
                               i0_scaled_asymptotic(zs).value, 1e-12));
  bool decreasing = true;
  double prev = i0_scaled(0.0).value;
  for (int i = 1; i <= 4000; ++i) {
    const double v = i0_scaled(0.05 * i).value;
    decreasing = decreasing && v < prev && v > 0.0;
    prev = v;
  }
  r.checks.push_back({"strictly decreasing and positive on [0, 200]", decreasing, ""});
  const double big = 1e6;
  const double v = i0_scaled(big).value;
  r.checks.push_back(close_abs("2 pi z value^2 -> 1 at z=1e6", 2.0 * std::numbers::pi * big * v * v, 1.0, 1e-3));
  return r;
}

SuiteReport series_suite(unsigned) {
  SuiteReport r{"series", {}};
  for (int dim : {1, 2, 3}) {
    for (double t : {0.5, 1.0, 5.0, 20.0}) {
      const Dimension d(dim);
      int k = 0;
      while (series_prob_tail_bound(t, d, k) >= 1e-14) ++k;
      std::ostringstream name;
      name << "Poisson x binomial sum equals kernel at d=" << dim << " t=" << t;
      r.checks.push_back(
          close_abs(name.str(), series_prob_oracle(t, d, k).value, coordinate_return_prob(t, d).value, 1e-12));
    }
  }
  return r;
}

SuiteReport cosine_suite(unsigned) {
  SuiteReport r{"cosine", {}};
  bool ok = true;
  std::string detail;
  for (int k = 0; k <= 30; ++k) {
    try {
      const auto m = cosine_moment(k);
      if (std::abs(m.full_period / m.quadrature - 2.0) > 1e-10) {
        ok = false;
        detail = "full-period ratio off at k=" + std::to_string(k);
      }
    } catch (const NumericalError& e) {
      ok = false;
      detail = e.what();
    }
  }
  r.checks.push_back({"half-period moments equal C(2k,k)/4^k and full period doubles them, k<=30", ok, detail});
  return r;
}

SuiteReport dp_suite(unsigned) {
  SuiteReport r{"dp", {}};
  r.checks.push_back(close_abs("P(S_4=0) on Z^2", dp_return_prob(Dimension(2), 4), 9.0 / 64.0, 1e-15));
  for (int dim = 1; dim <= 3; ++dim) {
    const Dimension d(dim);
    const auto fast = dp_return_probs(d, 12);
    const auto box = box_return_probs(d, 12);
    double worst = 0.0;
    bool odd_zero = true;
    for (std::size_t m = 0; m < fast.size(); ++m) {
      worst = std::max(worst, std::abs(fast[m] - box[m]));
      if (m % 2 == 1) odd_zero = odd_zero && fast[m] == 0.0 && box[m] == 0.0;
    }
    r.checks.push_back(close_abs("coordinate-split DP matches box DP, d=" + std::to_string(dim), worst, 0.0, 1e-15));
    r.checks.push_back({"odd-step returns vanish, d=" + std::to_string(dim), odd_zero, ""});
  }
  return r;
}

SuiteReport threshold_suite(unsigned) {
  SuiteReport r{"threshold", {}};
  for (int dim = 1; dim <= 6; ++dim) {
    const auto v = classify_dimension(Dimension(dim));
    std::ostringstream s;
    s << "finite=" << v.expected_collisions_finite << " growth=" << to_string(v.growth)
      << " slope=" << v.decade_slope;
    const bool rule = v.expected_collisions_finite == (dim >= 3);
    const Growth want = dim == 1 ? Growth::sqrt : dim == 2 ? Growth::log : Growth::convergent;
    r.checks.push_back({"verdict and growth for d=" + std::to_string(dim), rule && v.growth == want, s.str()});
  }
  return r;
}

SuiteReport constant_suite(unsigned) {
  SuiteReport r{"constant", {}};
  const auto grid = default_fit_grid(1e6);
  for (int dim = 1; dim <= 4; ++dim) {
    const Dimension d(dim);
    const auto fit = fit_leading_constant(d, grid);
    r.checks.push_back(close_rel("constant matches (d/4pi)^{d/2}, d=" + std::to_string(dim), fit.constant_estimate,
                                 derived_constant(d), 1e-2));
    r.checks.push_back(close_rel("ratio to (d/pi)^{d/2} is 2^-d, d=" + std::to_string(dim), fit.ratio_to_paper,
                                 std::ldexp(1.0, -dim), 2e-2));
  }
  return r;
}

SuiteReport occupation_suite(unsigned) {
  SuiteReport r{"occupation", {}};
  const Dimension d(3);
  const double count = expected_count_discrete(d, 1000) + discrete_count_tail(d, 1000);
  const auto occ = expected_occupation(d, 1e6);
  r.checks.push_back(close_abs("discrete count equals twice occupation, d=3", count, 2.0 * occ.total(), 1e-2));
  r.checks.push_back(close_abs("total discrete count near 1.5164, d=3", count, 1.516386, 2e-3));
  return r;
}

SuiteReport components_suite(unsigned workers) {
  SuiteReport r{"components", {}};
  // Interval scan over logged trajectories.
  bool ok = true;
  for (std::uint64_t i = 0; i < 200 && ok; ++i) {
    const Dimension d(1 + static_cast<int>(i % 3));
    std::vector<EventLogEntry> log;
    const auto rec = simulate_continuous_pair(d, 40.0, {kVerifySeed, i}, &log);
    std::uint64_t components = 0;
    bool prev = false;
    for (const auto& e : log) {
      const bool eq = e.x == e.y;
      if (eq && !prev) ++components;
      prev = eq;
    }
    ok = components == rec.component_count;
  }
  r.checks.push_back({"component count equals maximal coincidence intervals", ok, ""});

  const Dimension d(3);
  const RunOptions opts{20000, kVerifySeed, workers};
  const auto cont = mc_expected_count(d, CountMode::continuous, 100.0, opts);
  // Expected components up to time T: sum_k P(S_k = 0) P(Poisson(2T) >= k).
  const auto probs = dp_return_probs(d, 400);
  double want = 0.0;
  double survival = 1.0, mass = std::exp(-200.0);
  for (std::size_t k = 0; k < probs.size(); ++k) {
    want += probs[k] * survival;
    survival -= mass;
    mass *= 200.0 / static_cast<double>(k + 1);
  }
  r.checks.push_back(within_sigma("continuous component count vs DP, d=3 T=100", cont, want));
  return r;
}

SuiteReport thinning_suite(unsigned workers) {
  SuiteReport r{"thinning", {}};
  for (int dim : {2, 3}) {
    const auto rep = thinning_test(Dimension(dim), 30.0, {20000, kVerifySeed, workers});
    std::ostringstream s;
    s << "means:";
    bool means_ok = true;
    for (const auto& c : rep.coordinates) {
      s << ' ' << c.mean;
      means_ok = means_ok && std::abs(c.mean - rep.expected_mean) <= 0.01 * rep.expected_mean;
    }
    r.checks.push_back({"Poisson fit and independence, d=" + std::to_string(dim), rep.passed, s.str()});
    r.checks.push_back({"coordinate means within 1% of 2h/d, d=" + std::to_string(dim), means_ok, s.str()});
  }
  return r;
}

SuiteReport montecarlo_suite(unsigned workers) {
  SuiteReport r{"montecarlo", {}};
  for (int dim : {1, 2, 3}) {
    for (double t : {1.0, 5.0, 10.0}) {
      const Dimension d(dim);
      const auto e = mc_collision_prob(d, t, {50000, kVerifySeed + static_cast<std::uint64_t>(dim), workers});
      std::ostringstream name;
      name << "collision frequency vs kernel at d=" << dim << " t=" << t;
      r.checks.push_back(within_sigma(name.str(), e, collision_prob(t, d).value));
    }
  }
  return r;
}

using SuiteFn = std::function<SuiteReport(unsigned)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"kernel", kernel_suite},         {"series", series_suite},         {"cosine", cosine_suite},
      {"dp", dp_suite},                 {"threshold", threshold_suite},   {"constant", constant_suite},
      {"occupation", occupation_suite}, {"components", components_suite}, {"thinning", thinning_suite},
      {"montecarlo", montecarlo_suite},
  };
  return suites;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteReport> run_verify(const std::string& suite, unsigned workers) {
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : registry()) {
    if (suite == "all" || suite == name) out.push_back(fn(workers));
  }
  if (out.empty()) throw InputError("unknown verify suite: " + suite);
  return out;
}

void to_json(nlohmann::json& j, const CheckResult& c) {
  j = nlohmann::json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

void to_json(nlohmann::json& j, const SuiteReport& s) {
  j = nlohmann::json{{"suite", s.suite}, {"passed", s.passed()}, {"checks", s.checks}};
}

}  // namespace rwcollide

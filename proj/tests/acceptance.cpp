// Runs the end-to-end acceptance checks and prints one PASS/FAIL line each.
// Exit status is nonzero if any check fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "rwcollide/analysis.hpp"
#include "rwcollide/bessel.hpp"
#include "rwcollide/montecarlo.hpp"

using namespace rwcollide;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome kernel_accuracy() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double z : {0.0, 0.1, 1.0, 5.0, 30.0, 100.0, 1000.0}) {
    const double q = i0_quadrature(z);
    const double rel = std::abs(i0_scaled(z).value - q) / q;
    worst = std::max(worst, rel);
    o.require(rel <= 1e-10, "z=" + std::to_string(z));
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, "runtime");
  o.detail << "max rel diff " << worst << ", " << elapsed << " s";
  return o;
}

Outcome formula_equivalence() {
  Outcome o;
  double worst = 0.0;
  for (int dim : {1, 2, 3}) {
    for (double t : {0.5, 1.0, 5.0, 20.0}) {
      const Dimension d(dim);
      int k = 0;
      while (series_prob_tail_bound(t, d, k) >= 1e-14) ++k;
      const double diff = std::abs(series_prob_oracle(t, d, k).value - coordinate_return_prob(t, d).value);
      worst = std::max(worst, diff);
      o.require(diff <= 1e-12, "d=" + std::to_string(dim) + " t=" + std::to_string(t));
    }
  }
  o.detail << "max abs diff " << worst;
  return o;
}

Outcome monte_carlo_vs_kernel() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::uint64_t cell = 0;
  for (int dim : {1, 2, 3}) {
    for (double t : {1.0, 5.0, 10.0}) {
      const Dimension d(dim);
      const auto e = mc_collision_prob(d, t, {1000000, kSeed + cell++, 1});
      const double z = std::abs(e.mean - collision_prob(t, d).value) / e.std_error;
      worst = std::max(worst, z);
      o.require(z <= 3.0, "d=" + std::to_string(dim) + " t=" + std::to_string(t));
    }
  }
  o.detail << "max |z| " << worst << ", " << seconds_since(start) << " s";
  return o;
}

Outcome discrete_continuous_equivalence() {
  Outcome o;
  const Dimension d(3);
  const double discrete = expected_count_discrete(d, 1000) + discrete_count_tail(d, 1000);
  const double horizon = 1000.0;
  const auto mc = mc_expected_count(d, CountMode::continuous, horizon, {100000, kSeed, 1});
  // Visits after time T: 2 * integral_T^inf c t^{-3/2} dt = 4 c / sqrt(T).
  const double mc_tail = 4.0 * derived_constant(d) / std::sqrt(horizon);
  const double z = std::abs(mc.mean + mc_tail - discrete) / mc.std_error;
  const double occupation = 2.0 * expected_occupation(d, 1e6).total();
  o.require(z <= 3.0, "Monte Carlo");
  o.require(std::abs(discrete - occupation) <= 1e-2, "occupation identity");
  o.detail << "DP+tail " << discrete << ", MC+tail " << mc.mean + mc_tail << " +- " << mc.std_error << " (|z| " << z
           << "), 2*occupation " << occupation;
  return o;
}

Outcome threshold() {
  Outcome o;
  const auto v1 = classify_dimension(Dimension(1));
  o.require(!v1.expected_collisions_finite && v1.growth == Growth::sqrt, "d=1 verdict");
  for (std::size_t i = 1; i < v1.evidence.size(); ++i) {
    const double ratio = v1.evidence[i].increment / v1.evidence[i - 1].increment;
    o.require(std::abs(ratio / std::sqrt(10.0) - 1.0) <= 0.05, "d=1 decade ratio");
  }
  const auto v2 = classify_dimension(Dimension(2));
  o.require(!v2.expected_collisions_finite && v2.growth == Growth::log, "d=2 verdict");
  const double ln2 = std::log(2.0) / (2.0 * std::numbers::pi);
  for (const auto& w : v2.evidence) o.require(std::abs(w.increment / ln2 - 1.0) <= 0.05, "d=2 increment");
  for (int dim = 3; dim <= 6; ++dim) {
    const auto v = classify_dimension(Dimension(dim));
    o.require(v.expected_collisions_finite && v.growth == Growth::convergent, "d=" + std::to_string(dim) + " verdict");
    for (std::size_t i = 1; i < v.evidence.size(); ++i) {
      o.require(v.evidence[i].increment < v.evidence[i - 1].increment, "d=" + std::to_string(dim) + " vanishing");
    }
  }
  o.detail << "d=2 last increment " << v2.evidence.back().increment << " vs " << ln2;
  return o;
}

Outcome constant_adjudication() {
  Outcome o;
  const auto grid = default_fit_grid(1e6);
  for (int dim = 1; dim <= 4; ++dim) {
    const Dimension d(dim);
    try {
      const auto fit = fit_leading_constant(d, grid);
      const double want = std::pow(dim / (4.0 * std::numbers::pi), 0.5 * dim);
      o.require(std::abs(fit.constant_estimate / want - 1.0) <= 0.01, "d=" + std::to_string(dim) + " constant");
      o.require(std::abs(fit.ratio_to_paper / std::ldexp(1.0, -dim) - 1.0) <= 0.02,
                "d=" + std::to_string(dim) + " ratio");
      o.detail << " d=" << dim << " ratio " << fit.ratio_to_paper;
    } catch (const std::exception& e) {
      o.require(false, std::string("d=") + std::to_string(dim) + " " + e.what());
    }
  }
  double worst = 0.0;
  for (int k = 0; k <= 30; ++k) {
    const auto m = cosine_moment(k);
    worst = std::max(worst, std::abs(m.full_period / m.quadrature - 2.0));
  }
  o.require(worst <= 1e-10, "full-period factor");
  o.detail << "; full-period factor 2 to " << worst;
  return o;
}

Outcome cosine_moments() {
  Outcome o;
  double worst = 0.0;
  for (int k = 0; k <= 30; ++k) {
    try {
      const auto m = cosine_moment(k);
      worst = std::max(worst, std::abs(m.quadrature - m.exact));
    } catch (const std::exception& e) {
      o.require(false, "k=" + std::to_string(k) + " " + e.what());
    }
  }
  o.require(worst <= 1e-12, "tolerance");
  o.detail << "max abs diff " << worst;
  return o;
}

Outcome thinning() {
  Outcome o;
  for (int dim : {2, 3}) {
    const auto r = thinning_test(Dimension(dim), 30.0, {100000, kSeed + static_cast<std::uint64_t>(dim), 1});
    o.require(r.passed, "d=" + std::to_string(dim) + " tests");
    for (const auto& c : r.coordinates) {
      o.require(std::abs(c.mean / r.expected_mean - 1.0) <= 0.01, "d=" + std::to_string(dim) + " mean");
      o.detail << " d=" << dim << " axis " << c.axis << " mean " << c.mean;
    }
  }
  return o;
}

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = RWCOLLIDE_CLI_PATH " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> commands = {
      "prob --dim 3 --time 10",
      "expect --dim 3 --t-max 1e6",
      "expect --dim 2 --t-max 1e4 --format csv",
      "classify --dim 2",
      "fit --dim 1 --t-max 1e6",
      "fit --dim 3 --t-max 1e6 --format csv",
      "simulate --dim 3 --mode continuous --horizon 100 --trials 5000 --seed 7",
      "simulate --dim 2 --mode discrete --steps 200 --trials 5000 --seed 7",
      "verify --suite all",
  };
  for (const auto& c : commands) {
    const auto a = run_cli(c + " --deterministic");
    const auto b = run_cli(c + " --deterministic");
    o.require(a.status == 0 && !a.out.empty() && a.out == b.out, c);
  }
  for (const std::string mode : {"continuous", "discrete"}) {
    const std::string base = "simulate --dim 3 --mode " + mode + " --horizon 100 --trials 5000 --seed 9 --deterministic";
    const auto one = run_cli(base + " --workers 1");
    for (int w : {4, 8}) {
      o.require(one.status == 0 && run_cli(base + " --workers " + std::to_string(w)).out == one.out,
                mode + " workers=" + std::to_string(w));
    }
  }
  const auto ref = mc_collision_prob(Dimension(2), 5.0, {20000, kSeed, 1});
  for (unsigned w : {4u, 8u}) {
    o.require(mc_collision_prob(Dimension(2), 5.0, {20000, kSeed, w}) == ref, "library workers=" + std::to_string(w));
  }
  o.detail << commands.size() << " commands repeated, workers {1,4,8} compared";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"kernel accuracy", kernel_accuracy},
      {"series formula equivalence", formula_equivalence},
      {"Monte Carlo vs kernel", monte_carlo_vs_kernel},
      {"discrete/continuous count equivalence", discrete_continuous_equivalence},
      {"recurrence threshold", threshold},
      {"leading constant", constant_adjudication},
      {"cosine moments", cosine_moments},
      {"Poisson thinning", thinning},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    failures += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail.str()
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

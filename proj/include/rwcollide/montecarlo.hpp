#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "rwcollide/lattice.hpp"
#include "rwcollide/walk.hpp"

namespace rwcollide {

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(trials)
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

struct RunOptions {
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  unsigned workers = 1;
};

enum class CountMode { discrete, continuous };
std::string to_string(CountMode m);
CountMode count_mode_from_string(const std::string& s);

/// Evaluates trial(i) for i in [0, trials) on `workers` threads and returns
/// the results in trial-index order. Each trial owns its random stream, so
/// the output does not depend on the worker count.
template <class T, class Trial>
std::vector<T> run_trials(std::uint64_t trials, unsigned workers, Trial trial) {
  std::vector<T> out(trials);
  workers = std::max(1u, workers);
  const std::uint64_t chunk = (trials + workers - 1) / workers;
  auto body = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) out[i] = trial(i);
  };
  if (workers == 1 || trials < 2) {
    body(0, trials);
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(trials, w * chunk);
    const std::uint64_t end = std::min(trials, begin + chunk);
    if (begin < end) pool.emplace_back(body, begin, end);
  }
  return out;
}

/// Mean and standard error of `samples`, reduced in index order.
Estimate summarize(const std::vector<double>& samples, std::uint64_t master_seed);

/// Fraction of trials with X(t) = Y(t) under the continuous pair simulation.
/// Trial i uses SeedSpec{master_seed, i}.
Estimate mc_collision_prob(Dimension d, double t, const RunOptions& opts);

/// Mean collision count: discrete_count for discrete mode (horizon is a step
/// count and must be integral), component_count for continuous mode.
Estimate mc_expected_count(Dimension d, CountMode mode, double horizon, const RunOptions& opts);

/// Mean visits to the origin of the embedded difference walk over n_jumps.
Estimate mc_embedded_visits(Dimension d, std::uint64_t n_jumps, const RunOptions& opts);

struct CoordinateFit {
  int axis = 0;
  double mean = 0.0;
  double chi_square = 0.0;
  int dof = 0;
  double threshold = 0.0;  // 0.999 quantile of chi-square(dof)
  bool passed = false;
};

struct CorrelationCheck {
  int axis_a = 0;
  int axis_b = 0;
  double correlation = 0.0;
  double threshold = 0.0;  // two-sided 0.999 null quantile, ~3.29/sqrt(trials)
  bool passed = false;
};

struct ThinningReport {
  int dim = 1;
  double horizon = 0.0;
  double expected_mean = 0.0;  // 2 horizon / d
  std::uint64_t trials = 0;
  std::vector<CoordinateFit> coordinates;
  std::vector<CorrelationCheck> correlations;
  bool passed = false;
};

/// Goodness of fit of every coordinate's jump count of D(t) against
/// Poisson(2 horizon / d), plus pairwise independence via sample correlation.
ThinningReport thinning_test(Dimension d, double horizon, const RunOptions& opts);

}  // namespace rwcollide

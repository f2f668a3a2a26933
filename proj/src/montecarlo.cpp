#include "rwcollide/montecarlo.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/poisson.hpp>
#include <cmath>

#include "rwcollide/errors.hpp"

namespace rwcollide {

namespace {

constexpr std::uint64_t kMinTrials = 100;
constexpr std::uint64_t kMinThinningTrials = 1000;

void check_trials(std::uint64_t trials, std::uint64_t minimum) {
  if (trials < minimum) throw InputError("at least " + std::to_string(minimum) + " trials required");
}

double chi_square_poisson(const std::vector<std::uint64_t>& counts, double lambda, int& dof) {
  namespace bm = boost::math;
  const bm::poisson_distribution<double> law(lambda);
  const double n = static_cast<double>(counts.size());

  // Interior bins hold expected mass >= 5; everything outside is pooled into
  // the two end bins.
  std::uint64_t lo = 0;
  while (n * bm::pdf(law, static_cast<double>(lo)) < 5.0 && static_cast<double>(lo) < lambda) ++lo;
  std::uint64_t hi = static_cast<std::uint64_t>(std::ceil(lambda));
  while (n * bm::pdf(law, static_cast<double>(hi + 1)) >= 5.0) ++hi;

  const std::size_t bins = static_cast<std::size_t>(hi - lo + 1);
  std::vector<double> observed(bins, 0.0);
  for (std::uint64_t c : counts) {
    const std::uint64_t clamped = std::clamp(c, lo, hi);
    observed[static_cast<std::size_t>(clamped - lo)] += 1.0;
  }
  double stat = 0.0;
  for (std::size_t b = 0; b < bins; ++b) {
    const double k = static_cast<double>(lo + b);
    double p;
    if (bins == 1) {
      p = 1.0;
    } else if (b == 0) {
      p = bm::cdf(law, k);
    } else if (b + 1 == bins) {
      p = bm::cdf(bm::complement(law, k - 1.0));
    } else {
      p = bm::pdf(law, k);
    }
    const double expected = n * p;
    stat += (observed[b] - expected) * (observed[b] - expected) / expected;
  }
  dof = static_cast<int>(bins) - 1;
  return stat;
}

}  // namespace

std::string to_string(CountMode m) { return m == CountMode::discrete ? "discrete" : "continuous"; }

CountMode count_mode_from_string(const std::string& s) {
  if (s == "discrete") return CountMode::discrete;
  if (s == "continuous") return CountMode::continuous;
  throw InputError("mode must be 'discrete' or 'continuous', got '" + s + "'");
}

Estimate summarize(const std::vector<double>& samples, std::uint64_t master_seed) {
  Estimate e;
  e.trials = samples.size();
  e.master_seed = master_seed;
  if (samples.empty()) return e;
  double sum = 0.0;
  for (double s : samples) sum += s;
  e.mean = sum / static_cast<double>(samples.size());
  if (samples.size() >= 2) {
    double ss = 0.0;
    for (double s : samples) ss += (s - e.mean) * (s - e.mean);
    const double n = static_cast<double>(samples.size());
    e.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return e;
}

Estimate mc_collision_prob(Dimension d, double t, const RunOptions& opts) {
  check_trials(opts.trials, kMinTrials);
  if (!std::isfinite(t) || t < 0.0) throw InputError("time must be finite and nonnegative");
  auto hits = run_trials<double>(opts.trials, opts.workers, [&](std::uint64_t i) {
    return simulate_continuous_pair(d, t, {opts.master_seed, i}).coincident_at_horizon ? 1.0 : 0.0;
  });
  return summarize(hits, opts.master_seed);
}

Estimate mc_expected_count(Dimension d, CountMode mode, double horizon, const RunOptions& opts) {
  check_trials(opts.trials, kMinTrials);
  if (!std::isfinite(horizon) || horizon < 0.0) throw InputError("horizon must be finite and nonnegative");
  std::vector<double> counts;
  if (mode == CountMode::discrete) {
    if (horizon != std::floor(horizon)) throw InputError("discrete horizon must be a whole number of steps");
    const auto steps = static_cast<std::uint64_t>(horizon);
    counts = run_trials<double>(opts.trials, opts.workers, [&](std::uint64_t i) {
      return static_cast<double>(simulate_discrete_pair(d, steps, {opts.master_seed, i}).discrete_count);
    });
  } else {
    counts = run_trials<double>(opts.trials, opts.workers, [&](std::uint64_t i) {
      return static_cast<double>(simulate_continuous_pair(d, horizon, {opts.master_seed, i}).component_count);
    });
  }
  return summarize(counts, opts.master_seed);
}

Estimate mc_embedded_visits(Dimension d, std::uint64_t n_jumps, const RunOptions& opts) {
  check_trials(opts.trials, kMinTrials);
  auto visits = run_trials<double>(opts.trials, opts.workers, [&](std::uint64_t i) {
    return static_cast<double>(embedded_difference_walk(d, n_jumps, {opts.master_seed, i}));
  });
  return summarize(visits, opts.master_seed);
}

ThinningReport thinning_test(Dimension d, double horizon, const RunOptions& opts) {
  check_trials(opts.trials, kMinThinningTrials);
  const int n = d.value();
  ThinningReport report;
  report.dim = n;
  report.horizon = horizon;
  report.trials = opts.trials;
  report.expected_mean = 2.0 * horizon / n;

  auto samples = run_trials<std::vector<std::uint64_t>>(opts.trials, opts.workers, [&](std::uint64_t i) {
    return coordinate_jump_counts(d, horizon, {opts.master_seed, i});
  });

  std::vector<std::vector<std::uint64_t>> per_axis(static_cast<std::size_t>(n));
  for (auto& axis : per_axis) axis.reserve(samples.size());
  for (const auto& s : samples) {
    for (int j = 0; j < n; ++j) per_axis[static_cast<std::size_t>(j)].push_back(s[static_cast<std::size_t>(j)]);
  }

  std::vector<double> means(static_cast<std::size_t>(n), 0.0), sds(static_cast<std::size_t>(n), 0.0);
  const double trials = static_cast<double>(opts.trials);
  report.passed = true;
  for (int j = 0; j < n; ++j) {
    const auto& counts = per_axis[static_cast<std::size_t>(j)];
    double sum = 0.0;
    for (auto c : counts) sum += static_cast<double>(c);
    const double mean = sum / trials;
    double ss = 0.0;
    for (auto c : counts) ss += (static_cast<double>(c) - mean) * (static_cast<double>(c) - mean);
    means[static_cast<std::size_t>(j)] = mean;
    sds[static_cast<std::size_t>(j)] = std::sqrt(ss / trials);

    CoordinateFit fit;
    fit.axis = j;
    fit.mean = mean;
    fit.chi_square = chi_square_poisson(counts, report.expected_mean, fit.dof);
    fit.threshold = fit.dof > 0 ? boost::math::quantile(boost::math::chi_squared(fit.dof), 0.999) : 0.0;
    fit.passed = fit.dof > 0 && fit.chi_square < fit.threshold;
    report.passed = report.passed && fit.passed;
    report.coordinates.push_back(fit);
  }

  const double z = boost::math::quantile(boost::math::normal(), 0.9995);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const auto& ca = per_axis[static_cast<std::size_t>(a)];
      const auto& cb = per_axis[static_cast<std::size_t>(b)];
      double cov = 0.0;
      for (std::size_t i = 0; i < ca.size(); ++i) {
        cov += (static_cast<double>(ca[i]) - means[static_cast<std::size_t>(a)]) *
               (static_cast<double>(cb[i]) - means[static_cast<std::size_t>(b)]);
      }
      CorrelationCheck check;
      check.axis_a = a;
      check.axis_b = b;
      check.correlation = cov / trials / (sds[static_cast<std::size_t>(a)] * sds[static_cast<std::size_t>(b)]);
      check.threshold = z / std::sqrt(trials);
      check.passed = std::abs(check.correlation) < check.threshold;
      report.passed = report.passed && check.passed;
      report.correlations.push_back(check);
    }
  }
  return report;
}

}  // namespace rwcollide

// rwcollide: command-line front end for the collision library.
//
//   rwcollide prob      --dim 3 --time 10
//   rwcollide expect    --dim 3 --t-max 1e6 [--format csv]
//   rwcollide classify  --dim 2
//   rwcollide fit       --dim 1 --t-max 1e6 [--format csv]
//   rwcollide simulate  --dim 3 --mode continuous --horizon 100 --trials 10000 --seed 7 --workers 4
//   rwcollide verify    --suite all
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 numerical budget failure.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rwcollide/analysis.hpp"
#include "rwcollide/errors.hpp"
#include "rwcollide/montecarlo.hpp"
#include "rwcollide/serialize.hpp"
#include "rwcollide/verify.hpp"

namespace {

using nlohmann::json;
using namespace rwcollide;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
  int dim = 1;
  double time = 0.0;
  double t_max = 1e6;
  std::optional<std::uint64_t> steps;
  std::optional<double> horizon;
  std::string mode = "continuous";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string format = "json";
  std::string output;
  bool deterministic = false;
  std::string suite = "all";
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Emitter {
 public:
  explicit Emitter(const RunConfig& cfg) : cfg_(cfg) {}

  void json_out(const std::string& command, json body) {
    body["command"] = command;
    if (!cfg_.deterministic) body["generated_at"] = utc_timestamp();
    write(body.dump(2) + "\n");
  }

  void csv_out(const std::string& header, const std::vector<std::pair<double, double>>& rows) {
    std::ostringstream s;
    s.precision(17);
    s << header << "\n";
    for (const auto& [t, v] : rows) s << t << "," << v << "\n";
    write(s.str());
  }

 private:
  void write(const std::string& text) {
    if (cfg_.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(cfg_.output);
    if (!f) throw InputError("cannot open output file " + cfg_.output);
    f << text;
  }

  const RunConfig& cfg_;
};

void require_json(const RunConfig& cfg, const std::string& command) {
  if (cfg.format != "json") throw InputError("--format csv is only available for expect and fit, not " + command);
}

int cmd_prob(const RunConfig& cfg, Emitter& out) {
  require_json(cfg, "prob");
  out.json_out("prob", make_probability_report(Dimension(cfg.dim), cfg.time));
  return 0;
}

int cmd_expect(const RunConfig& cfg, Emitter& out) {
  const Dimension d(cfg.dim);
  if (cfg.format == "csv") {
    std::vector<std::pair<double, double>> rows;
    for (const auto& p : occupation_curve(d, cfg.t_max)) rows.emplace_back(p.t, p.value);
    out.csv_out("t,value", rows);
    return 0;
  }
  out.json_out("expect", expected_occupation(d, cfg.t_max));
  return 0;
}

int cmd_classify(const RunConfig& cfg, Emitter& out) {
  require_json(cfg, "classify");
  out.json_out("classify", classify_dimension(Dimension(cfg.dim)));
  return 0;
}

int cmd_fit(const RunConfig& cfg, Emitter& out) {
  const auto fit = fit_leading_constant(Dimension(cfg.dim), default_fit_grid(cfg.t_max));
  if (cfg.format == "csv") {
    std::vector<std::pair<double, double>> rows;
    for (std::size_t i = 0; i < fit.t_grid.size(); ++i) rows.emplace_back(fit.t_grid[i], fit.g_values[i]);
    out.csv_out("t,value", rows);
    return 0;
  }
  out.json_out("fit", fit);
  return 0;
}

int cmd_simulate(const RunConfig& cfg, Emitter& out) {
  require_json(cfg, "simulate");
  const auto mode = count_mode_from_string(cfg.mode);
  double horizon = 0.0;
  if (cfg.steps && cfg.horizon) throw InputError("give either --steps or --horizon, not both");
  if (cfg.steps) {
    horizon = static_cast<double>(*cfg.steps);
  } else if (cfg.horizon) {
    horizon = *cfg.horizon;
  } else {
    throw InputError("simulate needs --horizon or --steps");
  }
  const auto est = mc_expected_count(Dimension(cfg.dim), mode, horizon, {cfg.trials, cfg.seed, cfg.workers});
  json body = est;
  body["d"] = cfg.dim;
  body["mode"] = to_string(mode);
  body["horizon"] = horizon;
  out.json_out("simulate", std::move(body));
  return 0;
}

int cmd_verify(const RunConfig& cfg, Emitter& out) {
  require_json(cfg, "verify");
  const auto reports = run_verify(cfg.suite, cfg.workers);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  out.json_out("verify", json{{"suite", cfg.suite}, {"passed", ok}, {"suites", reports}});
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("RWCOLLIDE_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: RWCOLLIDE_SEED is not an unsigned integer\n";
      return kExitInput;
    }
  }

  CLI::App app{"Collision statistics of two independent simple random walks on Z^d"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", cfg.dim, "Lattice dimension d")->check(CLI::Range(1, kMaxDimension));
    sub->add_option("--workers", cfg.workers, "Worker threads for Monte Carlo")->check(CLI::Range(1u, 256u));
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
    sub->add_flag("--deterministic", cfg.deterministic, "Omit wall-clock metadata");
  };

  auto* prob = app.add_subcommand("prob", "Coordinate and collision probabilities at time t");
  add_common(prob);
  prob->add_option("--time", cfg.time, "Time t")->required()->check(CLI::NonNegativeNumber);

  auto* expect = app.add_subcommand("expect", "Expected occupation time of the collision set");
  add_common(expect);
  expect->add_option("--t-max", cfg.t_max, "Upper integration limit")->required()->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Finite/infinite verdict for the expected collision count");
  add_common(classify);

  auto* fit = app.add_subcommand("fit", "Leading constant of P(D(t)=0) t^{d/2}");
  add_common(fit);
  fit->add_option("--t-max", cfg.t_max, "Largest grid time (>= 1e4)")->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the expected collision count");
  add_common(simulate);
  simulate->add_option("--mode", cfg.mode, "discrete or continuous")->check(CLI::IsMember({"discrete", "continuous"}));
  simulate->add_option("--horizon", cfg.horizon, "Time horizon (continuous) or steps (discrete)")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--steps", cfg.steps, "Step horizon for discrete mode");
  simulate->add_option("--trials", cfg.trials, "Number of independent trials")->check(CLI::Range(100ull, 1ull << 40));
  simulate->add_option("--seed", cfg.seed, "Master seed (default from RWCOLLIDE_SEED)");

  auto* verify = app.add_subcommand("verify", "Run invariant suites; exit 1 on any failure");
  add_common(verify);
  std::vector<std::string> suites = verify_suite_names();
  suites.push_back("all");
  verify->add_option("--suite", cfg.suite, "Suite name or 'all'")->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  Emitter out(cfg);
  try {
    if (*prob) return cmd_prob(cfg, out);
    if (*expect) return cmd_expect(cfg, out);
    if (*classify) return cmd_classify(cfg, out);
    if (*fit) return cmd_fit(cfg, out);
    if (*simulate) return cmd_simulate(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << " (partial value " << e.partial_value() << ")\n";
    return kExitNumerical;
  }
  return kExitInput;
}

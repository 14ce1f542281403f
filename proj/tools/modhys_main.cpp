// modhys — modulo-hysteresis sampling simulator and reconstruction frontend.
//
// Subcommands:
//   demo      one encode/reconstruct run, writes demo.csv + demo.svg
//   encode    compares the generalized and modified encoders, writes encode.csv/.svg
//   sweep     (alpha, h) parameter sweep, writes sweep.csv + sweep.svg
//   selftest  cross-module invariant suites, table or --json report

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modhys/encoders.hpp"
#include "modhys/io/csv.hpp"
#include "modhys/io/svg.hpp"
#include "modhys/pipeline.hpp"
#include "modhys/selftest.hpp"
#include "modhys/signal.hpp"
#include "modhys/sweep.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonOpts {
  double omega = 6.3;
  double lambda = 0.1;
  double h = 0.05;
  double alpha = 0.05;
  double T = 0.0208;
  int K = 48;
  double peak = 0.4;
  std::uint64_t seed = 1;
  std::string solver = "saomp";
  double eps = modhys::kDefaultSolverEps;
  double nu = 0.8;
  double mu = 0.05;
  int imax = 50;
  std::string out_dir = ".";
};

void add_common_options(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--omega", opts->omega, "Bandwidth Omega in rad/s")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--lambda", opts->lambda, "Modulo threshold lambda")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--h", opts->h, "Hysteresis h")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--alpha", opts->alpha, "Transient duration alpha in seconds")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--T", opts->T, "Sampling period in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--K", opts->K, "Half sample count; samples run t = -K*T .. K*T")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--peak", opts->peak, "Target peak amplitude of the random signal")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", opts->seed, "Random seed")->capture_default_str();
  cmd->add_option("--solver", opts->solver, "Sparse solver")
      ->check(CLI::IsMember({"omp", "saomp"}))
      ->capture_default_str();
  cmd->add_option("--eps", opts->eps, "Solver residual-correlation tolerance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--nu", opts->nu, "SAOMP initial batch threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--mu", opts->mu, "SAOMP pruning threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--imax", opts->imax, "SAOMP iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--out", opts->out_dir, "Output directory")->capture_default_str();
}

modhys::SolverConfig solver_config(const CommonOpts& opts) {
  modhys::SolverConfig cfg;
  cfg.eps = opts.eps;
  cfg.nu = opts.nu;
  cfg.mu = opts.mu;
  cfg.i_max = opts.imax;
  return cfg;
}

modhys::SolverKind solver_kind(const CommonOpts& opts) {
  return opts.solver == "omp" ? modhys::SolverKind::Omp : modhys::SolverKind::Saomp;
}

fs::path ensure_out_dir(const CommonOpts& opts) {
  fs::path dir(opts.out_dir);
  fs::create_directories(dir);
  return dir;
}

// "a:b:n" -> n evenly spaced values from a to b inclusive.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ':')) {
    parts.push_back(std::stod(token));
  }
  if (parts.size() != 3 || parts[2] < 1 || parts[2] != std::floor(parts[2])) {
    throw CLI::ValidationError("grid", "expected a:b:n with integer n >= 1, got '" + text + "'");
  }
  const int n = static_cast<int>(parts[2]);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] =
        n == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * i / (n - 1);
  }
  return values;
}

int run_demo(const CommonOpts& opts) {
  modhys::TrialParams params;
  params.omega = opts.omega;
  params.K = opts.K;
  params.T = opts.T;
  params.hyst = modhys::HysteresisParams{opts.lambda, opts.h, opts.alpha};
  params.peak = opts.peak;
  params.seed = opts.seed;
  params.solver = solver_kind(opts);
  params.config = solver_config(opts);

  const auto report = modhys::end_to_end_trial(params);
  if (!report.oversampling_ok) {
    std::cerr << "warning: T >= pi/Omega, identifiability is not guaranteed\n";
  }

  const auto g =
      modhys::generate_random_pw(opts.omega, opts.K, opts.T, opts.peak, opts.seed);
  const std::size_t n_samples = static_cast<std::size_t>(2 * opts.K) + 1;
  std::vector<double> t(n_samples);
  std::vector<double> g_true(n_samples);
  std::vector<std::vector<double>> rows(n_samples);
  for (std::size_t n = 0; n < n_samples; ++n) {
    t[n] = (static_cast<double>(n) - opts.K) * opts.T;
    g_true[n] = g(t[n]);
    rows[n] = {t[n], g_true[n], report.folded_samples[n], report.recovered_samples[n]};
  }

  const auto dir = ensure_out_dir(opts);
  modhys::io::write_csv(dir / "demo.csv", {"t", "g", "encoded", "recovered"}, rows);
  modhys::io::write_line_plot(dir / "demo.svg", "modulo hysteresis reconstruction", t,
                              {{"g", "#1f77b4", g_true},
                               {"encoded", "#7f7f7f", report.folded_samples},
                               {"recovered", "#d62728", report.recovered_samples}});

  std::cout << "MSE = " << modhys::io::format_g17(report.mse)
            << "  (folds = " << report.fold_count
            << ", solver iterations = " << report.solver.iterations << ")\n";
  return 0;
}

int run_encode(const CommonOpts& opts) {
  const auto g =
      modhys::generate_random_pw(opts.omega, opts.K, opts.T, opts.peak, opts.seed);
  modhys::HysteresisParams params{opts.lambda, opts.h, opts.alpha,
                                  -static_cast<double>(opts.K) * opts.T};
  modhys::TimeGrid grid;
  grid.step = opts.T / 20.0;
  grid.start = params.tau0;
  grid.count = static_cast<std::size_t>(2 * opts.K * 20) + 1;

  const auto generalized = modhys::encode_generalized(g, params, grid);
  const auto modified = modhys::encode_modified(g, params, grid);

  std::vector<double> t(grid.count);
  std::vector<double> g_vals(grid.count);
  std::vector<double> fold_gen(grid.count, 0.0);
  std::vector<double> fold_mod(grid.count, 0.0);
  for (std::size_t i = 0; i < grid.count; ++i) {
    t[i] = grid.time(i);
    g_vals[i] = g(t[i]);
  }
  auto mark = [&](const std::vector<modhys::Fold>& folds, std::vector<double>& into) {
    for (const auto& f : folds) {
      const auto idx = static_cast<std::size_t>(
          std::clamp(std::round((f.time - grid.start) / grid.step), 0.0,
                     static_cast<double>(grid.count - 1)));
      into[idx] = f.sign;
    }
  };
  mark(generalized.folds, fold_gen);
  mark(modified.folds, fold_mod);

  std::vector<std::vector<double>> rows(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    rows[i] = {t[i], g_vals[i], generalized.output[i], modified.output[i], fold_gen[i],
               fold_mod[i]};
  }

  const auto dir = ensure_out_dir(opts);
  modhys::io::write_csv(dir / "encode.csv",
                        {"t", "g", "generalized", "modified", "fold_generalized", "fold_modified"},
                        rows);

  std::vector<modhys::io::Marker> markers;
  for (const auto& f : modified.folds) {
    markers.push_back({f.time, f.sign * opts.lambda});
  }
  modhys::io::write_line_plot(dir / "encode.svg", "generalized vs modified encoder", t,
                              {{"g", "#1f77b4", g_vals},
                               {"generalized", "#ff7f0e", generalized.output},
                               {"modified", "#2ca02c", modified.output}},
                              markers);

  double max_gen = 0.0;
  double max_mod = 0.0;
  for (std::size_t i = 0; i < grid.count; ++i) {
    max_gen = std::max(max_gen, std::abs(generalized.output[i]));
    max_mod = std::max(max_mod, std::abs(modified.output[i]));
  }
  std::cout << "max |M_H g| = " << modhys::io::format_g17(max_gen) << "\n"
            << "max |M_modified g| = " << modhys::io::format_g17(max_mod) << "\n"
            << "folds: generalized = " << generalized.folds.size()
            << ", modified = " << modified.folds.size() << "\n";
  return 0;
}

int run_sweep(const CommonOpts& opts, const std::string& alpha_grid,
              const std::string& h_grid, int trials, double mse_threshold, int threads) {
  modhys::SweepConfig config;
  config.lambda = opts.lambda;
  config.T = opts.T;
  config.omega = opts.omega;
  config.K = opts.K;
  config.alpha_values = parse_grid(alpha_grid);
  config.h_values = parse_grid(h_grid);
  config.n_trials = trials;
  config.peak = opts.peak;
  config.mse_threshold = mse_threshold;
  config.base_seed = opts.seed;
  config.solver = solver_kind(opts);
  config.solver_config = solver_config(opts);
  config.threads = threads;

  const auto cells = modhys::run_sweep(config);

  std::vector<std::vector<double>> rows;
  rows.reserve(cells.size());
  std::vector<double> failures;
  failures.reserve(cells.size());
  for (const auto& c : cells) {
    rows.push_back({c.alpha, c.h, static_cast<double>(c.failures),
                    static_cast<double>(c.trials), c.mean_mse,
                    static_cast<double>(c.inadmissible_count)});
    failures.push_back(static_cast<double>(c.failures));
  }

  const auto dir = ensure_out_dir(opts);
  modhys::io::write_csv(dir / "sweep.csv",
                        {"alpha", "h", "failures", "trials", "mean_mse", "inadmissible_count"},
                        rows);
  // cells are in (alpha outer, h inner) order, matching the heatmap layout
  modhys::io::write_heatmap(dir / "sweep.svg",
                            "reconstruction failures out of " + std::to_string(trials),
                            config.alpha_values, config.h_values, failures,
                            static_cast<double>(trials), "alpha [s]", "h");

  int total_failures = 0;
  for (const auto& c : cells) {
    total_failures += c.failures;
  }
  std::cout << cells.size() << " cells, " << trials << " trials each, total failures = "
            << total_failures << "\n";
  return 0;
}

int run_selftest(bool json, const std::string& fault, std::uint64_t seed, int threads) {
  modhys::SelftestOptions options;
  options.seed = seed;
  options.threads = threads;
  if (fault == "rhs-sign") {
    options.inject_rhs_sign_fault = true;
  } else if (!fault.empty()) {
    std::cerr << "unknown fault '" << fault << "'\n";
    return 2;
  }

  const auto report = modhys::run_selftest(options);

  if (json) {
    nlohmann::json doc;
    doc["all_passed"] = report.all_passed();
    doc["checks"] = nlohmann::json::array();
    for (const auto& check : report.checks) {
      doc["checks"].push_back(
          {{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& check : report.checks) {
      std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name << "  ("
                << check.detail << ")\n";
    }
    std::cout << (report.all_passed() ? "all checks passed" : "FAILURES detected") << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modulo-hysteresis sampling simulator and sparse reconstruction"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file (flags override)");
  app.get_config_formatter_base()->section("modhys");

  CommonOpts demo_opts;
  auto* demo = app.add_subcommand("demo", "Encode and reconstruct one random signal");
  add_common_options(demo, &demo_opts);

  CommonOpts encode_opts;
  encode_opts.lambda = 0.2;
  encode_opts.h = 0.1;
  encode_opts.alpha = 0.3;
  encode_opts.peak = 0.6;
  auto* encode = app.add_subcommand("encode", "Compare generalized and modified encoders");
  add_common_options(encode, &encode_opts);

  CommonOpts sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Failure-count sweep over (alpha, h)");
  add_common_options(sweep, &sweep_opts);
  std::string alpha_grid = "0:0.07:8";
  std::string h_grid = "0:0.1:6";
  int trials = 50;
  double mse_threshold = 1e-3;
  int threads = 0;
  sweep->add_option("--alpha-grid", alpha_grid, "Transient grid a:b:n")->capture_default_str();
  sweep->add_option("--h-grid", h_grid, "Hysteresis grid a:b:n")->capture_default_str();
  sweep->add_option("--trials", trials, "Trials per cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--mse-threshold", mse_threshold, "Failure threshold on the MSE")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--threads", threads, "Worker pool size (0 = hardware)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Run the cross-module invariant suites");
  bool selftest_json = false;
  std::string fault;
  std::uint64_t selftest_seed = 1;
  int selftest_threads = 0;
  selftest->add_flag("--json", selftest_json, "Emit a machine-readable report");
  selftest->add_option("--seed", selftest_seed, "Base seed")->capture_default_str();
  selftest->add_option("--threads", selftest_threads, "Worker pool size (0 = hardware)");
  selftest->add_option("--inject-fault", fault, "Fault hook for testing the selftest")
      ->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (demo->parsed()) {
      return run_demo(demo_opts);
    }
    if (encode->parsed()) {
      return run_encode(encode_opts);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_opts, alpha_grid, h_grid, trials, mse_threshold, threads);
    }
    if (selftest->parsed()) {
      return run_selftest(selftest_json, fault, selftest_seed, selftest_threads);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "modhys/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "modhys/parallel.hpp"

namespace modhys {

namespace {

struct TrialOutcome {
  double mse = std::numeric_limits<double>::infinity();
  bool inadmissible = true;
};

}  // namespace

std::vector<SweepCell> run_sweep(const SweepConfig& config) {
  if (config.alpha_values.empty() || config.h_values.empty()) {
    throw std::invalid_argument("run_sweep: alpha and h grids must be non-empty");
  }
  if (config.n_trials < 1 || !(config.mse_threshold > 0.0)) {
    throw std::invalid_argument("run_sweep: need n_trials >= 1 and mse_threshold > 0");
  }

  const std::size_t n_cells = config.alpha_values.size() * config.h_values.size();
  const auto n_trials = static_cast<std::size_t>(config.n_trials);
  std::vector<TrialOutcome> outcomes(n_cells * n_trials);

  auto run_one = [&](std::size_t task) {
    const std::size_t cell = task / n_trials;
    const std::size_t trial = task % n_trials;
    const double alpha = config.alpha_values[cell / config.h_values.size()];
    const double h = config.h_values[cell % config.h_values.size()];

    TrialParams params;
    params.omega = config.omega;
    params.K = config.K;
    params.T = config.T;
    params.hyst.lambda = config.lambda;
    params.hyst.h = h;
    params.hyst.alpha = alpha;
    params.peak = config.peak;
    params.seed = config.base_seed + trial;  // same signals in every cell
    params.solver = config.solver;
    params.config = config.solver_config;
    params.grid_per_T = config.grid_per_T;

    TrialOutcome& out = outcomes[task];
    try {
      const ReconstructionReport report = end_to_end_trial(params);
      out.mse = report.mse;
      const AdmissibilityReport& adm = *report.admissibility;
      out.inadmissible = !(adm.decay_ok && adm.d2_ok && h >= 0.0 && h < config.lambda);
    } catch (const RunawayFoldError&) {
      // counted as a failed, inadmissible trial
      out.mse = std::numeric_limits<double>::infinity();
      out.inadmissible = true;
    }
  };

  parallel_for_index(outcomes.size(), config.threads, run_one);

  // Deterministic aggregation in (alpha, h) grid order.
  std::vector<SweepCell> cells;
  cells.reserve(n_cells);
  for (std::size_t ia = 0; ia < config.alpha_values.size(); ++ia) {
    for (std::size_t ih = 0; ih < config.h_values.size(); ++ih) {
      const std::size_t cell = ia * config.h_values.size() + ih;
      SweepCell agg;
      agg.alpha = config.alpha_values[ia];
      agg.h = config.h_values[ih];
      agg.trials = config.n_trials;
      double sum = 0.0;
      for (std::size_t t = 0; t < n_trials; ++t) {
        const TrialOutcome& out = outcomes[cell * n_trials + t];
        sum += out.mse;
        if (!(out.mse <= config.mse_threshold)) {
          ++agg.failures;
        }
        if (out.inadmissible) {
          ++agg.inadmissible_count;
        }
      }
      agg.mean_mse = sum / static_cast<double>(config.n_trials);
      cells.push_back(agg);
    }
  }
  return cells;
}

}  // namespace modhys

#pragma once

#include <cstdint>
#include <vector>

#include "modhys/pipeline.hpp"

namespace modhys {

struct SweepConfig {
  double lambda = 0.1;
  double T = 0.0208;
  double omega = 6.3;
  int K = 48;
  std::vector<double> alpha_values;
  std::vector<double> h_values;
  int n_trials = 50;
  double peak = 0.4;
  double mse_threshold = 1e-3;
  std::uint64_t base_seed = 1;
  SolverKind solver = SolverKind::Saomp;
  SolverConfig solver_config;
  int threads = 0;     // 0 = hardware concurrency
  int grid_per_T = 20;
};

struct SweepCell {
  double alpha = 0.0;
  double h = 0.0;
  int failures = 0;  // trials with MSE > threshold (runaway encodes count)
  int trials = 0;
  double mean_mse = 0.0;
  int inadmissible_count = 0;  // !(decay_ok && d2_ok && 0 <= h < lambda)
};

// Runs n_trials reconstructions per (alpha, h) cell with seeds
// base_seed + trial index — the same signals are reused in every cell.
// Cells are evaluated concurrently, but the returned order and every
// aggregate are deterministic functions of the config alone.
std::vector<SweepCell> run_sweep(const SweepConfig& config);

}  // namespace modhys

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>

#include "modhys/encoders.hpp"
#include "modhys/signal.hpp"
#include "modhys/sparse.hpp"
#include "modhys/spectral.hpp"

namespace modhys {

enum class SolverKind { Omp, Saomp };

struct ReconstructionReport {
  std::vector<double> folded_samples;     // the g_lambda input, echoed for reporting
  std::vector<double> recovered_samples;  // length N+1
  std::vector<double> fold_estimate;      // length N+1; recovered = g_lambda + fold_estimate
  SparseSolveResult solver;
  BandLayout layout;
  double mse = std::numeric_limits<double>::quiet_NaN();
  bool ground_truth_available = false;
  double imag_residual_max = 0.0;  // largest |Im| discarded when projecting Sc
  bool oversampling_ok = true;     // T < pi/Omega

  // Filled by end_to_end_trial only.
  std::optional<AdmissibilityReport> admissibility;
  int fold_count = -1;
};

/// Mean of squared element-wise differences; throws on length mismatch.
double mse(std::span<const double> a, std::span<const double> b);

// Recovers the sample vector from N+1 folded samples g_lambda:
// difference -> DFT -> out-of-band restriction -> sparse solve -> negated
// anti-difference (real part) -> add back to g_lambda.  When ground_truth is
// non-empty (length N+1) the report carries the sample-grid MSE against it.
//
// T >= pi/Omega is reported via oversampling_ok, not an error; an invalid
// band layout (M < 1) propagates as InsufficientOversamplingError.
ReconstructionReport reconstruct(std::span<const double> g_lambda, double omega, double T,
                                 SolverKind solver, const SolverConfig& config,
                                 std::span<const double> ground_truth = {});

struct TrialParams {
  double omega = 6.3;
  int K = 48;
  double T = 0.0208;
  HysteresisParams hyst;  // NaN tau0 resolves to -K*T
  double peak = 0.4;
  std::uint64_t seed = 1;
  SolverKind solver = SolverKind::Saomp;
  SolverConfig config;
  int grid_per_T = 20;  // encoder grid resolution
};

// Generates a random signal, encodes it with encode_modified on a fine grid,
// samples the output at t = (n - K) T, reconstructs, and reports the MSE
// against the true samples plus the admissibility diagnostics.
// Encoder runaway errors propagate.
ReconstructionReport end_to_end_trial(const TrialParams& params);

}  // namespace modhys

#include "modhys/pipeline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modhys {

double mse(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("mse: sequences must be non-empty and of equal length");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

ReconstructionReport reconstruct(std::span<const double> g_lambda, double omega, double T,
                                 SolverKind solver, const SolverConfig& config,
                                 std::span<const double> ground_truth) {
  if (g_lambda.size() < 3) {
    throw std::invalid_argument("reconstruct: need at least 3 samples");
  }
  const int N = static_cast<int>(g_lambda.size()) - 1;

  ReconstructionReport report;
  report.folded_samples.assign(g_lambda.begin(), g_lambda.end());
  report.layout = band_layout(omega, N, T);
  report.oversampling_ok = T < std::numbers::pi / omega;

  const Eigen::MatrixXcd V = build_vandermonde(report.layout);
  const Eigen::VectorXcd s = build_rhs(g_lambda, report.layout);
  report.solver =
      solver == SolverKind::Omp ? omp(V, s, config.eps) : saomp(V, s, config);

  // The solved c approximates the negated difference of the fold signal, so
  // the fold estimate is -Re(S c); recovered = g_lambda + fold estimate.
  std::vector<std::complex<double>> c(report.solver.c.data(),
                                      report.solver.c.data() + report.solver.c.size());
  const auto sc = anti_difference(std::span<const std::complex<double>>(c));
  report.fold_estimate.resize(sc.size());
  report.recovered_samples.resize(sc.size());
  for (std::size_t k = 0; k < sc.size(); ++k) {
    report.fold_estimate[k] = -sc[k].real();
    report.imag_residual_max = std::max(report.imag_residual_max, std::abs(sc[k].imag()));
    report.recovered_samples[k] = g_lambda[k] + report.fold_estimate[k];
  }

  if (!ground_truth.empty()) {
    report.mse = mse(report.recovered_samples, ground_truth);
    report.ground_truth_available = true;
  }
  return report;
}

ReconstructionReport end_to_end_trial(const TrialParams& params) {
  const double window = static_cast<double>(params.K) * params.T;
  HysteresisParams hyst = params.hyst;
  if (!std::isfinite(hyst.tau0)) {
    hyst.tau0 = -window;  // fold tracking starts at the first sample
  }

  const BandlimitedSignal g =
      generate_random_pw(params.omega, params.K, params.T, params.peak, params.seed);

  // Fine grid aligned with the sample instants (n - K) T; extend left if
  // tau0 predates the window.
  const double step = params.T / static_cast<double>(params.grid_per_T);
  std::size_t lead = 0;
  if (hyst.tau0 < -window) {
    lead = static_cast<std::size_t>(std::ceil((-window - hyst.tau0) / step));
  }
  TimeGrid grid;
  grid.step = step;
  grid.start = -window - static_cast<double>(lead) * step;
  grid.count = lead + static_cast<std::size_t>(2 * params.K * params.grid_per_T) + 1;

  const EncodedTrace trace = encode_modified(g, hyst, grid);

  const std::size_t n_samples = static_cast<std::size_t>(2 * params.K) + 1;
  std::vector<double> g_lambda(n_samples);
  std::vector<double> g_true(n_samples);
  for (std::size_t n = 0; n < n_samples; ++n) {
    g_lambda[n] = trace.output[lead + n * static_cast<std::size_t>(params.grid_per_T)];
    g_true[n] = g((static_cast<double>(n) - params.K) * params.T);
  }

  ReconstructionReport report =
      reconstruct(g_lambda, params.omega, params.T, params.solver, params.config, g_true);
  report.admissibility = check_admissibility(g, hyst, params.omega, params.K, params.T);
  report.fold_count = static_cast<int>(trace.folds.size());
  return report;
}

}  // namespace modhys

#include "modhys/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

#include "modhys/encoders.hpp"
#include "modhys/parallel.hpp"
#include "modhys/pipeline.hpp"
#include "modhys/signal.hpp"
#include "modhys/sparse.hpp"
#include "modhys/spectral.hpp"

namespace modhys {

namespace {

constexpr double kPi = std::numbers::pi;

TimeGrid demo_grid(int K, double T, int per_T, double extend = 0.0) {
  TimeGrid grid;
  grid.step = T / per_T;
  grid.start = -K * T;
  grid.count = static_cast<std::size_t>(2 * K * per_T) +
               static_cast<std::size_t>(std::ceil(extend / grid.step)) + 1;
  return grid;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

SelftestCheck check_encoder_range(std::uint64_t seed, int threads) {
  HysteresisParams p{0.2, 0.1, 0.3, -1.0};
  double worst = 0.0;
  double fold_dev = 0.0;
  std::mutex m;
  parallel_for_index(20, threads, [&](std::size_t k) {
    const auto g = generate_random_pw(6.3, 48, 0.0208, 0.6, seed + k);
    TimeGrid grid{-1.0, 2.0 / 4000.0, 4001};
    HysteresisParams local = p;
    local.tau0 = grid.start;
    const auto trace = encode_modified(g, local, grid);
    double mx = 0.0;
    for (double v : trace.output) {
      mx = std::max(mx, std::abs(v));
    }
    double fd = 0.0;
    for (const Fold& f : trace.folds) {
      const double val = g(f.time) - fold_signal_at(trace.folds, local, f.time);
      fd = std::max(fd, std::abs(std::abs(val) - local.lambda));
    }
    std::lock_guard<std::mutex> lock(m);
    worst = std::max(worst, mx);
    fold_dev = std::max(fold_dev, fd);
  });
  const bool ok = worst <= p.lambda + 1e-6 && fold_dev <= 1e-6;
  return {"encoder-range-and-fold-values", ok,
          "max |output| = " + fmt(worst) + ", max fold deviation = " + fmt(fold_dev)};
}

SelftestCheck check_lemma_oracles(std::uint64_t seed, int threads) {
  HysteresisParams p{0.2, 0.1, 0.1, -1.0};
  std::atomic<int> admissible{0};
  std::atomic<int> separation_ok{0};
  std::atomic<int> return_ok{0};
  parallel_for_index(25, threads, [&](std::size_t k) {
    const auto g = generate_random_pw(6.3, 48, 0.0208, 0.45, seed + 100 + k);
    HysteresisParams local = p;
    local.tau0 = -48 * 0.0208;
    const auto adm = check_admissibility(g, local, 6.3, 48, 0.0208);
    if (!adm.lemma_ok()) {
      return;
    }
    ++admissible;
    auto grid = demo_grid(48, 0.0208, 20, 2.0 * local.alpha + 0.1);
    const auto trace = encode_modified(g, local, grid);
    if (verify_separation(trace, local)) {
      ++separation_ok;
    }
    if (verify_return(trace, g, local, 1e-6)) {
      ++return_ok;
    }
  });
  const bool ok = admissible > 0 && separation_ok == admissible && return_ok == admissible;
  return {"separation-and-return-oracles", ok,
          fmt(admissible) + " admissible, separation " + fmt(separation_ok) + ", return " +
              fmt(return_ok)};
}

SelftestCheck check_dft_oracle(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 300);
  auto u = [&] { return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0; };
  double worst = 0.0;
  for (int n : {4, 17, 96}) {
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (auto& v : z) {
      v = {u(), u()};
    }
    const auto fast = dft(z);
    double norm = 0.0;
    double err = 0.0;
    for (int m = 0; m < n; ++m) {
      std::complex<double> acc{0.0, 0.0};
      for (int j = 0; j < n; ++j) {
        const double angle = -2.0 * kPi * m * j / n;
        acc += z[static_cast<std::size_t>(j)] *
               std::complex<double>{std::cos(angle), std::sin(angle)};
      }
      err = std::max(err, std::abs(acc - fast[static_cast<std::size_t>(m)]));
      norm = std::max(norm, std::abs(acc));
    }
    worst = std::max(worst, err / norm);
  }
  return {"dft-direct-sum-oracle", worst < 1e-9, "max relative error = " + fmt(worst)};
}

SelftestCheck check_diff_identity(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 400);
  auto u = [&] { return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0; };
  std::vector<double> z(97);
  for (auto& v : z) {
    v = u();
  }
  const auto diff = forward_difference(z);
  const auto back = anti_difference(std::span<const double>(diff));
  bool exact = back.size() == z.size();
  for (std::size_t k = 0; exact && k < z.size(); ++k) {
    exact = back[k] == z[k] - z[0];
  }
  return {"difference-antidifference-identity", exact,
          exact ? "S(dz) = z - z[0] exactly" : "identity violated"};
}

SelftestCheck check_omp_recovery(std::uint64_t seed, bool fault, int threads) {
  const auto layout = band_layout(6.3, 96, 0.0208);
  const Eigen::MatrixXcd V = build_vandermonde(layout);
  std::atomic<int> good{0};
  const int trials = 40;
  parallel_for_index(static_cast<std::size_t>(trials), threads, [&](std::size_t k) {
    std::mt19937_64 rng(seed + 500 + k);
    auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const int sparsity = 1 + static_cast<int>(rng() % 6);
    Eigen::VectorXcd c0 = Eigen::VectorXcd::Zero(layout.N);
    std::vector<int> support;
    while (static_cast<int>(support.size()) < sparsity) {
      const int idx = static_cast<int>(rng() % static_cast<std::uint64_t>(layout.M - 1));
      if (std::find(support.begin(), support.end(), idx) == support.end()) {
        support.push_back(idx);
        const double mag = 0.1 + 0.9 * u();
        c0(idx) = (u() < 0.5 ? -1.0 : 1.0) * mag;
      }
    }
    Eigen::VectorXcd s = V * c0;
    if (fault) {
      s = -s;
    }
    const auto result = omp(V, s, 1e-9);
    std::sort(support.begin(), support.end());
    if (result.support == support && (result.c - c0).cwiseAbs().maxCoeff() < 1e-8) {
      ++good;
    }
  });
  const bool ok = good >= 38;  // 95% of 40
  return {"omp-exact-recovery", ok, fmt(good) + "/" + fmt(trials) + " exact recoveries"};
}

SelftestCheck check_no_fold_neutrality(std::uint64_t seed, int threads) {
  std::atomic<bool> ok{true};
  double worst = 0.0;
  std::mutex m;
  parallel_for_index(10, threads, [&](std::size_t k) {
    TrialParams params;
    params.hyst = HysteresisParams{0.1, 0.05, 0.05};
    params.peak = 0.09;
    params.seed = seed + 600 + k;
    const auto report = end_to_end_trial(params);
    std::lock_guard<std::mutex> lock(m);
    worst = std::max(worst, report.mse);
    if (!(report.mse < 1e-10) || report.fold_count != 0) {
      ok = false;
    }
  });
  return {"no-fold-neutrality", ok, "max MSE = " + fmt(worst)};
}

SelftestCheck check_single_fold_recovery(std::uint64_t seed, bool fault) {
  const auto g = generate_random_pw(6.3, 48, 0.0208, 0.09, seed + 700);
  const HysteresisParams p{0.1, 0.05, 0.0};
  const auto layout = band_layout(6.3, 96, 0.0208);
  const int n0 = 40;

  std::vector<double> g_true(97);
  std::vector<double> g_lambda(97);
  for (int n = 0; n <= 96; ++n) {
    g_true[static_cast<std::size_t>(n)] = g((n - 48) * 0.0208);
    g_lambda[static_cast<std::size_t>(n)] =
        g_true[static_cast<std::size_t>(n)] - (n >= n0 ? p.fold_height() : 0.0);
  }

  // Manual pipeline with the fault hook applied to the right-hand side.
  const Eigen::MatrixXcd V = build_vandermonde(layout);
  Eigen::VectorXcd s = build_rhs(g_lambda, layout);
  if (fault) {
    s = -s;
  }
  const auto solve = omp(V, s, SolverConfig{}.eps);
  std::vector<std::complex<double>> c(solve.c.data(), solve.c.data() + solve.c.size());
  const auto sc = anti_difference(std::span<const std::complex<double>>(c));
  std::vector<double> recovered(97);
  for (std::size_t k = 0; k < recovered.size(); ++k) {
    recovered[k] = g_lambda[k] - sc[k].real();
  }
  const double err = mse(recovered, g_true);
  return {"single-fold-recovery", err < 1e-8, "MSE = " + fmt(err)};
}

}  // namespace

bool SelftestReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SelftestCheck& c) { return c.passed; });
}

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  report.checks.push_back(check_encoder_range(options.seed, options.threads));
  report.checks.push_back(check_lemma_oracles(options.seed, options.threads));
  report.checks.push_back(check_dft_oracle(options.seed));
  report.checks.push_back(check_diff_identity(options.seed));
  report.checks.push_back(
      check_omp_recovery(options.seed, options.inject_rhs_sign_fault, options.threads));
  report.checks.push_back(check_no_fold_neutrality(options.seed, options.threads));
  report.checks.push_back(
      check_single_fold_recovery(options.seed, options.inject_rhs_sign_fault));
  return report;
}

}  // namespace modhys

#include "modhys/signal.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "modhys/spectral.hpp"

namespace modhys {

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform draw in (0, 1] from the raw engine output; the engine is fully
// specified by the standard, so the stream is platform-independent.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

}  // namespace

double sinc(double x) {
  const double u = kPi * x;
  if (std::abs(u) < 1e-8) {
    return 1.0 - u * u / 6.0;
  }
  return std::sin(u) / u;
}

double sinc_d2(double x) {
  const double u = kPi * x;
  if (std::abs(u) < 1e-2) {
    const double u2 = u * u;
    return kPi * kPi * (-1.0 / 3.0 + u2 / 10.0 - u2 * u2 / 168.0);
  }
  return kPi * kPi * ((2.0 - u * u) * std::sin(u) - 2.0 * u * std::cos(u)) / (u * u * u);
}

double BandlimitedSignal::operator()(double t) const {
  const double x = omega * t / kPi;
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    acc += coeffs[i] * sinc(x - static_cast<double>(j_min + static_cast<int>(i)));
  }
  return acc;
}

double BandlimitedSignal::second_derivative(double t) const {
  const double x = omega * t / kPi;
  const double scale = (omega / kPi) * (omega / kPi);
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    acc += coeffs[i] * sinc_d2(x - static_cast<double>(j_min + static_cast<int>(i)));
  }
  return scale * acc;
}

double BandlimitedSignal::center_spacing() const { return kPi / omega; }

BandlimitedSignal generate_random_pw(double omega, int K, double T, double peak,
                                     std::uint64_t seed) {
  if (!(omega > 0.0) || !(T > 0.0) || !(peak > 0.0) || K < 1) {
    throw std::invalid_argument("generate_random_pw: omega, T, peak must be positive, K >= 1");
  }

  const double window = static_cast<double>(K) * T;
  const int J = std::max(0, static_cast<int>(std::floor(window * omega / kPi)));
  const double envelope_scale = 0.4 * window;

  BandlimitedSignal g;
  g.omega = omega;
  g.j_min = -J;
  g.coeffs.resize(2 * J + 1);

  std::mt19937_64 rng(seed);
  for (int j = -J; j <= J; ++j) {
    const double center = static_cast<double>(j) * kPi / omega;
    const double envelope = std::exp(-center * center / (2.0 * envelope_scale * envelope_scale));
    g.coeffs[static_cast<std::size_t>(j + J)] = standard_normal(rng) * envelope;
  }

  // Rescale so the grid maximum of |g| on [-K T, K T] (step T/20) hits peak.
  const int n_grid = 40 * K + 1;
  double max_abs = 0.0;
  for (int i = 0; i < n_grid; ++i) {
    const double t = -window + static_cast<double>(i) * T / 20.0;
    max_abs = std::max(max_abs, std::abs(g(t)));
  }
  if (!(max_abs > 0.0)) {
    throw std::runtime_error("generate_random_pw: degenerate draw with zero amplitude");
  }
  const double scale = peak / max_abs;
  for (double& a : g.coeffs) {
    a *= scale;
  }
  return g;
}

double estimate_d2_bound(const BandlimitedSignal& g, double t_min, double t_max, int n_grid) {
  if (n_grid < 2) {
    throw std::invalid_argument("estimate_d2_bound: n_grid must be >= 2");
  }
  const double step = (t_max - t_min) / static_cast<double>(n_grid - 1);
  double bound = 0.0;
  for (int i = 0; i < n_grid; ++i) {
    bound = std::max(bound, std::abs(g.second_derivative(t_min + step * static_cast<double>(i))));
  }
  return bound;
}

AdmissibilityReport check_admissibility(const BandlimitedSignal& g,
                                        const HysteresisParams& params, double omega, int K,
                                        double T) {
  AdmissibilityReport report;
  const double window = static_cast<double>(K) * T;
  const double tau_abs = std::isfinite(params.tau0) ? std::abs(params.tau0) : window;
  const double step = T / 20.0;

  // Tail scan: |t| in [|tau0|, |tau0| + K T] on both sides.
  const int n_tail = 20 * K + 1;
  double max_outside = 0.0;
  for (int i = 0; i < n_tail; ++i) {
    const double t = tau_abs + step * static_cast<double>(i);
    max_outside = std::max(max_outside, std::max(std::abs(g(t)), std::abs(g(-t))));
  }
  report.max_abs_outside = max_outside;

  const double reach = 2.0 * window + 2.0 * params.alpha;
  report.d2_bound =
      estimate_d2_bound(g, -reach, reach, static_cast<int>(2.0 * reach / step) + 1);

  // A finite sinc series is smooth with bounded derivative everywhere.
  report.lipschitz_ok = true;
  report.decay_ok = max_outside < params.lambda - params.h;
  report.d2_ok = params.alpha == 0.0 ||
                 report.d2_bound <= 2.0 * params.h / (params.alpha * params.alpha);
  report.oversampling_ok = T < kPi / omega;

  const int N = 2 * K;
  const int n_omega = static_cast<int>(
      snapped_ceil(omega * static_cast<double>(N + 1) * T / (2.0 * kPi)));
  const long long lhs = snapped_ceil((tau_abs + 2.0 * params.alpha) / T) + K;
  report.guarantee_ok = lhs <= static_cast<long long>(N - 2 * n_omega - 2);

  return report;
}

double sinc_interpolate(std::span<const double> samples, double T, double t, double t_start) {
  if (samples.empty()) {
    throw std::invalid_argument("sinc_interpolate: empty sample sequence");
  }
  double acc = 0.0;
  for (std::size_t n = 0; n < samples.size(); ++n) {
    acc += samples[n] * sinc((t - (t_start + static_cast<double>(n) * T)) / T);
  }
  return acc;
}

}  // namespace modhys

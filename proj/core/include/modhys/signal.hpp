#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "modhys/hysteresis_params.hpp"

namespace modhys {

/// Normalized sinc: sin(pi x) / (pi x), sinc(0) = 1.
double sinc(double x);

/// Second derivative of the normalized sinc, with a series expansion near the
/// removable singularity at x = 0.
double sinc_d2(double x);

// A finitely parameterized member of the Paley-Wiener space PW_Omega,
//
//   g(t) = sum_j a_j * sinc(Omega t / pi - j),   j = j_min .. j_min + n - 1,
//
// evaluable and smooth for every real t.  Values are immutable after
// construction and safe to share across threads.
struct BandlimitedSignal {
  double omega = 1.0;          // bandwidth in rad/s, > 0
  std::vector<double> coeffs;  // a_j, non-empty
  int j_min = 0;

  double operator()(double t) const;
  double second_derivative(double t) const;

  // Spacing of the sinc centers, pi/omega.
  double center_spacing() const;
};

// Diagnostics for the recovery guarantees.  Grid estimates, not exact
// sup-norms; field semantics:
//   max_abs_outside  sup of |g| on a grid of |t| >= |tau0|
//   d2_bound         grid estimate of ||g''||_inf
//   lipschitz_ok     g has essentially bounded derivative (always true for a
//                    finite sinc series)
//   decay_ok         max_abs_outside < lambda - h
//   d2_ok            d2_bound <= 2h/alpha^2 (vacuously true for alpha = 0)
//   guarantee_ok     ceil((|tau0| + 2 alpha)/T) + K <= N - 2 N_Omega - 2
//   oversampling_ok  T < pi/Omega (strict)
struct AdmissibilityReport {
  double max_abs_outside = 0.0;
  double d2_bound = 0.0;
  bool lipschitz_ok = false;
  bool decay_ok = false;
  bool d2_ok = false;
  bool guarantee_ok = false;
  bool oversampling_ok = false;

  // The signal-and-parameter conditions of the separation/return lemmas.
  bool lemma_ok() const { return lipschitz_ok && decay_ok && d2_ok; }
};

// Draws a random bandlimited signal: Gaussian coefficients damped by a
// Gaussian envelope of scale 0.4*K*T, rescaled so the grid maximum of |g| on
// [-K T, K T] (step T/20) equals `peak`.  Identical seeds give bit-identical
// signals; the normal variates come from a fixed Box-Muller transform of
// mt19937_64 output, so results do not depend on platform library details.
//
// Throws std::invalid_argument for non-positive omega, T or peak, or K < 1.
BandlimitedSignal generate_random_pw(double omega, int K, double T, double peak,
                                     std::uint64_t seed);

// Maximum of |g''| over a uniform grid of n_grid points on [t_min, t_max],
// using the analytic second derivative of the sinc series.
// Throws std::invalid_argument if n_grid < 2.
double estimate_d2_bound(const BandlimitedSignal& g, double t_min, double t_max,
                         int n_grid);

// Fills every field of AdmissibilityReport for the sampling setup
// (N = 2K samples at spacing T).  Grid estimates use 20 points per sampling
// interval.  Reports, never throws, on inadmissible signals.
AdmissibilityReport check_admissibility(const BandlimitedSignal& g,
                                        const HysteresisParams& params,
                                        double omega, int K, double T);

// Shannon interpolation over a finite sample window: samples[n] is taken at
// t_start + n*T.  Exact at the sample instants.
// Throws std::invalid_argument if samples is empty.
double sinc_interpolate(std::span<const double> samples, double T, double t,
                        double t_start = 0.0);

}  // namespace modhys

#pragma once

/*
 * encoders.hpp — modulo folding encoders with hysteresis and transients
 *
 * Three encoder models:
 *
 *   ideal_modulo       pointwise folding into [-lambda, lambda),
 *                        M v = v - 2 lambda floor((v + lambda) / (2 lambda))
 *
 *   encode_generalized fold times detected on the instantaneous residual
 *                        (steps), output assembled with ramps of duration
 *                        alpha.  The output may leave [-lambda, lambda].
 *
 *   encode_modified    fold detection accounts for the transient: the
 *                        residual tracked between folds is
 *                          zeta(t) = g(t) - (2 lambda - h) * sum_n s_n * eps_alpha(t - k_n)
 *                        and the next fold time is the first t past the last
 *                        fold with |zeta(t)| >= lambda.  The output stays in
 *                        [-lambda, lambda]; at an interior fold it equals
 *                        +-lambda (alpha > 0) or +-(lambda - h) just after the
 *                        jump (alpha = 0).
 *
 * eps_alpha is the transient profile: a unit step for alpha = 0, otherwise a
 * linear ramp of slope 1/alpha (see transient()).
 *
 * Fold times are located by scanning the evaluation grid for the first
 * threshold violation and refining the bracketing interval by bisection to an
 * absolute time tolerance of 1e-12 * (grid span).  A threshold met exactly at
 * a grid point counts as a crossing.  For alpha = 0 the residual jumps at the
 * fold instant and detection resumes at that instant; the post-jump value can
 * re-trigger immediately (it does for fold height <= 0, i.e. h >= 2 lambda),
 * which is reported as a runaway after 3 same-instant folds.
 */

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "modhys/hysteresis_params.hpp"
#include "modhys/signal.hpp"

namespace modhys {

// Uniform evaluation grid: t_i = start + i * step, i = 0 .. count-1.
struct TimeGrid {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  double time(std::size_t i) const { return start + step * static_cast<double>(i); }
  double span() const { return count > 1 ? step * static_cast<double>(count - 1) : 0.0; }
  double end() const { return time(count == 0 ? 0 : count - 1); }
};

enum class EncoderKind { Ideal, Generalized, Modified };

struct Fold {
  double time = 0.0;
  int sign = 0;  // +1 or -1
};

struct EncodedTrace {
  TimeGrid grid;
  std::vector<double> output;  // encoder output on the grid
  std::vector<Fold> folds;     // strictly increasing in time
  EncoderKind kind = EncoderKind::Modified;
};

// Raised when fold detection does not terminate (inadmissible parameters,
// e.g. h > 2 lambda).
class RunawayFoldError : public std::runtime_error {
 public:
  explicit RunawayFoldError(const std::string& what) : std::runtime_error(what) {}
};

struct EncodeOptions {
  // Upper bound on the number of folds; 0 picks the default grid.count / 2.
  std::size_t max_folds = 0;
};

/// Pointwise ideal modulo; result in [-lambda, lambda).
/// Throws std::invalid_argument if lambda <= 0.
double ideal_modulo(double v, double lambda);

/// Transient profile eps_alpha: indicator of t >= 0 when alpha = 0, else
/// 0 for t < 0, t/alpha on [0, alpha), 1 for t >= alpha.
double transient(double t, double alpha);

// Fold-ramp sum (2 lambda - h) * sum_n sign_n * eps_alpha(t - time_n) at one
// instant.  `folds` must be time-sorted.
double fold_signal_at(std::span<const Fold> folds, const HysteresisParams& params,
                      double t);

// Same sum evaluated on every grid point; the reconstruction oracle
// g = output + fold signal.
// Throws std::invalid_argument if folds are not time-sorted.
std::vector<double> build_fold_signal(std::span<const Fold> folds,
                                      const HysteresisParams& params,
                                      const TimeGrid& grid);

// Modified modulo hysteresis encoder (detection sees the ramps).
// Preconditions: lambda > 0, alpha >= 0, finite tau0, grid covering tau0 with
// count >= 2; violations throw std::invalid_argument.  Non-terminating fold
// cascades throw RunawayFoldError.
EncodedTrace encode_modified(const BandlimitedSignal& g, const HysteresisParams& params,
                             const TimeGrid& grid, const EncodeOptions& opts = {});

// Generalized modulo encoder: fold times from the step-based residual, output
// assembled with ramps at those times.  Coincides with encode_modified when
// alpha = 0.
EncodedTrace encode_generalized(const BandlimitedSignal& g, const HysteresisParams& params,
                                const TimeGrid& grid, const EncodeOptions& opts = {});

// True iff every consecutive fold pair with opposite signs is separated by at
// least alpha (minus a 1e-9 s event tolerance).
bool verify_separation(const EncodedTrace& trace, const HysteresisParams& params);

// True iff |output - g| <= tol at every grid point t >= |tau0| + 2 alpha.
// Throws std::invalid_argument if the grid does not reach that region.
bool verify_return(const EncodedTrace& trace, const BandlimitedSignal& g,
                   const HysteresisParams& params, double tol);

}  // namespace modhys

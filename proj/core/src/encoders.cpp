#include "modhys/encoders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modhys {

namespace {

double fold_sum(std::span<const Fold> folds, double height, double alpha, double t) {
  double acc = 0.0;
  for (const Fold& f : folds) {
    if (t < f.time) {
      break;  // time-sorted; eps_alpha(t - time) = 0 from here on
    }
    acc += static_cast<double>(f.sign) * transient(t - f.time, alpha);
  }
  return acc * height;
}

void validate_encode_args(const BandlimitedSignal& g, const HysteresisParams& p,
                          const TimeGrid& grid) {
  if (!(p.lambda > 0.0)) {
    throw std::invalid_argument("encode: lambda must be positive");
  }
  if (p.alpha < 0.0 || p.h < 0.0) {
    throw std::invalid_argument("encode: alpha and h must be non-negative");
  }
  if (!std::isfinite(p.tau0)) {
    throw std::invalid_argument("encode: tau0 must be finite");
  }
  if (grid.count < 2 || !(grid.step > 0.0)) {
    throw std::invalid_argument("encode: grid needs at least 2 points and positive step");
  }
  if (grid.start > p.tau0 + 0.5 * grid.step || grid.end() < p.tau0) {
    throw std::invalid_argument("encode: grid must cover [tau0, t_end]");
  }
  if (g.coeffs.empty()) {
    throw std::invalid_argument("encode: signal has no coefficients");
  }
}

// Shared fold detection: the residual is tracked with transient duration
// detect_alpha (params.alpha for the modified encoder, 0 for the generalized
// one).
std::vector<Fold> detect_folds(const BandlimitedSignal& g, const HysteresisParams& p,
                               const TimeGrid& grid, double detect_alpha,
                               std::size_t max_folds) {
  const double height = p.fold_height();
  const double time_tol = 1e-12 * grid.span();
  const double refold_gate = p.lambda * (1.0 + 1e-9);

  std::vector<Fold> folds;
  auto zeta = [&](double t) { return g(t) - fold_sum(folds, height, detect_alpha, t); };
  auto record = [&](double kappa, int sign) {
    folds.push_back(Fold{kappa, sign});
    if (folds.size() > max_folds) {
      throw RunawayFoldError("encode: fold count exceeded cap of " +
                             std::to_string(max_folds) + "; parameters look inadmissible");
    }
  };

  double resume = p.tau0;
  std::size_t i = 0;
  while (i < grid.count && grid.time(i) <= resume) {
    ++i;
  }

  while (i < grid.count) {
    const double ti = grid.time(i);
    const double zi = zeta(ti);
    if (std::abs(zi) < p.lambda) {
      ++i;
      continue;
    }

    // Crossing inside (max(resume, t_{i-1}), t_i]; equality at a grid point
    // counts as a crossing.
    const int sign = zi >= 0.0 ? 1 : -1;
    const double a = i > 0 ? std::max(resume, grid.time(i - 1)) : resume;
    double kappa;
    if (sign * zeta(a) >= p.lambda) {
      // Residual sits at the threshold at the previous fold and keeps
      // violating: the crossing is immediate.
      kappa = a + time_tol;
    } else {
      double lo = a;
      double hi = ti;
      while (hi - lo > time_tol) {
        const double mid = 0.5 * (lo + hi);
        if (sign * zeta(mid) >= p.lambda) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      kappa = hi;
    }
    record(kappa, sign);

    if (detect_alpha == 0.0) {
      // The jump lands at -sign * (lambda - h); values past the threshold
      // (possible only for h >= 2 lambda) refold at the same instant.
      int instant = 0;
      while (std::abs(zeta(kappa)) >= refold_gate) {
        if (++instant > 3) {
          throw RunawayFoldError("encode: runaway refolds at t = " + std::to_string(kappa) +
                                 "; fold height 2*lambda - h is not positive");
        }
        record(kappa, zeta(kappa) >= 0.0 ? 1 : -1);
      }
    }

    resume = kappa;
    while (i < grid.count && grid.time(i) <= resume) {
      ++i;
    }
  }
  return folds;
}

EncodedTrace assemble(const BandlimitedSignal& g, const HysteresisParams& p,
                      const TimeGrid& grid, std::vector<Fold> folds, EncoderKind kind) {
  EncodedTrace trace;
  trace.grid = grid;
  trace.kind = kind;
  trace.folds = std::move(folds);
  trace.output.resize(grid.count);
  const double height = p.fold_height();
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double t = grid.time(i);
    trace.output[i] = g(t) - fold_sum(trace.folds, height, p.alpha, t);
  }
  return trace;
}

}  // namespace

double ideal_modulo(double v, double lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("ideal_modulo: lambda must be positive");
  }
  return v - 2.0 * lambda * std::floor((v + lambda) / (2.0 * lambda));
}

double transient(double t, double alpha) {
  if (alpha == 0.0) {
    return t >= 0.0 ? 1.0 : 0.0;
  }
  if (t < 0.0) {
    return 0.0;
  }
  return t < alpha ? t / alpha : 1.0;
}

double fold_signal_at(std::span<const Fold> folds, const HysteresisParams& params, double t) {
  return fold_sum(folds, params.fold_height(), params.alpha, t);
}

std::vector<double> build_fold_signal(std::span<const Fold> folds,
                                      const HysteresisParams& params, const TimeGrid& grid) {
  for (std::size_t k = 1; k < folds.size(); ++k) {
    if (folds[k].time < folds[k - 1].time) {
      throw std::invalid_argument("build_fold_signal: folds must be time-sorted");
    }
  }
  std::vector<double> out(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    out[i] = fold_signal_at(folds, params, grid.time(i));
  }
  return out;
}

EncodedTrace encode_modified(const BandlimitedSignal& g, const HysteresisParams& params,
                             const TimeGrid& grid, const EncodeOptions& opts) {
  validate_encode_args(g, params, grid);
  const std::size_t cap = opts.max_folds > 0 ? opts.max_folds : grid.count / 2;
  auto folds = detect_folds(g, params, grid, params.alpha, cap);
  return assemble(g, params, grid, std::move(folds), EncoderKind::Modified);
}

EncodedTrace encode_generalized(const BandlimitedSignal& g, const HysteresisParams& params,
                                const TimeGrid& grid, const EncodeOptions& opts) {
  validate_encode_args(g, params, grid);
  const std::size_t cap = opts.max_folds > 0 ? opts.max_folds : grid.count / 2;
  auto folds = detect_folds(g, params, grid, 0.0, cap);
  return assemble(g, params, grid, std::move(folds), EncoderKind::Generalized);
}

bool verify_separation(const EncodedTrace& trace, const HysteresisParams& params) {
  constexpr double kEventTol = 1e-9;
  for (std::size_t n = 1; n < trace.folds.size(); ++n) {
    const Fold& prev = trace.folds[n - 1];
    const Fold& cur = trace.folds[n];
    if (prev.sign != cur.sign && cur.time - prev.time < params.alpha - kEventTol) {
      return false;
    }
  }
  return true;
}

bool verify_return(const EncodedTrace& trace, const BandlimitedSignal& g,
                   const HysteresisParams& params, double tol) {
  const double threshold = std::abs(params.tau0) + 2.0 * params.alpha;
  if (trace.grid.end() < threshold) {
    throw std::invalid_argument("verify_return: grid does not extend past |tau0| + 2*alpha");
  }
  for (std::size_t i = 0; i < trace.grid.count; ++i) {
    const double t = trace.grid.time(i);
    if (t < threshold) {
      continue;
    }
    if (std::abs(trace.output[i] - g(t)) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace modhys

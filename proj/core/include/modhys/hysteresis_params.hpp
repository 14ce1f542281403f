#pragma once

#include <limits>

namespace modhys {

// Parameter triplet of the hysteresis encoders plus the starting point of
// fold tracking.  The fold height is 2*lambda - h; a non-instantaneous fold
// is a linear ramp of duration alpha.
//
// tau0 defaults to NaN, meaning "derive from the sampling window"
// (end_to_end_trial and the CLI resolve it to -K*T).  The encoders themselves
// require a finite tau0.
struct HysteresisParams {
  double lambda = 0.1;  // modulo threshold, > 0
  double h = 0.0;       // hysteresis, >= 0 (Lemma-style guarantees need h < lambda)
  double alpha = 0.0;   // transient duration in seconds, >= 0
  double tau0 = std::numeric_limits<double>::quiet_NaN();

  double fold_height() const { return 2.0 * lambda - h; }
};

}  // namespace modhys

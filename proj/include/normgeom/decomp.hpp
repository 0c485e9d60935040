#pragma once

// Wigner caustic and constant width measure set as linear maps on admissible
// curves, realized through their radius functions.

#include "normgeom/curve.hpp"

namespace normgeom {

// t -> (gamma(t) + gamma(t + T)) / 2, radius (r(t) - r(t + T)) / 2.
// T-periodic, so it traverses its loop twice over [t_0, t_0 + 2T].
AdmissibleCurve wigner_caustic(const AdmissibleCurve& curve);

// t -> (gamma(t) - gamma(t + T) - w u(t)) / 2, radius (r(t) + r(t + T) - w) / 2,
// with w the mean width.
AdmissibleCurve cwms(const AdmissibleCurve& curve);
// The same map with an arbitrary width w in place of the mean width.
AdmissibleCurve cwms_with_width(const AdmissibleCurve& curve, double w);

struct DecompositionResult {
  AdmissibleCurve wc;
  AdmissibleCurve cwms;
  double mean_width = 0.0;
  // max |gamma - (wc + cwms + w/2 u)| over the check nodes.
  double residual = 0.0;
};

// Throws DecompositionResidual when the pointwise identity fails by more
// than the curve's closure tolerance.
DecompositionResult decompose(const AdmissibleCurve& curve);

}  // namespace normgeom

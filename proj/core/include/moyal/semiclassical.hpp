#pragma once

// theta -> 0 behaviour of the deformed product. Expanding the single-integral
// formula to first order gives
//
//   f * g = f g - (theta / (2 pi i)) {f, g}_sigma + O(theta^2),
//
// hence (1/theta)[f, g]_* = -(1 / (pi i)) {f, g}_sigma + O(theta).

#include <vector>

#include "moyal/geometry.hpp"
#include "moyal/grid.hpp"

namespace moyal {

struct SweepRow {
  double theta = 0.0;
  double d1 = 0.0;  ///< ||f *_theta g - f g||_2
  double d2 = 0.0;  ///< ||(1/theta)[f, g]_* + (1/(pi i)) {f, g}_sigma||_2
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double slope_d1 = 0.0;  ///< least-squares slope of log d1 against log theta
  double slope_d2 = 0.0;
};

/// Throws InvariantError unless thetas is nonempty, positive and strictly
/// decreasing. The theta stored in the specs of f and g is ignored. Slopes
/// are NaN for a single-row sweep.
SweepResult semiclassical_sweep(const GridFunction& f, const GridFunction& g, const SkewForm& sigma,
                                const std::vector<double>& thetas);

/// Ordinary least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace moyal

#pragma once

#include <cmath>
#include <limits>

#include "isoconv/errors.hpp"

namespace isoconv {

/// Grids, tolerances and difference steps used by every numeric decision.
/// The grid is a log-spaced grid in the stretch ratio t; the theta, eta and r
/// grids are its images, so checks in different representations see matched
/// points.
struct CheckConfig {
  double grid_min = 1.0 + 1e-6;
  double grid_max = 1e3;
  int grid_n = 2048;
  double tol_abs = 1e-7;
  double tol_rel = 1e-9;
  double d1_step = std::cbrt(std::numeric_limits<double>::epsilon());
  double d2_step = std::pow(std::numeric_limits<double>::epsilon(), 0.25);
  /// Points per axis of the 2-D grid used for separate convexity.
  int grid2_n = 96;

  void validate() const {
    if (!(grid_min > 1.0) || !(grid_max > grid_min) || !std::isfinite(grid_max)) {
      throw Error(ErrorKind::InvalidConfig, "grid needs 1 < grid_min < grid_max < inf");
    }
    if (grid_n < 16) throw Error(ErrorKind::InvalidConfig, "grid_n must be at least 16");
    if (grid2_n < 4) throw Error(ErrorKind::InvalidConfig, "grid2_n must be at least 4");
    if (!(tol_abs > 0.0) || !(tol_rel > 0.0)) throw Error(ErrorKind::InvalidConfig, "tolerances must be positive");
    if (!(d1_step > 0.0) || !(d2_step > 0.0)) throw Error(ErrorKind::InvalidConfig, "steps must be positive");
  }
};

}  // namespace isoconv

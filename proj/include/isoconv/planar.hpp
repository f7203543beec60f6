#pragma once

// Closed-form planar kinematics: singular values, right stretch, logarithmic
// strain, distortion, and distances to SO(2).

#include "isoconv/mat2.hpp"

namespace isoconv {

/// Singular values of F in GL+(2), lambda1 >= lambda2 > 0.
struct SingularPair {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
};

/// Isochoric invariants of F in GL+(2).
///   ratio      t = lambda1 / lambda2 >= 1
///   theta      log^2 t
///   eta        ||dev2 log U||^2 = theta / 2
///   distortion K = (t + 1/t) / 2 = ||F||^2 / (2 det F)
struct Invariants2 {
  double ratio = 1.0;
  double theta = 0.0;
  double eta = 0.0;
  double distortion = 1.0;
};

/// sqrt(||F||^2 + 2 det F) = lambda1 + lambda2, evaluated as a sum of squares.
double trace_stretch(const Mat2& F);
/// sqrt(||F||^2 - 2 det F) = lambda1 - lambda2, evaluated as a sum of squares.
double stretch_gap(const Mat2& F);

SingularPair svd2(const Mat2& F);
Mat2 polar_u(const Mat2& F);
Mat2 log_spd(const Mat2& U);
Mat2 dev2(const Mat2& X);
double distortion_k(const Mat2& F);

/// Computed from the singular values, never through the matrix logarithm, so it
/// stays accurate for nearly conformal F.
Invariants2 invariants(const Mat2& F);
Invariants2 invariants(const SingularPair& s);

/// inf over R in SO(2) of ||F - R||^2; defined on all of R^{2x2}.
double dist_euclid_sq_so2(const Mat2& F);
/// Quasiconvex hull of dist_euclid_sq_so2; defined on all of R^{2x2}.
double qc_hull_dist_sq_so2(const Mat2& F);

}  // namespace isoconv

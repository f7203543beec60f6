#pragma once

// Shared helpers for the test suites: an independent random source for
// matrices and Eigen-based reference computations.

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "isoconv/mat2.hpp"

namespace testing_support {

using isoconv::Mat2;

inline Eigen::Matrix2d to_eigen(const Mat2& F) {
  Eigen::Matrix2d m;
  m << F.a11(), F.a12(), F.a21(), F.a22();
  return m;
}

inline Mat2 from_eigen(const Eigen::Matrix2d& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

/// Random F with det > 0: rotation * diag(l1, l2) * rotation, log-uniform
/// singular values in [lo, hi].
class MatrixSource {
 public:
  explicit MatrixSource(unsigned seed, double lo = 0.05, double hi = 20.0) : rng_(seed), lo_(lo), hi_(hi) {}

  Mat2 glp() {
    std::uniform_real_distribution<double> logs(std::log(lo_), std::log(hi_));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const double l1 = std::exp(logs(rng_));
    const double l2 = std::exp(logs(rng_));
    return Mat2::rotation(angle(rng_)) * Mat2::diag(l1, l2) * Mat2::rotation(angle(rng_));
  }

  /// Entries uniform in [-2, 2]; any sign of det.
  Mat2 any() {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    return {u(rng_), u(rng_), u(rng_), u(rng_)};
  }

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

 private:
  std::mt19937_64 rng_;
  double lo_;
  double hi_;
};

/// Singular values from Eigen's Jacobi SVD, descending.
inline Eigen::Vector2d singular_values(const Mat2& F) {
  return Eigen::JacobiSVD<Eigen::Matrix2d>(to_eigen(F)).singularValues();
}

/// U = sqrt(F^T F) from a symmetric eigendecomposition.
inline Eigen::Matrix2d right_stretch(const Mat2& F) {
  const Eigen::Matrix2d m = to_eigen(F);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m.transpose() * m);
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

inline Eigen::Matrix2d spd_log(const Eigen::Matrix2d& U) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(U);
  return es.eigenvectors() * es.eigenvalues().array().log().matrix().asDiagonal() * es.eigenvectors().transpose();
}

/// ||dev2 log U||^2 by matrix logarithm.
inline double eta_by_matrix_log(const Mat2& F) {
  const Eigen::Matrix2d L = spd_log(right_stretch(F));
  const Eigen::Matrix2d dev = L - 0.5 * L.trace() * Eigen::Matrix2d::Identity();
  return dev.squaredNorm();
}

/// min over a uniform rotation grid of ||F - R||^2, refined by golden section
/// around the best grid angle.
inline double rotation_grid_min(const Mat2& F, int n) {
  auto dist = [&](double a) { return (F - Mat2::rotation(a)).frob_sq(); };
  const double step = 2.0 * M_PI / n;
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (dist(i * step) < dist(best * step)) best = i;
  }
  double a = (best - 1) * step;
  double b = (best + 1) * step;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 200; ++it) {
    const double c = b - g * (b - a);
    const double d = a + g * (b - a);
    if (dist(c) < dist(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  return std::min(dist(best * step), dist(0.5 * (a + b)));
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace testing_support

#include "isoconv/planar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace isoconv {

std::string Mat2::str() const {
  std::ostringstream os;
  os.precision(17);
  os << "[[" << a11_ << ", " << a12_ << "], [" << a21_ << ", " << a22_ << "]]";
  return os.str();
}

namespace {

void require_positive_det(const Mat2& F) {
  if (!(F.det() > 0.0)) {
    throw Error(ErrorKind::NonPositiveDeterminant, "det F must be positive, got F = " + F.str());
  }
}

}  // namespace

// ||F||^2 + 2 det F = (a11 + a22)^2 + (a21 - a12)^2 and
// ||F||^2 - 2 det F = (a11 - a22)^2 + (a12 + a21)^2, so both radicands are
// sums of squares and never go negative through cancellation.
double trace_stretch(const Mat2& F) { return std::hypot(F.a11() + F.a22(), F.a21() - F.a12()); }

double stretch_gap(const Mat2& F) { return std::hypot(F.a11() - F.a22(), F.a12() + F.a21()); }

SingularPair svd2(const Mat2& F) {
  require_positive_det(F);
  const double sum = trace_stretch(F);
  const double gap = stretch_gap(F);
  const double lambda1 = 0.5 * (sum + gap);
  // lambda2 = (sum - gap)/2 cancels badly for strongly anisotropic F; the
  // quotient keeps lambda1 * lambda2 = det F to one rounding.
  const double lambda2 = std::min(F.det() / lambda1, lambda1);
  return {lambda1, lambda2};
}

Mat2 polar_u(const Mat2& F) {
  require_positive_det(F);
  const Mat2 C = F.transpose() * F;
  const double d = F.det();
  const double denom = trace_stretch(F);
  return {(C.a11() + d) / denom, C.a12() / denom, C.a21() / denom, (C.a22() + d) / denom};
}

Mat2 log_spd(const Mat2& U) {
  const double asym = std::abs(U.a12() - U.a21());
  if (asym > 1e-12 * U.frob()) {
    throw Error(ErrorKind::NotSymmetric, "log_spd expects a symmetric matrix, got " + U.str());
  }
  const double p = U.a11();
  const double s = U.a22();
  const double m = 0.5 * (U.a12() + U.a21());
  const double mean = 0.5 * (p + s);
  const double radius = std::hypot(0.5 * (p - s), m);
  const double mu1 = mean + radius;
  const double det = p * s - m * m;
  if (!(mu1 > 0.0) || !(det > 0.0)) {
    throw Error(ErrorKind::NotPositiveDefinite, "log_spd expects a positive definite matrix, got " + U.str());
  }
  const double mu2 = std::min(det / mu1, mu1);
  const double l1 = std::log(mu1);
  const double l2 = std::log(mu2);

  // Eigenvector of mu1 is (cos phi, sin phi).
  const double phi = 0.5 * std::atan2(2.0 * m, p - s);
  const double c = std::cos(phi);
  const double sn = std::sin(phi);
  const double off = (l1 - l2) * c * sn;
  return {l1 * c * c + l2 * sn * sn, off, off, l1 * sn * sn + l2 * c * c};
}

Mat2 dev2(const Mat2& X) {
  const double half_tr = 0.5 * X.trace();
  return {X.a11() - half_tr, X.a12(), X.a21(), X.a22() - half_tr};
}

double distortion_k(const Mat2& F) {
  require_positive_det(F);
  return 0.5 * F.frob_sq() / F.det();
}

Invariants2 invariants(const Mat2& F) {
  require_positive_det(F);
  const double sum = trace_stretch(F);
  const double gap = stretch_gap(F);
  // log(lambda1/lambda2) = log((sum + gap)/(sum - gap)) = 2 atanh(gap/sum)
  const double log_ratio = 2.0 * std::atanh(gap / sum);
  const SingularPair s = svd2(F);
  Invariants2 inv;
  inv.ratio = s.lambda1 / s.lambda2;
  inv.theta = log_ratio * log_ratio;
  inv.eta = 0.5 * inv.theta;
  inv.distortion = std::max(1.0, distortion_k(F));
  return inv;
}

Invariants2 invariants(const SingularPair& s) {
  const double hi = std::max(s.lambda1, s.lambda2);
  const double lo = std::min(s.lambda1, s.lambda2);
  if (!(lo > 0.0) || !std::isfinite(hi)) {
    throw Error(ErrorKind::NonPositiveDeterminant, "singular values must be positive and finite");
  }
  const double log_ratio = std::log1p((hi - lo) / lo);
  Invariants2 inv;
  inv.ratio = hi / lo;
  inv.theta = log_ratio * log_ratio;
  inv.eta = 0.5 * inv.theta;
  inv.distortion = std::max(1.0, 0.5 * (inv.ratio + 1.0 / inv.ratio));
  return inv;
}

double dist_euclid_sq_so2(const Mat2& F) { return F.frob_sq() - 2.0 * trace_stretch(F) + 2.0; }

double qc_hull_dist_sq_so2(const Mat2& F) {
  const double root = trace_stretch(F);
  const double q = root * root;
  const double null_lagrangian = 1.0 - 2.0 * F.det();
  if (q <= 1.0) return null_lagrangian;
  return (root - 1.0) * (root - 1.0) + null_lagrangian;
}

}  // namespace isoconv

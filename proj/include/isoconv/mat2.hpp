#pragma once

#include <cmath>
#include <string>

#include "isoconv/errors.hpp"

namespace isoconv {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }
};

/// Real 2x2 matrix with finite entries, stored row-major.
class Mat2 {
 public:
  constexpr Mat2() = default;

  Mat2(double a11, double a12, double a21, double a22) : a11_(a11), a12_(a12), a21_(a21), a22_(a22) {
    if (!(std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) && std::isfinite(a22))) {
      throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
    }
  }

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 diag(double a, double b) { return {a, 0.0, 0.0, b}; }
  static Mat2 rotation(double alpha) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    return {c, -s, s, c};
  }
  static Mat2 outer(const Vec2& u, const Vec2& v) { return {u.x * v.x, u.x * v.y, u.y * v.x, u.y * v.y}; }

  double a11() const { return a11_; }
  double a12() const { return a12_; }
  double a21() const { return a21_; }
  double a22() const { return a22_; }

  double det() const { return a11_ * a22_ - a12_ * a21_; }
  double trace() const { return a11_ + a22_; }
  double frob_sq() const { return a11_ * a11_ + a12_ * a12_ + a21_ * a21_ + a22_ * a22_; }
  double frob() const { return std::sqrt(frob_sq()); }

  Mat2 transpose() const { return {a11_, a21_, a12_, a22_}; }

  Mat2 inverse() const {
    const double d = det();
    if (d == 0.0) throw Error(ErrorKind::NonPositiveDeterminant, "singular matrix has no inverse");
    return {a22_ / d, -a12_ / d, -a21_ / d, a11_ / d};
  }

  /// Inner product <A, B> = tr(A^T B).
  double dot(const Mat2& o) const { return a11_ * o.a11_ + a12_ * o.a12_ + a21_ * o.a21_ + a22_ * o.a22_; }

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.a11_ + b.a11_, a.a12_ + b.a12_, a.a21_ + b.a21_, a.a22_ + b.a22_};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.a11_ - b.a11_, a.a12_ - b.a12_, a.a21_ - b.a21_, a.a22_ - b.a22_};
  }
  friend Mat2 operator*(double s, const Mat2& a) { return {s * a.a11_, s * a.a12_, s * a.a21_, s * a.a22_}; }
  friend Mat2 operator*(const Mat2& a, double s) { return s * a; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11_ * b.a11_ + a.a12_ * b.a21_, a.a11_ * b.a12_ + a.a12_ * b.a22_,
            a.a21_ * b.a11_ + a.a22_ * b.a21_, a.a21_ * b.a12_ + a.a22_ * b.a22_};
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::string str() const;

 private:
  double a11_ = 0.0;
  double a12_ = 0.0;
  double a21_ = 0.0;
  double a22_ = 0.0;
};

}  // namespace isoconv

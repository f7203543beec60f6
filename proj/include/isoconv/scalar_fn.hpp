#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "isoconv/mat2.hpp"

namespace isoconv {

using RealFn = std::function<double(double)>;
using RealFn2 = std::function<double(double, double)>;
using MatrixFn = std::function<double(const Mat2&)>;

/// Interval [lo, hi) or (lo, hi); hi may be +inf.
struct Domain {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = false;

  static Domain closed_from(double lo) { return {lo, std::numeric_limits<double>::infinity(), false}; }
  static Domain open_from(double lo) { return {lo, std::numeric_limits<double>::infinity(), true}; }

  bool contains(double x) const { return (lo_open ? x > lo : x >= lo) && x < hi; }
  std::string str() const;
};

/// Real function of one variable with optional analytic derivatives.
/// Evaluation outside the domain, or a non-finite result, raises DomainError.
class ScalarFn {
 public:
  ScalarFn() = default;
  ScalarFn(RealFn eval, Domain domain, RealFn d1 = {}, RealFn d2 = {});

  /// Same as the constructor, then samples eval over the domain and raises
  /// RegistrationFailed if any sample is non-finite.
  static ScalarFn registered(RealFn eval, Domain domain, RealFn d1 = {}, RealFn d2 = {});

  double operator()(double x) const;
  double d1(double x) const;
  double d2(double x) const;

  bool has_d1() const { return static_cast<bool>(d1_); }
  bool has_d2() const { return static_cast<bool>(d2_); }
  bool valid() const { return static_cast<bool>(eval_); }
  const Domain& domain() const { return domain_; }

  ScalarFn without_derivatives() const { return ScalarFn(eval_, domain_); }

  /// Deterministic sample points inside the domain, used by registration checks.
  std::vector<double> registration_samples() const;

 private:
  RealFn eval_;
  RealFn d1_;
  RealFn d2_;
  Domain domain_;
};

/// g(l1, l2) on (0, inf)^2, symmetric in its arguments.
class SymmetricFn2 {
 public:
  SymmetricFn2() = default;
  explicit SymmetricFn2(RealFn2 eval, RealFn2 d11 = {}) : eval_(std::move(eval)), d11_(std::move(d11)) {}

  /// Checks g(x, y) = g(y, x) to 1e-12 relative on a fixed sample, raising
  /// RegistrationFailed otherwise.
  static SymmetricFn2 registered(RealFn2 eval, RealFn2 d11 = {});

  double operator()(double l1, double l2) const;
  /// Analytic second partial in l1, when one was supplied.
  double d11(double l1, double l2) const;
  bool has_d11() const { return static_cast<bool>(d11_); }
  bool valid() const { return static_cast<bool>(eval_); }

 private:
  RealFn2 eval_;
  RealFn2 d11_;
};

}  // namespace isoconv

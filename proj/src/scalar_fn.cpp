#include "isoconv/scalar_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "isoconv/format.hpp"

namespace isoconv {

std::string Domain::str() const {
  std::string out = lo_open ? "(" : "[";
  out += format_real(lo) + ", ";
  out += std::isinf(hi) ? "inf" : format_real(hi);
  out += ")";
  return out;
}

ScalarFn::ScalarFn(RealFn eval, Domain domain, RealFn d1, RealFn d2)
    : eval_(std::move(eval)), d1_(std::move(d1)), d2_(std::move(d2)), domain_(domain) {
  if (!eval_) throw Error(ErrorKind::InvalidConfig, "ScalarFn needs an evaluation callable");
}

namespace {

double checked(const RealFn& fn, const Domain& dom, double x, const char* what) {
  if (!dom.contains(x)) {
    throw Error(ErrorKind::DomainError, std::string(what) + " at " + format_real(x) + " outside " + dom.str());
  }
  const double v = fn(x);
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::DomainError, std::string(what) + " is not finite at " + format_real(x));
  }
  return v;
}

}  // namespace

double ScalarFn::operator()(double x) const { return checked(eval_, domain_, x, "value"); }

double ScalarFn::d1(double x) const {
  if (!d1_) throw Error(ErrorKind::InvalidConfig, "no analytic first derivative registered");
  return checked(d1_, domain_, x, "first derivative");
}

double ScalarFn::d2(double x) const {
  if (!d2_) throw Error(ErrorKind::InvalidConfig, "no analytic second derivative registered");
  return checked(d2_, domain_, x, "second derivative");
}

std::vector<double> ScalarFn::registration_samples() const {
  static constexpr std::array<double, 9> offsets = {0.0, 1e-6, 1e-3, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  std::vector<double> xs;
  for (double off : offsets) {
    const double x = domain_.lo + off;
    if (domain_.contains(x)) xs.push_back(x);
  }
  if (xs.empty() && std::isfinite(domain_.hi)) xs.push_back(0.5 * (domain_.lo + domain_.hi));
  return xs;
}

ScalarFn ScalarFn::registered(RealFn eval, Domain domain, RealFn d1, RealFn d2) {
  ScalarFn fn(std::move(eval), domain, std::move(d1), std::move(d2));
  for (double x : fn.registration_samples()) {
    double v = 0.0;
    try {
      v = fn.eval_(x);
    } catch (const Error& e) {
      throw Error(ErrorKind::RegistrationFailed, "evaluation failed at " + format_real(x) + ": " + e.what());
    }
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::RegistrationFailed, "value is not finite at " + format_real(x));
    }
  }
  return fn;
}

double SymmetricFn2::operator()(double l1, double l2) const {
  if (!(l1 > 0.0) || !(l2 > 0.0) || !std::isfinite(l1) || !std::isfinite(l2)) {
    throw Error(ErrorKind::DomainError, "g expects positive finite arguments, got (" + format_real(l1) + ", " +
                                            format_real(l2) + ")");
  }
  const double v = eval_(l1, l2);
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::DomainError,
                "g is not finite at (" + format_real(l1) + ", " + format_real(l2) + ")");
  }
  return v;
}

double SymmetricFn2::d11(double l1, double l2) const {
  (*this)(l1, l2);
  const double v = d11_(l1, l2);
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::DomainError,
                "d2g/dl1^2 is not finite at (" + format_real(l1) + ", " + format_real(l2) + ")");
  }
  return v;
}

SymmetricFn2 SymmetricFn2::registered(RealFn2 eval, RealFn2 d11) {
  SymmetricFn2 g(std::move(eval), std::move(d11));
  static constexpr std::array<double, 7> pts = {0.1, 0.5, 0.9, 1.0, 1.7, 3.0, 11.0};
  for (double x : pts) {
    for (double y : pts) {
      double a = 0.0;
      double b = 0.0;
      try {
        a = g(x, y);
        b = g(y, x);
      } catch (const Error& e) {
        throw Error(ErrorKind::RegistrationFailed, std::string("g evaluation failed: ") + e.what());
      }
      if (std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)})) {
        throw Error(ErrorKind::RegistrationFailed, "g is not symmetric: g(" + format_real(x) + ", " +
                                                       format_real(y) + ") != g(" + format_real(y) + ", " +
                                                       format_real(x) + ")");
      }
    }
  }
  return g;
}

}  // namespace isoconv

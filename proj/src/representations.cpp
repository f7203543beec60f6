#include "isoconv/representations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "isoconv/format.hpp"
#include "isoconv/planar.hpp"

namespace isoconv {

std::string_view to_string(RepKind kind) {
  switch (kind) {
    case RepKind::MatrixW: return "W";
    case RepKind::SymmetricG: return "g";
    case RepKind::RatioH: return "h";
    case RepKind::LogSqF: return "f";
    case RepKind::StrainFTilde: return "ftilde";
    case RepKind::DistortionZ: return "z";
  }
  return "?";
}

namespace {

const Domain kRatioDomain = Domain::open_from(0.0);
const Domain kHalfLine = Domain::closed_from(0.0);
const Domain kDistortionDomain = Domain::closed_from(1.0);

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

const std::array<Mat2, 5>& scaling_sample() {
  static const std::array<Mat2, 5> sample = {
      Mat2::diag(2.0, 1.0),
      Mat2{1.0, 1.0, 0.0, 1.0},
      Mat2{0.3, -0.2, 0.5, 1.7},
      Mat2::rotation(0.4) * Mat2::diag(5.0, 0.5) * Mat2::rotation(-1.1),
      Mat2{1.0, 0.0, 0.0, 1.0},
  };
  return sample;
}

constexpr std::array<double, 4> kScalings = {1.0 / 7.0, 0.5, 3.0, 42.0};

void check_ratio_symmetry(const ScalarFn& h) {
  constexpr int n = 64;
  const double lo = std::log(1.0001);
  const double hi = std::log(1e3);
  for (int i = 0; i < n; ++i) {
    const double t = std::exp(lo + (hi - lo) * i / (n - 1));
    double a = 0.0;
    double b = 0.0;
    try {
      a = h(t);
      b = h(1.0 / t);
    } catch (const Error& e) {
      throw Error(ErrorKind::RegistrationFailed, std::string("h evaluation failed: ") + e.what());
    }
    if (!close_rel(a, b, 1e-10)) {
      throw Error(ErrorKind::RegistrationFailed,
                  "h(t) != h(1/t) at t = " + format_real(t) + ": " + format_real(a) + " vs " + format_real(b));
    }
  }
}

void check_scaling(const MatrixFn& w) {
  for (const Mat2& F : scaling_sample()) {
    const double base = w(F);
    for (double a : kScalings) {
      const double scaled = w(a * F);
      if (!close_rel(base, scaled, 1e-9)) {
        throw Error(ErrorKind::NotIsochoric, "W(aF) != W(F) for a = " + format_real(a) + " at F = " + F.str());
      }
    }
  }
}

}  // namespace

EnergyRep EnergyRep::matrix(std::string name, MatrixFn w, bool isochoric) {
  if (!w) throw Error(ErrorKind::InvalidConfig, "matrix energy needs a callable");
  if (isochoric) check_scaling(w);
  return EnergyRep(RepKind::MatrixW, std::move(name), std::move(w), isochoric);
}

EnergyRep EnergyRep::symmetric_g(std::string name, SymmetricFn2 g, bool isochoric) {
  if (!g.valid()) throw Error(ErrorKind::InvalidConfig, "g needs a callable");
  if (isochoric && !looks_isochoric(g)) throw Error(ErrorKind::NotIsochoric, "g(ax, ay) != g(x, y)");
  return EnergyRep(RepKind::SymmetricG, std::move(name), std::move(g), isochoric);
}

EnergyRep EnergyRep::ratio_h(std::string name, ScalarFn h) {
  check_ratio_symmetry(h);
  return EnergyRep(RepKind::RatioH, std::move(name), std::move(h), true);
}

EnergyRep EnergyRep::log_sq_f(std::string name, ScalarFn f) {
  return EnergyRep(RepKind::LogSqF, std::move(name), std::move(f), true);
}

EnergyRep EnergyRep::strain_ftilde(std::string name, ScalarFn ftilde) {
  return EnergyRep(RepKind::StrainFTilde, std::move(name), std::move(ftilde), true);
}

EnergyRep EnergyRep::distortion_z(std::string name, ScalarFn z) {
  return EnergyRep(RepKind::DistortionZ, std::move(name), std::move(z), true);
}

const ScalarFn& EnergyRep::scalar() const {
  if (const auto* p = std::get_if<ScalarFn>(&payload_)) return *p;
  throw Error(ErrorKind::InvalidConfig, "energy '" + name_ + "' has no scalar payload");
}

const SymmetricFn2& EnergyRep::g() const {
  if (const auto* p = std::get_if<SymmetricFn2>(&payload_)) return *p;
  throw Error(ErrorKind::InvalidConfig, "energy '" + name_ + "' has no g payload");
}

const MatrixFn& EnergyRep::matrix_fn() const {
  if (const auto* p = std::get_if<MatrixFn>(&payload_)) return *p;
  throw Error(ErrorKind::InvalidConfig, "energy '" + name_ + "' has no matrix payload");
}

EnergyRep h_from_matrix(const EnergyRep& w) {
  if (w.kind() != RepKind::MatrixW) throw Error(ErrorKind::InvalidConfig, "h_from_matrix expects a matrix energy");
  const MatrixFn& W = w.matrix_fn();
  check_scaling(W);
  ScalarFn h(
      [W](double t) { return W(Mat2::diag(t, 1.0)); },
      kRatioDomain);
  return EnergyRep::ratio_h(w.name(), std::move(h));
}

EnergyRep h_from_g(const SymmetricFn2& g) {
  ScalarFn h(
      [g](double t) {
        const double s = std::sqrt(t);
        return g(s, 1.0 / s);
      },
      kRatioDomain);
  return EnergyRep::ratio_h("h", std::move(h));
}

ScalarFn f_from_h(const ScalarFn& h) {
  RealFn eval = [h](double theta) { return h(std::exp(std::sqrt(theta))); };
  if (!(h.has_d1() && h.has_d2())) return ScalarFn(eval, kHalfLine);

  RealFn d1 = [h](double theta) {
    const double u = std::sqrt(theta);
    if (u == 0.0) return 0.5 * h.d2(1.0);
    const double t = std::exp(u);
    return h.d1(t) * t / (2.0 * u);
  };
  RealFn d2 = [h](double theta) {
    const double u = std::sqrt(theta);
    if (u == 0.0) return std::numeric_limits<double>::quiet_NaN();
    const double t = std::exp(u);
    const double hp = h.d1(t);
    const double hpp = h.d2(t);
    return (hpp * t * t + hp * t) / (4.0 * u * u) - hp * t / (4.0 * u * u * u);
  };
  return ScalarFn(eval, kHalfLine, d1, d2);
}

ScalarFn h_from_f(const ScalarFn& f) {
  RealFn eval = [f](double t) {
    const double L = std::log(t);
    return f(L * L);
  };
  if (!(f.has_d1() && f.has_d2())) return ScalarFn(eval, kRatioDomain);

  RealFn d1 = [f](double t) {
    const double L = std::log(t);
    return f.d1(L * L) * 2.0 * L / t;
  };
  RealFn d2 = [f](double t) {
    const double L = std::log(t);
    const double theta = L * L;
    return (4.0 * theta * f.d2(theta) + 2.0 * (1.0 - L) * f.d1(theta)) / (t * t);
  };
  return ScalarFn(eval, kRatioDomain, d1, d2);
}

ScalarFn ftilde_from_f(const ScalarFn& f) {
  RealFn eval = [f](double eta) { return f(2.0 * eta); };
  if (!(f.has_d1() && f.has_d2())) return ScalarFn(eval, kHalfLine);
  return ScalarFn(eval, kHalfLine, [f](double eta) { return 2.0 * f.d1(2.0 * eta); },
                  [f](double eta) { return 4.0 * f.d2(2.0 * eta); });
}

ScalarFn f_from_ftilde(const ScalarFn& ftilde) {
  RealFn eval = [ftilde](double theta) { return ftilde(0.5 * theta); };
  if (!(ftilde.has_d1() && ftilde.has_d2())) return ScalarFn(eval, kHalfLine);
  return ScalarFn(eval, kHalfLine, [ftilde](double theta) { return 0.5 * ftilde.d1(0.5 * theta); },
                  [ftilde](double theta) { return 0.25 * ftilde.d2(0.5 * theta); });
}

namespace {

// Inverse of p(t) = (t + 1/t)/2 on [1, inf); r^2 - 1 is formed as (r-1)(r+1).
double q_of(double r) { return r + std::sqrt((r - 1.0) * (r + 1.0)); }

double p_of(double t) { return std::max(1.0, 0.5 * (t + 1.0 / t)); }

}  // namespace

ScalarFn z_from_h(const ScalarFn& h) {
  RealFn eval = [h](double r) { return h(q_of(r)); };
  if (!(h.has_d1() && h.has_d2())) return ScalarFn(eval, kDistortionDomain);

  // With t = q(r): z' = h'(t)/p'(t), z'' = (h''(t) - z' p''(t))/p'(t)^2.
  RealFn d1 = [h](double r) {
    if (r == 1.0) return h.d2(1.0);
    const double t = q_of(r);
    return h.d1(t) / (0.5 * (1.0 - 1.0 / (t * t)));
  };
  RealFn d2 = [h](double r) {
    if (r == 1.0) return std::numeric_limits<double>::quiet_NaN();
    const double t = q_of(r);
    const double pp = 0.5 * (1.0 - 1.0 / (t * t));
    const double zp = h.d1(t) / pp;
    return (h.d2(t) - zp / (t * t * t)) / (pp * pp);
  };
  return ScalarFn(eval, kDistortionDomain, d1, d2);
}

ScalarFn h_from_z(const ScalarFn& z) {
  RealFn eval = [z](double t) { return z(p_of(t)); };
  if (!(z.has_d1() && z.has_d2())) return ScalarFn(eval, kRatioDomain);

  RealFn d1 = [z](double t) { return z.d1(p_of(t)) * 0.5 * (1.0 - 1.0 / (t * t)); };
  RealFn d2 = [z](double t) {
    const double r = p_of(t);
    const double pp = 0.5 * (1.0 - 1.0 / (t * t));
    return z.d2(r) * pp * pp + z.d1(r) / (t * t * t);
  };
  return ScalarFn(eval, kRatioDomain, d1, d2);
}

SymmetricFn2 g_from_h(const ScalarFn& h) {
  RealFn2 d11;
  if (h.has_d1() && h.has_d2()) {
    // x >= y: h(x/y); x < y: h(y/x), by symmetry of h.
    d11 = [h](double x, double y) {
      if (x >= y) return h.d2(x / y) / (y * y);
      const double t = y / x;
      return (h.d2(t) * t * t + 2.0 * h.d1(t) * t) / (x * x);
    };
  }
  return SymmetricFn2([h](double x, double y) { return h(x / y); }, std::move(d11));
}

SymmetricFn2 g_from_matrix(const MatrixFn& w) {
  return SymmetricFn2::registered([w](double x, double y) { return w(Mat2::diag(x, y)); });
}

bool looks_isochoric(const SymmetricFn2& g) {
  static constexpr std::array<std::array<double, 2>, 4> pts = {{{1.0, 1.0}, {2.0, 1.0}, {0.3, 1.7}, {5.0, 0.5}}};
  for (const auto& p : pts) {
    const double base = g(p[0], p[1]);
    for (double a : kScalings) {
      if (!close_rel(base, g(a * p[0], a * p[1]), 1e-9)) return false;
    }
  }
  return true;
}

ScalarFn to_ratio_h(const EnergyRep& e) {
  if (!e.isochoric_declared()) {
    throw Error(ErrorKind::NotIsochoric, "energy '" + e.name() + "' is not declared isochoric");
  }
  switch (e.kind()) {
    case RepKind::MatrixW: return h_from_matrix(e).scalar();
    case RepKind::SymmetricG: return h_from_g(e.g()).scalar();
    case RepKind::RatioH: return e.scalar();
    case RepKind::LogSqF: return h_from_f(e.scalar());
    case RepKind::StrainFTilde: return h_from_f(f_from_ftilde(e.scalar()));
    case RepKind::DistortionZ: return h_from_z(e.scalar());
  }
  throw Error(ErrorKind::InvalidConfig, "unknown representation");
}

ScalarForms scalar_forms(const EnergyRep& e) {
  ScalarForms out;
  switch (e.kind()) {
    case RepKind::LogSqF:
      out.f = e.scalar();
      out.ftilde = ftilde_from_f(out.f);
      out.h = h_from_f(out.f);
      out.z = z_from_h(out.h);
      return out;
    case RepKind::StrainFTilde:
      out.ftilde = e.scalar();
      out.f = f_from_ftilde(out.ftilde);
      out.h = h_from_f(out.f);
      out.z = z_from_h(out.h);
      return out;
    case RepKind::DistortionZ:
      out.z = e.scalar();
      out.h = h_from_z(out.z);
      out.f = f_from_h(out.h);
      out.ftilde = ftilde_from_f(out.f);
      return out;
    default:
      out.h = to_ratio_h(e);
      out.f = f_from_h(out.h);
      out.ftilde = ftilde_from_f(out.f);
      out.z = z_from_h(out.h);
      return out;
  }
}

double eval_at_matrix(const EnergyRep& e, const Mat2& F) {
  if (e.kind() == RepKind::MatrixW) return e.matrix_fn()(F);
  const SingularPair s = svd2(F);
  if (e.kind() == RepKind::SymmetricG) return e.g()(s.lambda1, s.lambda2);
  const Invariants2 inv = invariants(F);
  switch (e.kind()) {
    case RepKind::RatioH: return e.scalar()(inv.ratio);
    case RepKind::LogSqF: return e.scalar()(inv.theta);
    case RepKind::StrainFTilde: return e.scalar()(inv.eta);
    case RepKind::DistortionZ: return e.scalar()(inv.distortion);
    default: break;
  }
  throw Error(ErrorKind::InvalidConfig, "unknown representation");
}

}  // namespace isoconv

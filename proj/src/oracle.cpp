#include "isoconv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace isoconv {

std::string_view to_string(OracleStatus s) {
  return s == OracleStatus::Violation ? "VIOLATION" : "CONSISTENT_CONVEX";
}

void SampleSpec::validate() const {
  if (n_points < 1) throw Error(ErrorKind::InvalidConfig, "n_points must be at least 1");
  if (!(lambda_range.first > 0.0) || !(lambda_range.second >= lambda_range.first) ||
      !std::isfinite(lambda_range.second)) {
    throw Error(ErrorKind::InvalidConfig, "lambda_range must satisfy 0 < lo <= hi < inf");
  }
  if (segment_steps < 3) throw Error(ErrorKind::InvalidConfig, "segment_steps must be at least 3");
  if (!(step_scale > 0.0)) throw Error(ErrorKind::InvalidConfig, "step_scale must be positive");
  if (!(tol_abs >= 0.0) || !(tol_rel >= 0.0)) throw Error(ErrorKind::InvalidConfig, "tolerances must be >= 0");
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// SplitMix64 stream keyed by (seed, index).
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, int index)
      : state_(mix64(seed ^ 0x5851f42d4c957f2dULL) ^ mix64(static_cast<std::uint64_t>(index) + 1)) {}

  double uniform() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

Mat2 draw_matrix(const SampleSpec& spec, SampleRng& rng) {
  const double a = std::log(spec.lambda_range.first);
  const double b = std::log(spec.lambda_range.second);
  const double l1 = std::exp(a + (b - a) * rng.uniform());
  const double l2 = std::exp(a + (b - a) * rng.uniform());
  const double alpha = 2.0 * std::numbers::pi * rng.uniform();
  const double beta = 2.0 * std::numbers::pi * rng.uniform();
  return Mat2::rotation(alpha) * Mat2::diag(l1, l2) * Mat2::rotation(beta);
}

Vec2 draw_direction(SampleRng& rng) {
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  return {std::cos(phi), std::sin(phi)};
}

double eval_finite(const MatrixFn& W, const Mat2& F) {
  const double v = W(F);
  if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "energy is not finite at " + F.str());
  return v;
}

Probe make_probe(const SampleSpec& spec, double wm, double w0, double wp, double step) {
  Probe p;
  p.raw = wp - 2.0 * w0 + wm;
  p.tolerance = spec.tol_abs + spec.tol_rel * (std::abs(wp) + 2.0 * std::abs(w0) + std::abs(wm));
  p.second_difference = p.raw / (step * step);
  return p;
}

// det(F + u D) = det F + u c for rank-one D.
double det_slope(const Mat2& F, const Mat2& D) {
  return F.a22() * D.a11() + F.a11() * D.a22() - F.a21() * D.a12() - F.a12() * D.a21();
}

}  // namespace

Mat2 sample_glp2(const SampleSpec& spec, int i) {
  SampleRng rng(spec.seed, i);
  return draw_matrix(spec, rng);
}

Probe lh_probe(const MatrixFn& W, const Mat2& F, const Vec2& xi, const Vec2& eta, const SampleSpec& spec) {
  if (!(F.det() > 0.0)) throw Error(ErrorKind::NonPositiveDeterminant, "base point must lie in GL+(2)");
  const Mat2 D = Mat2::outer(xi, eta);
  double s = spec.step_scale * F.frob() / (xi.norm() * eta.norm());
  int shrinks = 0;
  while (!((F + s * D).det() > 0.0 && (F - s * D).det() > 0.0)) {
    if (++shrinks > 3) throw Error(ErrorKind::DegenerateStencil, "stencil leaves GL+(2) at " + F.str());
    s *= 0.25;
  }
  return make_probe(spec, eval_finite(W, F - s * D), eval_finite(W, F), eval_finite(W, F + s * D), s);
}

double lh_second_difference(const MatrixFn& W, const Mat2& F, const Vec2& xi, const Vec2& eta,
                            const SampleSpec& spec) {
  return lh_probe(W, F, xi, eta, spec).second_difference;
}

Probe segment_probe(const MatrixFn& W, const Mat2& F, const Vec2& xi, const Vec2& eta, const SampleSpec& spec) {
  const double d0 = F.det();
  if (!(d0 > 0.0)) throw Error(ErrorKind::NonPositiveDeterminant, "base point must lie in GL+(2)");
  const Mat2 D = Mat2::outer(xi, eta);
  const double reach = F.frob() / (xi.norm() * eta.norm());
  double lo = -reach;
  double hi = reach;
  const double c = det_slope(F, D);
  if (c != 0.0) {
    const double root = -d0 / c;
    if (root < 0.0) lo = std::max(lo, 0.5 * root);
    if (root > 0.0) hi = std::min(hi, 0.5 * root);
  }
  if (!(hi > lo)) throw Error(ErrorKind::DegenerateStencil, "empty segment at " + F.str());

  const int n = spec.segment_steps;
  const double delta = (hi - lo) / (n - 1);
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Mat2 G = F + (lo + delta * j) * D;
    if (!(G.det() > 0.0)) throw Error(ErrorKind::DegenerateStencil, "segment leaves GL+(2) at " + F.str());
    w[static_cast<std::size_t>(j)] = eval_finite(W, G);
  }

  Probe worst;
  bool have = false;
  for (int j = 1; j + 1 < n; ++j) {
    const auto k = static_cast<std::size_t>(j);
    const Probe p = make_probe(spec, w[k - 1], w[k], w[k + 1], delta);
    const bool better = !have || (p.violates() && !worst.violates()) ||
                        (p.violates() == worst.violates() && p.second_difference < worst.second_difference);
    if (better) {
      worst = p;
      have = true;
    }
  }
  return worst;
}

double segment_convexity(const MatrixFn& W, const Mat2& F, const Vec2& xi, const Vec2& eta,
                         const SampleSpec& spec) {
  return segment_probe(W, F, xi, eta, spec).second_difference;
}

OracleReport run_oracle(const MatrixFn& W, const SampleSpec& spec) {
  spec.validate();
  OracleReport report;
  for (int i = 0; i < spec.n_points; ++i) {
    SampleRng rng(spec.seed, i);
    const Mat2 F = draw_matrix(spec, rng);
    const Vec2 xi = draw_direction(rng);
    const Vec2 eta = draw_direction(rng);
    try {
      const Probe lh = lh_probe(W, F, xi, eta, spec);
      if (lh.violates()) {
        ++report.points_tested;
        report.status = OracleStatus::Violation;
        report.violation = Violation{i, F, xi, eta, lh.second_difference, "lh"};
        return report;
      }
      const Probe seg = segment_probe(W, F, xi, eta, spec);
      ++report.points_tested;
      if (seg.violates()) {
        report.status = OracleStatus::Violation;
        report.violation = Violation{i, F, xi, eta, seg.second_difference, "segment"};
        return report;
      }
    } catch (const Error&) {
      ++report.points_skipped;
    }
  }
  return report;
}

}  // namespace isoconv

#pragma once

// Sampling test of rank-one convexity for matrix energies on GL+(2). It can
// only find violations; a clean run means "consistent with convexity".

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "isoconv/mat2.hpp"
#include "isoconv/scalar_fn.hpp"

namespace isoconv {

struct SampleSpec {
  int n_points = 10000;
  std::uint64_t seed = 0;
  std::pair<double, double> lambda_range{0.05, 20.0};
  int segment_steps = 33;
  double step_scale = 1e-3;
  /// A raw second difference d is a violation when
  /// d < -(tol_abs + tol_rel * (|W+| + 2|W0| + |W-|)).
  double tol_abs = 1e-12;
  double tol_rel = 1e-11;

  void validate() const;
};

/// Deterministic F = R(a) diag(l1, l2) R(b) with log-uniform l1, l2 and
/// uniform angles, drawn from a counter-based generator keyed by (seed, i).
Mat2 sample_glp2(const SampleSpec& spec, int i);

/// One second-difference probe: the normalized value (divided by the squared
/// step), the raw difference and the tolerance it was judged against.
struct Probe {
  double second_difference = 0.0;
  double raw = 0.0;
  double tolerance = 0.0;
  bool violates() const { return raw < -tolerance; }
};

/// Central second difference of u -> W(F + u xi (x) eta) at u = 0 with step
/// s = step_scale ||F|| / (|xi| |eta|). The step is divided by 4 up to three
/// times to keep det > 0; DegenerateStencil after that.
Probe lh_probe(const MatrixFn& W, const Mat2& F, const Vec2& xi, const Vec2& eta, const SampleSpec& spec);
double lh_second_difference(const MatrixFn& W, const Mat2& F, const Vec2& xi, const Vec2& eta,
                            const SampleSpec& spec);

/// Discrete second differences of W along F + u xi (x) eta on segment_steps
/// equispaced points, u in [-||F||, ||F||] cut to half the distance to the
/// det = 0 boundary. Returns the most negative one (normalized).
Probe segment_probe(const MatrixFn& W, const Mat2& F, const Vec2& xi, const Vec2& eta, const SampleSpec& spec);
double segment_convexity(const MatrixFn& W, const Mat2& F, const Vec2& xi, const Vec2& eta,
                         const SampleSpec& spec);

enum class OracleStatus { ConsistentConvex, Violation };

std::string_view to_string(OracleStatus s);

struct Violation {
  int sample_index = 0;
  Mat2 F;
  Vec2 xi;
  Vec2 eta;
  double second_difference = 0.0;
  std::string_view test;  // "lh" or "segment"
};

struct OracleReport {
  OracleStatus status = OracleStatus::ConsistentConvex;
  std::optional<Violation> violation;
  int points_tested = 0;
  int points_skipped = 0;
};

/// Stops at the violation with the smallest sample index. Stencils that leave
/// GL+(2) or hit non-finite values are counted as skipped.
OracleReport run_oracle(const MatrixFn& W, const SampleSpec& spec = {});

}  // namespace isoconv

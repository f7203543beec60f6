#include <doctest.h>

#include <cmath>

#include "isoconv/oracle.hpp"
#include "support.hpp"

using namespace isoconv;
using namespace testing_support;

namespace {

double quad(const Mat2& F) { return F.a11() * F.a11() - 3.0 * F.a12() * F.a21() + F.a22() * F.a22(); }

}  // namespace

TEST_CASE("sample spec validation") {
  SampleSpec s;
  CHECK_NOTHROW(s.validate());
  s.segment_steps = 2;
  CHECK_THROWS_AS(s.validate(), Error);
  s = SampleSpec{};
  s.lambda_range = {0.0, 1.0};
  CHECK_THROWS_AS(s.validate(), Error);
  s = SampleSpec{};
  s.n_points = 0;
  CHECK_THROWS_AS(run_oracle([](const Mat2& F) { return F.det(); }, s), Error);
}

TEST_CASE("samples are deterministic, in GL+(2) and within the stretch range") {
  SampleSpec spec;
  spec.seed = 5;
  for (int i = 0; i < 1000; ++i) {
    const Mat2 F = sample_glp2(spec, i);
    CHECK(F == sample_glp2(spec, i));
    CHECK(F.det() > 0.0);
    const Eigen::Vector2d sv = singular_values(F);
    CHECK(sv(0) <= 20.0 * (1.0 + 1e-12));
    CHECK(sv(1) >= 0.05 * (1.0 - 1e-12));
  }
  SampleSpec other = spec;
  other.seed = 6;
  CHECK_FALSE(sample_glp2(spec, 0) == sample_glp2(other, 0));
}

TEST_CASE("Legendre-Hadamard difference of a quadratic form is exact") {
  MatrixSource src(31);
  SampleSpec spec;
  for (int i = 0; i < 200; ++i) {
    const Mat2 F = src.glp();
    const Vec2 xi{src.uniform(-1, 1), src.uniform(-1, 1)};
    const Vec2 eta{src.uniform(-1, 1), src.uniform(-1, 1)};
    const double expected = 2.0 * quad(Mat2::outer(xi, eta));
    // Rounding bound of the three-point stencil.
    const double step = spec.step_scale * F.frob() / (xi.norm() * eta.norm());
    const double noise = 16.0 * 2.2e-16 * 4.0 * 4.0 * F.frob_sq() / (step * step) + 1e-12;
    CHECK(std::abs(lh_second_difference(quad, F, xi, eta, spec) - expected) <= noise + 1e-9 * std::abs(expected));
  }
}

TEST_CASE("stencils that cannot stay in GL+(2) are degenerate") {
  SampleSpec spec;
  const Mat2 F = Mat2::diag(1.0, 1e-6);
  try {
    lh_probe(quad, F, {0.0, 1.0}, {0.0, 1.0}, spec);
    FAIL("expected DegenerateStencil");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateStencil);
  }
  CHECK_THROWS_AS(lh_probe(quad, Mat2::diag(1.0, -1.0), {1, 0}, {1, 0}, spec), Error);
}

TEST_CASE("segment test stays inside GL+(2) and sees curvature along the line") {
  SampleSpec spec;
  const Mat2 F = Mat2::identity();
  // W = -||F||^2 is concave along every line.
  const Probe p = segment_probe([](const Mat2& G) { return -G.frob_sq(); }, F, {1, 0}, {0, 1}, spec);
  CHECK(p.violates());
  CHECK(p.second_difference == doctest::Approx(-2.0).epsilon(1e-6));
  // det is affine along rank-one lines.
  const Probe q = segment_probe([](const Mat2& G) { return G.det(); }, F, {1, 0}, {1, 0}, spec);
  CHECK_FALSE(q.violates());
  CHECK(segment_convexity([](const Mat2& G) { return G.frob_sq(); }, F, {1, 0}, {1, 0}, spec) ==
        doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("oracle on convex and rank-one affine energies") {
  SampleSpec spec;
  const OracleReport det = run_oracle([](const Mat2& F) { return F.det(); }, spec);
  CHECK(det.status == OracleStatus::ConsistentConvex);
  CHECK(det.points_tested + det.points_skipped == spec.n_points);
  CHECK(run_oracle([](const Mat2& F) { return F.frob_sq(); }, spec).status == OracleStatus::ConsistentConvex);
}

TEST_CASE("oracle stops at the first violation and reports it") {
  SampleSpec spec;
  spec.seed = 3;
  const OracleReport r = run_oracle([](const Mat2& F) { return -F.frob_sq(); }, spec);
  REQUIRE(r.status == OracleStatus::Violation);
  REQUIRE(r.violation);
  CHECK(r.violation->sample_index == 0);
  CHECK(r.violation->test == "lh");
  CHECK(r.violation->F == sample_glp2(spec, 0));
  CHECK(r.violation->second_difference < 0.0);
  CHECK(r.points_tested == 1);
}

TEST_CASE("non-finite energies count as skipped") {
  SampleSpec spec;
  spec.n_points = 50;
  const OracleReport r = run_oracle([](const Mat2&) { return std::nan(""); }, spec);
  CHECK(r.status == OracleStatus::ConsistentConvex);
  CHECK(r.points_skipped == 50);
}

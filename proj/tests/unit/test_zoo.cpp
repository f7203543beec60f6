#include <doctest.h>

#include <cmath>
#include <set>

#include "isoconv/planar.hpp"
#include "isoconv/zoo.hpp"
#include "support.hpp"

using namespace isoconv;
using namespace testing_support;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::NonFinite;
}

double natural_value(const ZooEntry& e, const Mat2& F) {
  double v = eval_at_matrix(e.energy.rep, F);
  if (e.energy.volumetric) v += (*e.energy.volumetric)(F.det());
  return v;
}

}  // namespace

TEST_CASE("catalog lists every entry once") {
  std::set<std::string> names;
  for (const auto& item : catalog()) names.insert(item.name);
  CHECK(names.size() == catalog().size());
  for (const char* n : {"hencky_iso", "exp_hencky_iso", "exp_hencky_full", "biot", "dist_iso_so2", "power_k", "w_sharp",
                        "ex_i", "ex_ii", "ex_iii", "ex_iv", "ex_v"}) {
    CHECK(names.count(n) == 1);
  }
}

TEST_CASE("parameters are validated") {
  CHECK(kind_of([] { make("no_such"); }) == ErrorKind::UnknownEnergy);
  CHECK(kind_of([] { make("power_k", {{"gamma", 1.0}}); }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] { make("power_k", {{"beta", -1.0}}); }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] { make("ex_i", {{"beta", 1.0}}); }) == ErrorKind::ParamOutOfRange);
  const ZooEntry e = make("exp_hencky_iso", {{"k", 0.3}});
  CHECK(e.params.at("k") == 0.3);
  CHECK(e.params.at("mu") == 1.0);
  CHECK(e.expected_label() == "CONDITIONAL(k >= 1/4)");
  CHECK(e.condition_holds);
  CHECK_FALSE(make("exp_hencky_iso", {{"k", 0.2}}).condition_holds);
}

TEST_CASE("natural representation agrees with the independent matrix formula") {
  MatrixSource src(41, 0.1, 10.0);
  for (const auto& item : catalog()) {
    const ZooEntry e = make(item.name);
    CAPTURE(item.name);
    for (int i = 0; i < 300; ++i) {
      const Mat2 F = src.glp();
      const double a = e.energy.matrix(F);
      const double b = natural_value(e, F);
      CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("isochoric entries are invariant under scaling") {
  MatrixSource src(42, 0.1, 10.0);
  for (const auto& item : catalog()) {
    const ZooEntry e = make(item.name);
    if (!e.energy.is_isochoric()) continue;
    CAPTURE(item.name);
    for (int i = 0; i < 200; ++i) {
      const Mat2 F = src.glp();
      for (double a : {0.1, 10.0}) {
        CHECK(std::abs(e.energy.matrix(a * F) - e.energy.matrix(F)) <= 1e-9 * std::max(1.0, std::abs(e.energy.matrix(F))));
      }
    }
  }
  CHECK_FALSE(make("biot").energy.is_isochoric());
  CHECK_FALSE(make("w_sharp").energy.is_isochoric());
  CHECK(make("exp_hencky_full").energy.is_split());
}

TEST_CASE("ex_i in h form is 2(t + 1/t) - 4") {
  const ZooEntry e = make("ex_i");
  const ScalarFn h = scalar_forms(e.energy.rep).h;
  for (double t : {1.0, 1.5, 4.0, 100.0}) {
    CHECK(std::abs(h(t) - (2.0 * (t + 1.0 / t) - 4.0)) <= 1e-12 * std::max(1.0, h(t)));
    const double direct = e.energy.matrix(Mat2::diag(t, 1.0));
    CHECK(std::abs(h(t) - direct) <= 1e-12 * std::max(1.0, direct));
  }
}

TEST_CASE("w_sharp branches") {
  const ZooEntry e = make("w_sharp");
  CHECK(e.energy.matrix(Mat2::diag(0.25, 0.25)) == doctest::Approx(-0.25));
  CHECK(e.energy.matrix(Mat2::diag(2.0, 1.0)) == doctest::Approx(1.0));
  CHECK(e.energy.matrix(Mat2::diag(0.5, 0.5)) == doctest::Approx(-1.0));
}

TEST_CASE("every entry matches its expected classification") {
  CheckConfig cfg;
  SampleSpec spec;
  const std::vector<std::pair<std::string, Params>> cases = {
      {"hencky_iso", {}},       {"exp_hencky_iso", {}},        {"exp_hencky_iso", {{"k", 0.25}}},
      {"exp_hencky_iso", {{"k", 0.2}}}, {"exp_hencky_full", {}}, {"biot", {}},
      {"dist_iso_so2", {}},     {"power_k", {}},               {"power_k", {{"beta", 0.9}}},
      {"w_sharp", {}},          {"ex_i", {}},                  {"ex_ii", {}},
      {"ex_iii", {}},           {"ex_iv", {}},                 {"ex_iv", {{"beta", 2.0}}},
      {"ex_v", {}},
  };
  for (const auto& [name, params] : cases) {
    CAPTURE(name);
    const ZooEntry e = make(name, params);
    const ExpectedVsActual r = expected_vs_actual(e, cfg, spec);
    CHECK(r.matches);
  }
}

TEST_CASE("split energy: sufficient checks on the isochoric part") {
  const Analysis a = analyze(make("exp_hencky_full").energy, CheckConfig{}, std::nullopt);
  REQUIRE(a.find("volumetric_convexity"));
  REQUIRE(a.find("separate_convexity_iso"));
  CHECK(a.find("ftilde_criterion")->role == Role::Sufficient);
  CHECK(a.find("separate_convexity")->role == Role::Necessary);
  CHECK(a.overall == Overall::PolyconvexConsistent);
  const Analysis bad = analyze(make("exp_hencky_full", {{"khat", 0.1}}).energy, CheckConfig{}, std::nullopt);
  CHECK(bad.find("volumetric_convexity")->verdict.status == Status::Fail);
  CHECK(bad.overall != Overall::PolyconvexConsistent);
}

TEST_CASE("matrix energies outside the isochoric theory get the oracle only") {
  const Analysis a = analyze(make("w_sharp").energy, CheckConfig{}, std::nullopt);
  CHECK(a.checks.empty());
  REQUIRE(a.oracle);
  CHECK(a.oracle_spec->n_points == SampleSpec{}.n_points);
  CHECK(a.overall == Overall::PolyconvexConsistent);
}

TEST_CASE("combining verdicts") {
  auto with = [](Role role, Status s) {
    CheckResult c;
    c.role = role;
    c.verdict.status = s;
    return std::vector<CheckResult>{c};
  };
  CHECK(combine(with(Role::Equivalent, Status::Fail), std::nullopt) == Overall::NotRankOneConvex);
  CHECK(combine(with(Role::Necessary, Status::Fail), std::nullopt) == Overall::NotRankOneConvex);
  CHECK(combine(with(Role::Sufficient, Status::Fail), std::nullopt) == Overall::Inconclusive);
  CHECK(combine(with(Role::Equivalent, Status::Inconclusive), std::nullopt) == Overall::Inconclusive);
  CHECK(combine(with(Role::Equivalent, Status::Pass), std::nullopt) == Overall::PolyconvexConsistent);
  OracleReport violation;
  violation.status = OracleStatus::Violation;
  CHECK(combine(with(Role::Equivalent, Status::Pass), violation) == Overall::NotRankOneConvex);
}

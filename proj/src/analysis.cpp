#include "isoconv/analysis.hpp"

#include <algorithm>

#include "isoconv/planar.hpp"

namespace isoconv {

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Equivalent: return "equivalent";
    case Role::Necessary: return "necessary";
    case Role::Sufficient: return "sufficient";
  }
  return "?";
}

std::string_view to_string(Overall o) {
  switch (o) {
    case Overall::PolyconvexConsistent: return "POLYCONVEX_CONSISTENT";
    case Overall::NotRankOneConvex: return "NOT_RANK_ONE_CONVEX";
    case Overall::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

MatrixFn Energy::matrix_energy() const {
  if (matrix) return matrix;
  const EnergyRep r = rep;
  if (!volumetric) return [r](const Mat2& F) { return eval_at_matrix(r, F); };
  const ScalarFn vol = *volumetric;
  return [r, vol](const Mat2& F) { return eval_at_matrix(r, F) + vol(F.det()); };
}

const CheckResult* Analysis::find(std::string_view criterion_id) const {
  for (const auto& c : checks) {
    if (c.verdict.criterion_id == criterion_id) return &c;
  }
  return nullptr;
}

Overall combine(const std::vector<CheckResult>& checks, const std::optional<OracleReport>& oracle) {
  bool inconclusive = false;
  for (const auto& c : checks) {
    const Status s = c.verdict.status;
    if (s == Status::Fail && c.role != Role::Sufficient) return Overall::NotRankOneConvex;
    if (s == Status::Inconclusive || (s == Status::Fail && c.role == Role::Sufficient)) inconclusive = true;
  }
  if (oracle && oracle->status == OracleStatus::Violation) return Overall::NotRankOneConvex;
  return inconclusive ? Overall::Inconclusive : Overall::PolyconvexConsistent;
}

namespace {

void isochoric_checks(const ScalarForms& forms, const CheckConfig& cfg, Role core, Role consequence,
                      std::vector<CheckResult>& out) {
  out.push_back({core, check_h_criterion(forms.h, cfg)});
  out.push_back({core, check_f_criterion(forms.f, cfg)});
  out.push_back({core, check_ftilde_criterion(forms.ftilde, cfg)});
  out.push_back({core, check_z_criterion(forms.z, cfg)});
  out.push_back({consequence, check_f_monotone(forms.f, cfg)});
  out.push_back({consequence, check_growth_bound(forms.f, cfg)});
}

}  // namespace

Analysis analyze(const Energy& energy, const CheckConfig& cfg, const std::optional<SampleSpec>& oracle) {
  cfg.validate();
  Analysis a;
  a.representation = std::string(to_string(energy.rep.kind()));
  a.oracle_spec = oracle;

  if (energy.is_split()) {
    const ScalarForms forms = scalar_forms(energy.rep);
    isochoric_checks(forms, cfg, Role::Sufficient, Role::Sufficient, a.checks);
    CheckResult sep{Role::Sufficient, check_separate_convexity(g_from_h(forms.h), cfg)};
    sep.verdict.criterion_id = "separate_convexity_iso";
    a.checks.push_back(sep);
    a.checks.push_back({Role::Sufficient, check_volumetric_convexity(*energy.volumetric, cfg)});
    const SymmetricFn2 iso = g_from_h(forms.h);
    const ScalarFn vol = *energy.volumetric;
    RealFn2 d11;
    if (iso.has_d11() && vol.has_d2()) {
      d11 = [iso, vol](double x, double y) { return iso.d11(x, y) + vol.d2(x * y) * y * y; };
    }
    const SymmetricFn2 full([iso, vol](double x, double y) { return iso(x, y) + vol(x * y); }, std::move(d11));
    a.checks.push_back({Role::Necessary, check_separate_convexity(full, cfg)});
  } else if (energy.rep.isochoric_declared()) {
    const ScalarForms forms = scalar_forms(energy.rep);
    isochoric_checks(forms, cfg, Role::Equivalent, Role::Necessary, a.checks);
    a.checks.push_back({Role::Necessary, check_separate_convexity(g_from_h(forms.h), cfg)});
  } else {
    // Matrix energies outside the isochoric theory get the oracle only.
    if (energy.rep.kind() == RepKind::SymmetricG) {
      a.checks.push_back({Role::Necessary, check_separate_convexity(energy.rep.g(), cfg)});
    }
    if (!a.oracle_spec) a.oracle_spec = SampleSpec{};
  }

  if (a.oracle_spec) a.oracle = run_oracle(energy.matrix_energy(), *a.oracle_spec);
  a.overall = combine(a.checks, a.oracle);
  return a;
}

}  // namespace isoconv

#pragma once

// Pointwise convexity criteria for isochoric energies, evaluated on a grid.
//
// Every check computes, at each grid point, a criterion value v that must be
// non-negative, together with a magnitude scale (the sum of absolute values of
// the terms making up v). A point fails when v < -(tol_abs + tol_rel * scale).
// FAIL if any point fails; otherwise INCONCLUSIVE if some v < 0, else PASS.
// The witness is the failing point with the most negative v / scale, ties
// going to the smallest abscissa.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isoconv/check_config.hpp"
#include "isoconv/scalar_fn.hpp"

namespace isoconv {

enum class Status { Pass, Fail, Inconclusive };

std::string_view to_string(Status s);

struct Witness {
  double point = 0.0;
  double value = 0.0;
};

struct GridSummary {
  std::string variable;
  double min = 0.0;
  double max = 0.0;
  int n = 0;
};

struct Verdict {
  Status status = Status::Pass;
  std::optional<Witness> witness;
  double min_margin = 0.0;
  double min_margin_point = 0.0;
  std::string criterion_id;
  GridSummary grid;
};

/// Log-spaced t grid from cfg.
std::vector<double> t_grid(const CheckConfig& cfg);

/// h'' >= 0 and h' >= 0 on the t grid; FAIL if either fails.
Verdict check_h_criterion(const ScalarFn& h, const CheckConfig& cfg = {});
/// h' >= 0 on the t grid alone.
Verdict check_h_monotone(const ScalarFn& h, const CheckConfig& cfg = {});
/// 2 theta f'' + (1 - sqrt theta) f' >= 0 on theta = log^2 t.
Verdict check_f_criterion(const ScalarFn& f, const CheckConfig& cfg = {});
/// 2 eta f~'' + (1 - sqrt(2 eta)) f~' >= 0 on eta = log^2(t) / 2.
Verdict check_ftilde_criterion(const ScalarFn& ftilde, const CheckConfig& cfg = {});
/// (r^2 - 1)(r + sqrt(r^2 - 1)) z'' + z' >= 0 on r = (t + 1/t) / 2.
Verdict check_z_criterion(const ScalarFn& z, const CheckConfig& cfg = {});
/// d^2/dl1^2 g(l1, l2) >= 0 on a 2-D log grid over [grid_max^-1/2, grid_max^1/2]^2.
/// Uses g.d11 when present and finite, numeric differences otherwise.
/// The witness point is l1; the l2 coordinate is in witness_partner.
Verdict check_separate_convexity(const SymmetricFn2& g, const CheckConfig& cfg = {},
                                 double* witness_partner = nullptr);
/// f' >= 0 on the theta grid.
Verdict check_f_monotone(const ScalarFn& f, const CheckConfig& cfg = {});

struct GrowthBound {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// c1 = f'(1)/e, c2 = f(0) - c1.
GrowthBound growth_bound(const ScalarFn& f, const CheckConfig& cfg = {});
/// First theta at which the bound follows from the f criterion:
/// integrating it from theta = 1 gives f(theta) >= 2 c1 (e^sqrt(theta) - e) + f(0),
/// which dominates c1 e^sqrt(theta) + c2 once e^sqrt(theta) >= 2e - 1.
double growth_bound_onset();
/// f(theta) >= c1 e^sqrt(theta) + c2 on the part of the theta grid past the onset.
Verdict check_growth_bound(const ScalarFn& f, const CheckConfig& cfg = {});
/// wvol'' >= 0 on a log grid over [1/grid_max, grid_max].
Verdict check_volumetric_convexity(const ScalarFn& wvol, const CheckConfig& cfg = {});

}  // namespace isoconv

#pragma once

// Runs every applicable check on an energy and folds the verdicts into one
// overall classification.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isoconv/check_config.hpp"
#include "isoconv/criteria.hpp"
#include "isoconv/oracle.hpp"
#include "isoconv/representations.hpp"

namespace isoconv {

/// An energy as handed to the analysis: its natural representation, an
/// optional volumetric part W_vol(det F) for split energies, and a matrix
/// formula for the oracle (falls back to eval_at_matrix when empty).
struct Energy {
  EnergyRep rep;
  std::optional<ScalarFn> volumetric;
  MatrixFn matrix;

  bool is_split() const { return volumetric.has_value(); }
  bool is_isochoric() const { return rep.isochoric_declared() && !volumetric; }
  /// Full energy as a function of F.
  MatrixFn matrix_energy() const;
};

/// How a check relates to rank-one convexity of the energy at hand:
///   Equivalent  PASS iff rank-one convex (isochoric criteria)
///   Necessary   FAIL implies not rank-one convex
///   Sufficient  PASS of all of them implies polyconvex
enum class Role { Equivalent, Necessary, Sufficient };

enum class Overall { PolyconvexConsistent, NotRankOneConvex, Inconclusive };

std::string_view to_string(Role r);
std::string_view to_string(Overall o);

struct CheckResult {
  Role role = Role::Equivalent;
  Verdict verdict;
};

struct Analysis {
  std::string representation;
  std::vector<CheckResult> checks;
  std::optional<OracleReport> oracle;
  std::optional<SampleSpec> oracle_spec;
  Overall overall = Overall::Inconclusive;

  const CheckResult* find(std::string_view criterion_id) const;
};

/// NOT_RANK_ONE_CONVEX if an Equivalent or Necessary check fails or the
/// oracle reports a violation; otherwise INCONCLUSIVE if any check is
/// inconclusive or a Sufficient check fails; otherwise POLYCONVEX_CONSISTENT.
Overall combine(const std::vector<CheckResult>& checks, const std::optional<OracleReport>& oracle);

/// Isochoric energies get the h, f, ftilde, z, separate-convexity,
/// monotonicity and growth checks. Split energies get the same checks on
/// their isochoric part as sufficient conditions, plus volumetric convexity
/// and separate convexity of the full g. Other energies always run the
/// oracle (with default settings when none is given); a g representation
/// also gets separate convexity.
Analysis analyze(const Energy& energy, const CheckConfig& cfg, const std::optional<SampleSpec>& oracle);

}  // namespace isoconv

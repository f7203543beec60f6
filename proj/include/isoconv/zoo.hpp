#pragma once

// Named, parameterized energies with their known classification.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "isoconv/analysis.hpp"

namespace isoconv {

using Params = std::map<std::string, double>;

enum class Expectation {
  Polyconvex,
  NotRankOneConvex,
  /// Polyconvex iff `condition` holds.
  Conditional,
  /// Not isochoric; only the oracle applies, which should stay consistent.
  OracleConsistent,
};

std::string_view to_string(Expectation e);

struct ZooEntry {
  std::string name;
  Params params;
  Energy energy;
  Expectation expected = Expectation::Polyconvex;
  std::string condition;
  bool condition_holds = true;
  /// Outcome when a split energy's condition fails is left open.
  bool undetermined_when_false = false;
  std::string rationale;
  /// h is continuously differentiable at t = 1 (so h'(1) = 0).
  bool c1_at_identity = true;

  /// Human-readable expected verdict, e.g. "CONDITIONAL(k >= 1/4)".
  std::string expected_label() const;
};

struct CatalogItem {
  std::string name;
  Params defaults;
  std::string formula;
};

const std::vector<CatalogItem>& catalog();

/// Raises UnknownEnergy for names not in the catalog and ParamOutOfRange for
/// unknown keys or non-positive values. Missing keys take their defaults.
ZooEntry make(const std::string& name, const Params& params = {});

struct ExpectedVsActual {
  Analysis analysis;
  bool matches = false;
};

ExpectedVsActual expected_vs_actual(const ZooEntry& entry, const CheckConfig& cfg, const SampleSpec& spec);

}  // namespace isoconv

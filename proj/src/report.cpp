#include "isoconv/report.hpp"

#include <sstream>

#include "isoconv/format.hpp"

namespace isoconv {

namespace {

Json energy_json(const EnergySource& e) {
  Json params = Json::object();
  for (const auto& [k, v] : e.params) params[k] = v;
  Json out = {{"source", e.source}, {"name_or_src", e.name_or_src}, {"params", params}};
  if (!e.expected.empty()) out["expected"] = e.expected;
  return out;
}

std::string energy_label(const EnergySource& e) {
  std::string out = e.source == "zoo" ? e.name_or_src : "\"" + e.name_or_src + "\"";
  if (!e.params.empty()) {
    out += " (";
    bool first = true;
    for (const auto& [k, v] : e.params) {
      if (!first) out += ", ";
      out += k + "=" + format_real(v);
      first = false;
    }
    out += ")";
  }
  return out;
}

}  // namespace

Json to_json(const CheckConfig& cfg) {
  return {{"grid_min", cfg.grid_min}, {"grid_max", cfg.grid_max}, {"grid_n", cfg.grid_n},
          {"grid2_n", cfg.grid2_n},   {"tol_abs", cfg.tol_abs},   {"tol_rel", cfg.tol_rel},
          {"d1_step", cfg.d1_step},   {"d2_step", cfg.d2_step}};
}

Json to_json(const SampleSpec& spec) {
  return {{"n_points", spec.n_points},
          {"seed", spec.seed},
          {"lambda_range", {spec.lambda_range.first, spec.lambda_range.second}},
          {"segment_steps", spec.segment_steps},
          {"step_scale", spec.step_scale},
          {"tol_abs", spec.tol_abs},
          {"tol_rel", spec.tol_rel}};
}

Json to_json(const Verdict& v) {
  Json out = {{"criterion_id", v.criterion_id}, {"status", std::string(to_string(v.status))}};
  out["witness"] = v.witness ? Json{{"point", v.witness->point}, {"value", v.witness->value}} : Json(nullptr);
  out["min_margin"] = v.min_margin;
  out["min_margin_point"] = v.min_margin_point;
  out["grid"] = {{"variable", v.grid.variable}, {"min", v.grid.min}, {"max", v.grid.max}, {"n", v.grid.n}};
  return out;
}

Json to_json(const OracleReport& r) {
  Json out = {{"status", std::string(to_string(r.status))},
              {"points_tested", r.points_tested},
              {"points_skipped", r.points_skipped}};
  if (r.violation) {
    const Violation& v = *r.violation;
    out["violation"] = {{"sample_index", v.sample_index},
                        {"test", std::string(v.test)},
                        {"F", {v.F.a11(), v.F.a12(), v.F.a21(), v.F.a22()}},
                        {"xi", {v.xi.x, v.xi.y}},
                        {"eta", {v.eta.x, v.eta.y}},
                        {"second_difference", v.second_difference}};
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

Json report_json(const EnergySource& energy, const Analysis& analysis, const CheckConfig& cfg) {
  Json checks = Json::array();
  for (const auto& c : analysis.checks) {
    Json j = to_json(c.verdict);
    j["role"] = std::string(to_string(c.role));
    checks.push_back(std::move(j));
  }
  Json out;
  out["tool_version"] = kToolVersion;
  out["energy"] = energy_json(energy);
  out["representation"] = analysis.representation;
  out["checks"] = std::move(checks);
  out["oracle"] = analysis.oracle ? to_json(*analysis.oracle) : Json(nullptr);
  out["config"] = {{"check", to_json(cfg)},
                   {"sample", analysis.oracle_spec ? to_json(*analysis.oracle_spec) : Json(nullptr)}};
  out["overall"] = std::string(to_string(analysis.overall));
  return out;
}

std::string report_text(const EnergySource& energy, const Analysis& analysis) {
  std::ostringstream os;
  os << "energy:         " << energy_label(energy) << "\n";
  if (!energy.expected.empty()) os << "expected:       " << energy.expected << "\n";
  os << "representation: " << analysis.representation << "\n";
  for (const auto& c : analysis.checks) {
    const Verdict& v = c.verdict;
    os << "  " << v.criterion_id << " [" << to_string(c.role) << "]: " << to_string(v.status);
    if (v.witness) {
      os << " at " << v.grid.variable << " = " << format_real(v.witness->point)
         << " (value " << format_real(v.witness->value) << ")";
    } else {
      os << " (min margin " << format_real(v.min_margin) << ")";
    }
    os << "\n";
  }
  if (analysis.oracle) {
    const OracleReport& r = *analysis.oracle;
    os << "  oracle: " << to_string(r.status) << " (" << r.points_tested << " tested, " << r.points_skipped
       << " skipped)\n";
  }
  os << "overall:        " << to_string(analysis.overall) << "\n";
  return os.str();
}

Json oracle_report_json(const EnergySource& energy, const OracleReport& report, const SampleSpec& spec) {
  Json out;
  out["tool_version"] = kToolVersion;
  out["energy"] = energy_json(energy);
  Json body = to_json(report);
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  out["sample"] = to_json(spec);
  return out;
}

std::string oracle_report_text(const EnergySource& energy, const OracleReport& report) {
  std::ostringstream os;
  os << "energy: " << energy_label(energy) << "\n";
  os << "status: " << to_string(report.status) << " (" << report.points_tested << " tested, "
     << report.points_skipped << " skipped)\n";
  if (report.violation) {
    const Violation& v = *report.violation;
    os << "violation at sample " << v.sample_index << " (" << v.test << "): F = " << v.F.str() << ", xi = ("
       << format_real(v.xi.x) << ", " << format_real(v.xi.y) << "), eta = (" << format_real(v.eta.x) << ", "
       << format_real(v.eta.y) << "), second difference " << format_real(v.second_difference) << "\n";
  }
  return os.str();
}

}  // namespace isoconv

#pragma once

// JSON and text rendering of analyses and oracle runs. Output is a pure
// function of the inputs (no timestamps, fixed key order).

#include <map>
#include <string>

#include <json.hpp>

#include "isoconv/analysis.hpp"

namespace isoconv {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = ISOCONV_VERSION;

struct EnergySource {
  std::string source;  // "zoo" or "expr"
  std::string name_or_src;
  std::map<std::string, double> params;
  std::string expected;  // zoo expectation label, empty for expressions
};

Json to_json(const CheckConfig& cfg);
Json to_json(const SampleSpec& spec);
Json to_json(const Verdict& v);
Json to_json(const OracleReport& r);

Json report_json(const EnergySource& energy, const Analysis& analysis, const CheckConfig& cfg);
std::string report_text(const EnergySource& energy, const Analysis& analysis);

Json oracle_report_json(const EnergySource& energy, const OracleReport& report, const SampleSpec& spec);
std::string oracle_report_text(const EnergySource& energy, const OracleReport& report);

}  // namespace isoconv

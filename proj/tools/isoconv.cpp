// isoconv: rank-one convexity and polyconvexity checks for planar isotropic
// energies from the command line.
//
// Exit codes: 0 POLYCONVEX_CONSISTENT (or oracle consistent, or success),
// 1 NOT_RANK_ONE_CONVEX (or oracle violation), 2 INCONCLUSIVE,
// 64 usage error, 65 data error (parse, registration, domain).

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isoconv/expr.hpp"
#include "isoconv/format.hpp"
#include "isoconv/planar.hpp"
#include "isoconv/report.hpp"
#include "isoconv/zoo.hpp"

namespace {

using namespace isoconv;

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnergyArgs {
  std::string zoo;
  std::string expr;
  std::string repr;
  std::string vol;
  std::vector<std::string> params;
};

struct Selected {
  Energy energy;
  EnergySource source;
};

void add_energy_options(CLI::App* cmd, EnergyArgs& a) {
  auto* zoo = cmd->add_option("--zoo", a.zoo, "Named energy from the catalog (see `isoconv list`)");
  auto* expr = cmd->add_option("--expr", a.expr, "Energy as an expression in the variables of --repr");
  zoo->excludes(expr);
  cmd->add_option("--repr", a.repr, "Representation of --expr")
      ->check(CLI::IsMember({"h", "f", "ftilde", "z", "g"}))
      ->needs(expr);
  cmd->add_option("--vol", a.vol, "Volumetric part wvol(J) added to an isochoric --expr")->needs(expr);
  cmd->add_option("--param", a.params, "Parameter key=value, repeatable");
}

std::map<std::string, double> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, double> out;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw UsageError("--param " + key + ": '" + text + "' is not a number");
    if (out.count(key)) throw UsageError("--param " + key + " given twice");
    out[key] = v;
  }
  return out;
}

VarSet repr_var_set(const std::string& repr) { return var_set_from_string(repr); }

// Substitutes params into src and, if present, vol; every key must be used by one of them.
std::pair<std::string, std::string> substitute_all(const std::string& src, VarSet set, const std::string& vol,
                                                   const std::map<std::string, double>& params) {
  if (vol.empty()) return {substitute_params(src, params, variables(set)), vol};
  std::string a = src;
  std::string b = vol;
  for (const auto& [key, value] : params) {
    const std::map<std::string, double> one{{key, value}};
    bool used = false;
    for (auto [text, vars] : {std::pair{&a, set}, std::pair{&b, VarSet::WVol}}) {
      try {
        *text = substitute_params(*text, one, variables(vars));
        used = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ParamOutOfRange) throw;
      }
    }
    if (!used) throw Error(ErrorKind::ParamOutOfRange, "parameter '" + key + "' does not occur in the expressions");
  }
  return {a, b};
}

Selected select_energy(const EnergyArgs& a) {
  const auto params = parse_params(a.params);
  if (a.zoo.empty() && a.expr.empty()) throw UsageError("one of --zoo or --expr is required");
  if (!a.zoo.empty()) {
    ZooEntry entry = make(a.zoo, params);
    return {entry.energy, {"zoo", a.zoo, entry.params, entry.expected_label()}};
  }
  if (a.repr.empty()) throw UsageError("--expr needs --repr");

  const VarSet set = repr_var_set(a.repr);
  const auto [src, vol_src] = substitute_all(a.expr, set, a.vol, params);
  const Expr e = parse(src, set);
  std::optional<EnergyRep> rep;
  switch (set) {
    case VarSet::H: rep = EnergyRep::ratio_h(a.expr, to_scalar_fn(e, set)); break;
    case VarSet::F: rep = EnergyRep::log_sq_f(a.expr, to_scalar_fn(e, set)); break;
    case VarSet::FTilde: rep = EnergyRep::strain_ftilde(a.expr, to_scalar_fn(e, set)); break;
    case VarSet::Z: rep = EnergyRep::distortion_z(a.expr, to_scalar_fn(e, set)); break;
    case VarSet::G: {
      const SymmetricFn2 g = to_symmetric_fn(e);
      rep = EnergyRep::symmetric_g(a.expr, g, looks_isochoric(g));
      break;
    }
    case VarSet::WVol: throw UsageError("--repr wvol is only valid through --vol");
  }
  Energy energy{*rep, std::nullopt, {}};
  if (!vol_src.empty()) {
    if (!rep->isochoric_declared()) {
      throw Error(ErrorKind::NotIsochoric, "--vol needs an isochoric --expr");
    }
    energy.volumetric = to_scalar_fn(parse(vol_src, VarSet::WVol), VarSet::WVol);
  }
  std::string shown = a.expr;
  if (!a.vol.empty()) shown += " + [" + a.vol + "]";
  return {energy, {"expr", shown, params, ""}};
}

void apply_grid(const std::string& spec, CheckConfig& cfg) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("--grid expects min,max[,n], got '" + spec + "'");
    parts.push_back(v);
  }
  if (parts.size() != 2 && parts.size() != 3) throw UsageError("--grid expects min,max[,n], got '" + spec + "'");
  cfg.grid_min = parts[0];
  cfg.grid_max = parts[1];
  if (parts.size() == 3) {
    if (parts[2] != std::floor(parts[2]) || parts[2] > 1e7) throw UsageError("--grid: n must be an integer");
    cfg.grid_n = static_cast<int>(parts[2]);
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int exit_for(Overall o) {
  switch (o) {
    case Overall::PolyconvexConsistent: return 0;
    case Overall::NotRankOneConvex: return 1;
    case Overall::Inconclusive: return 2;
  }
  return 2;
}

Mat2 parse_matrix(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::out_of_range&) {
      throw Error(ErrorKind::NonFinite, "matrix entry '" + item + "' overflows");
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("--matrix entry '" + item + "' is not a number");
    v.push_back(x);
  }
  if (v.size() != 4) throw UsageError("--matrix expects a11,a12,a21,a22");
  return Mat2(v[0], v[1], v[2], v[3]);
}

void print_kv(const char* key, double value) { std::cout << key << "=" << format_real(value) << "\n"; }

int run_dist(const std::string& matrix, const std::string& what) {
  const Mat2 F = parse_matrix(matrix);
  if (what == "dist") {
    std::cout << format_real(dist_euclid_sq_so2(F)) << "\n";
  } else if (what == "hull") {
    std::cout << format_real(qc_hull_dist_sq_so2(F)) << "\n";
  } else if (what == "K") {
    std::cout << format_real(distortion_k(F)) << "\n";
  } else {
    const SingularPair s = svd2(F);
    const Invariants2 inv = invariants(s);
    print_kv("lambda1", s.lambda1);
    print_kv("lambda2", s.lambda2);
    print_kv("t", inv.ratio);
    print_kv("theta", inv.theta);
    print_kv("eta", inv.eta);
    print_kv("K", inv.distortion);
  }
  return 0;
}

int run_convert(const Selected& sel, const CheckConfig& cfg, int points) {
  if (points < 2) throw UsageError("--points must be at least 2");
  if (sel.energy.is_split()) throw Error(ErrorKind::NotIsochoric, "convert needs an energy without volumetric part");
  cfg.validate();
  const ScalarForms forms = scalar_forms(sel.energy.rep);
  const double top = std::log(cfg.grid_max);
  std::cout << "t,h,theta,f,eta,ftilde,r,z\n";
  for (int i = 0; i < points; ++i) {
    const double L = top * i / (points - 1);
    const double t = i + 1 == points ? cfg.grid_max : std::exp(L);
    const double theta = L * L;
    const double eta = 0.5 * theta;
    const double r = std::cosh(L);
    std::cout << format_real(t) << "," << format_real(forms.h(t)) << "," << format_real(theta) << ","
              << format_real(forms.f(theta)) << "," << format_real(eta) << "," << format_real(forms.ftilde(eta))
              << "," << format_real(r) << "," << format_real(forms.z(r)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-one convexity and polyconvexity checks for planar isotropic energies"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  EnergyArgs energy_args;
  CheckConfig cfg;
  std::string grid;
  bool text = false;
  bool json = false;
  std::optional<int> oracle_n;
  std::optional<std::uint64_t> seed;
  int samples = SampleSpec{}.n_points;
  int points = 21;
  std::string matrix;
  std::string what;

  auto add_format = [&](CLI::App* cmd) {
    auto* t = cmd->add_flag("--text", text, "Human-readable summary");
    auto* j = cmd->add_flag("--json", json, "JSON report (default)");
    t->excludes(j);
  };

  CLI::App* check = app.add_subcommand("check", "Run all applicable criteria and an optional oracle");
  add_energy_options(check, energy_args);
  check->add_option("--grid", grid, "Stretch-ratio grid min,max[,n]");
  check->add_option("--tol-abs", cfg.tol_abs, "Absolute slack of the >= 0 tests");
  check->add_option("--tol-rel", cfg.tol_rel, "Relative slack of the >= 0 tests");
  check->add_option("--oracle", oracle_n, "Run the rank-one oracle on N samples");
  check->add_option("--seed", seed, "Oracle seed");
  add_format(check);

  CLI::App* convert = app.add_subcommand("convert", "Tabulate h, f, ftilde, z on matched points as CSV");
  add_energy_options(convert, energy_args);
  convert->add_option("--points", points, "Number of rows");
  convert->add_option("--grid", grid, "Stretch-ratio range min,max[,n]; rows run from t = 1 to max");

  CLI::App* dist = app.add_subcommand("dist", "Distance to SO(2), its hull, distortion, invariants");
  dist->add_option("--matrix", matrix, "F as a11,a12,a21,a22")->required();
  dist->add_option("--what", what, "Quantity to print")
      ->check(CLI::IsMember({"dist", "hull", "K", "invariants"}))
      ->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Randomized rank-one convexity oracle");
  add_energy_options(oracle, energy_args);
  oracle->add_option("--samples", samples, "Number of sampled F");
  oracle->add_option("--seed", seed, "Seed");
  add_format(oracle);

  CLI::App* list = app.add_subcommand("list", "List the energy catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*dist) return run_dist(matrix, what);

    if (*list) {
      for (const auto& item : catalog()) {
        std::cout << item.name;
        for (const auto& [k, v] : item.defaults) std::cout << " " << k << "=" << format_real(v);
        std::cout << "  [" << make(item.name).expected_label() << "]  " << item.formula << "\n";
      }
      return 0;
    }

    if (!grid.empty()) apply_grid(grid, cfg);
    cfg.validate();
    const Selected sel = select_energy(energy_args);

    if (*convert) return run_convert(sel, cfg, points);

    if (*oracle) {
      SampleSpec spec;
      spec.n_points = samples;
      if (seed) spec.seed = *seed;
      spec.validate();
      const OracleReport report = run_oracle(sel.energy.matrix_energy(), spec);
      if (text) {
        std::cout << oracle_report_text(sel.source, report);
      } else {
        print_json(oracle_report_json(sel.source, report, spec));
      }
      return report.status == OracleStatus::Violation ? 1 : 0;
    }

    std::optional<SampleSpec> spec;
    if (oracle_n || seed) {
      spec = SampleSpec{};
      if (oracle_n) spec->n_points = *oracle_n;
      if (seed) spec->seed = *seed;
      spec->validate();
    }
    const Analysis analysis = analyze(sel.energy, cfg, spec);
    if (text) {
      std::cout << report_text(sel.source, analysis);
    } else {
      print_json(report_json(sel.source, analysis, cfg));
    }
    return exit_for(analysis.overall);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::UnknownEnergy:
      case ErrorKind::ParamOutOfRange:
      case ErrorKind::InvalidConfig: return kExitUsage;
      default: return kExitData;
    }
  }
}

#include "isoconv/zoo.hpp"

#include <cmath>

#include "isoconv/format.hpp"
#include "isoconv/planar.hpp"

namespace isoconv {

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::Polyconvex: return "POLYCONVEX";
    case Expectation::NotRankOneConvex: return "NOT_RANK_ONE_CONVEX";
    case Expectation::Conditional: return "CONDITIONAL";
    case Expectation::OracleConsistent: return "ORACLE_CONSISTENT";
  }
  return "?";
}

std::string ZooEntry::expected_label() const {
  std::string out(to_string(expected));
  if (expected == Expectation::Conditional) out += "(" + condition + ")";
  return out;
}

namespace {

// ||dev2 log U||^2 through the matrix logarithm; the oracle's energies use
// this path so they do not share code with the singular-value invariants.
double eta_matrix(const Mat2& F) { return dev2(log_spd(polar_u(F))).frob_sq(); }

const Domain kHalfLine = Domain::closed_from(0.0);
const Domain kRatio = Domain::open_from(0.0);
const Domain kDistortion = Domain::closed_from(1.0);

ScalarFn exp_ftilde(double scale, double k) {
  return ScalarFn([=](double eta) { return scale * std::exp(k * eta); }, kHalfLine,
                  [=](double eta) { return scale * k * std::exp(k * eta); },
                  [=](double eta) { return scale * k * k * std::exp(k * eta); });
}

// (kappa / 2 khat) exp(khat log^2 s)
ScalarFn exp_volumetric(double kappa, double khat) {
  const double A = kappa / (2.0 * khat);
  return ScalarFn(
      [=](double s) {
        const double L = std::log(s);
        return A * std::exp(khat * L * L);
      },
      kRatio,
      [=](double s) {
        const double L = std::log(s);
        return A * std::exp(khat * L * L) * 2.0 * khat * L / s;
      },
      [=](double s) {
        const double L = std::log(s);
        return A * std::exp(khat * L * L) * (2.0 * khat / (s * s)) * (2.0 * khat * L * L + 1.0 - L);
      });
}

double w_sharp_value(double sum, double gap, double det) {
  if (gap + sum <= 1.0) return -4.0 * det;
  return 2.0 * gap - 1.0;
}

struct Builder {
  const CatalogItem& item;
  Params params;

  double get(const std::string& key) const { return params.at(key); }
};

ZooEntry base(const Builder& b, Energy energy, Expectation expected, std::string rationale) {
  ZooEntry e{b.item.name, b.params, std::move(energy), expected, "", true, false, std::move(rationale), true};
  return e;
}

ZooEntry build(const Builder& b) {
  const std::string& name = b.item.name;

  if (name == "hencky_iso") {
    const double mu = b.get("mu");
    ScalarFn ft([=](double eta) { return mu * eta; }, kHalfLine, [=](double) { return mu; },
                [](double) { return 0.0; });
    Energy en{EnergyRep::strain_ftilde(name, ft), std::nullopt,
              [=](const Mat2& F) { return mu * eta_matrix(F); }};
    return base(b, std::move(en), Expectation::NotRankOneConvex,
                "ftilde criterion reduces to 1 - sqrt(2 eta), negative for eta > 1/2");
  }

  if (name == "exp_hencky_iso") {
    const double mu = b.get("mu");
    const double k = b.get("k");
    Energy en{EnergyRep::strain_ftilde(name, exp_ftilde(mu, k)), std::nullopt,
              [=](const Mat2& F) { return mu * std::exp(k * eta_matrix(F)); }};
    ZooEntry e = base(b, std::move(en), Expectation::Conditional,
                      "ftilde criterion is k e^(k eta) (2 k eta + 1 - sqrt(2 eta)); the bracket's minimum over eta "
                      "is attained at eta = 2 and is non-negative iff k >= 1/4");
    e.condition = "k >= 1/4";
    e.condition_holds = k >= 0.25;
    return e;
  }

  if (name == "exp_hencky_full") {
    const double mu = b.get("mu");
    const double kappa = b.get("kappa");
    const double k = b.get("k");
    const double khat = b.get("khat");
    const ScalarFn vol = exp_volumetric(kappa, khat);
    Energy en{EnergyRep::strain_ftilde(name, exp_ftilde(mu / k, k)), vol, [=](const Mat2& F) {
                const double L = std::log(F.det());
                return mu / k * std::exp(k * eta_matrix(F)) + kappa / (2.0 * khat) * std::exp(khat * L * L);
              }};
    ZooEntry e = base(b, std::move(en), Expectation::Conditional,
                      "isochoric part polyconvex iff k >= 1/4; volumetric part convex iff khat >= 1/8; together "
                      "sufficient for polyconvexity");
    e.condition = "k >= 1/4 and khat >= 1/8";
    e.condition_holds = k >= 0.25 && khat >= 0.125;
    e.undetermined_when_false = true;
    return e;
  }

  if (name == "biot") {
    const double mu = b.get("mu");
    Energy en{EnergyRep::matrix(name, [=](const Mat2& F) { return mu * dist_euclid_sq_so2(F); }, false),
              std::nullopt, [=](const Mat2& F) { return mu * (polar_u(F) - Mat2::identity()).frob_sq(); }};
    return base(b, std::move(en), Expectation::NotRankOneConvex,
                "||U - id||^2 loses ellipticity under strong compression");
  }

  if (name == "dist_iso_so2") {
    const double mu = b.get("mu");
    ScalarFn z(
        [=](double r) {
          const double s = std::sqrt(2.0 * r + 2.0);
          return mu * ((s - 1.0) * (s - 1.0) - 1.0);
        },
        kDistortion, [=](double r) { return mu * (2.0 - 2.0 / std::sqrt(2.0 * r + 2.0)); },
        [=](double r) {
          const double s = std::sqrt(2.0 * r + 2.0);
          return mu * 2.0 / (s * s * s);
        });
    Energy en{EnergyRep::distortion_z(name, z), std::nullopt, [=](const Mat2& F) {
                const Mat2 U = polar_u(F);
                return mu * ((1.0 / std::sqrt(F.det())) * U - Mat2::identity()).frob_sq();
              }};
    return base(b, std::move(en), Expectation::Polyconvex,
                "z is convex and non-decreasing in the distortion K, which is polyconvex");
  }

  if (name == "power_k") {
    const double mu = b.get("mu");
    const double beta = b.get("beta");
    ScalarFn z([=](double r) { return mu * std::pow(2.0 * r, beta); }, kDistortion,
               [=](double r) { return mu * 2.0 * beta * std::pow(2.0 * r, beta - 1.0); },
               [=](double r) { return mu * 4.0 * beta * (beta - 1.0) * std::pow(2.0 * r, beta - 2.0); });
    Energy en{EnergyRep::distortion_z(name, z), std::nullopt,
              [=](const Mat2& F) { return mu * std::pow(F.frob_sq() / F.det(), beta); }};
    ZooEntry e = base(b, std::move(en), Expectation::Conditional,
                      "z criterion equals beta (2r)^beta / r times (beta - 1)(r^2 - 1)(r + sqrt(r^2 - 1)) / r + 1, "
                      "which stays non-negative for all r iff beta >= 1");
    e.condition = "beta >= 1";
    e.condition_holds = beta >= 1.0;
    return e;
  }

  if (name == "w_sharp") {
    Energy en{EnergyRep::matrix(
                  name, [](const Mat2& F) { return w_sharp_value(trace_stretch(F), stretch_gap(F), F.det()); },
                  false),
              std::nullopt, [](const Mat2& F) {
                const double n2 = F.frob_sq();
                const double d = F.det();
                return w_sharp_value(std::sqrt(std::max(0.0, n2 + 2.0 * d)), std::sqrt(std::max(0.0, n2 - 2.0 * d)),
                                     d);
              }};
    return base(b, std::move(en), Expectation::OracleConsistent,
                "rank-one convex since lambda_max +- lambda_min are convex; not isochoric, so only the oracle "
                "and separate convexity apply; no quasiconvexity claim");
  }

  if (name == "ex_i") {
    ScalarFn h(
        [](double t) {
          const double d = std::sqrt(t) - 1.0 / std::sqrt(t);
          return 2.0 * d * d;
        },
        kRatio, [](double t) { return 2.0 * (1.0 - 1.0 / (t * t)); }, [](double t) { return 4.0 / (t * t * t); });
    Energy en{EnergyRep::ratio_h(name, h), std::nullopt, [](const Mat2& F) {
                const Mat2 X = (1.0 / std::sqrt(F.det())) * polar_u(F);
                return (X - X.inverse()).frob_sq();
              }};
    return base(b, std::move(en), Expectation::Polyconvex, "h(t) = 2(t + 1/t) - 4 has h'' = 4/t^3 > 0");
  }

  if (name == "ex_ii") {
    ScalarFn h(
        [](double t) {
          const double L = std::log(t);
          return std::exp(0.5 * L * L) * (t + 1.0 / t);
        },
        kRatio,
        [](double t) {
          const double L = std::log(t);
          const double t2 = 1.0 / (t * t);
          return std::exp(0.5 * L * L) * (1.0 - t2 + L * (1.0 + t2));
        },
        [](double t) {
          const double L = std::log(t);
          const double a = 1.0 / t;
          const double c = a * a * a;
          return std::exp(0.5 * L * L) * (a + 3.0 * c + (a - 3.0 * c) * L + (a + c) * L * L);
        });
    Energy en{EnergyRep::ratio_h(name, h), std::nullopt,
              [](const Mat2& F) { return std::exp(eta_matrix(F)) * F.frob_sq() / F.det(); }};
    return base(b, std::move(en), Expectation::Polyconvex,
                "h'' >= 0 reduces to (3/t^2 - 1) log t <= 1 + 3/t^2 + (1 + 1/t^2) log^2 t, true for all t");
  }

  if (name == "ex_iii") {
    ScalarFn ft([](double eta) { return std::cosh(eta); }, kHalfLine, [](double eta) { return std::sinh(eta); },
                [](double eta) { return std::cosh(eta); });
    Energy en{EnergyRep::strain_ftilde(name, ft), std::nullopt,
              [](const Mat2& F) { return std::cosh(eta_matrix(F)); }};
    return base(b, std::move(en), Expectation::Polyconvex,
                "2 eta cosh eta + (1 - sqrt(2 eta)) sinh eta >= (2 eta + 1 - sqrt(2 eta)) sinh eta >= 0");
  }

  if (name == "ex_iv") {
    const double beta = b.get("beta");
    const double a = 0.5 * beta;
    ScalarFn ft([=](double eta) { return std::pow(eta, a); }, kHalfLine,
                [=](double eta) { return a * std::pow(eta, a - 1.0); },
                [=](double eta) { return a == 1.0 ? 0.0 : a * (a - 1.0) * std::pow(eta, a - 2.0); });
    Energy en{EnergyRep::strain_ftilde(name, ft), std::nullopt,
              [=](const Mat2& F) { return std::pow(dev2(log_spd(polar_u(F))).frob(), beta); }};
    ZooEntry e = base(b, std::move(en), Expectation::NotRankOneConvex,
                      "with a = beta/2 the ftilde criterion is a eta^(a-1) (2a - 1 - sqrt(2 eta)), negative for "
                      "large eta whatever beta > 0");
    e.c1_at_identity = beta > 1.0;
    return e;
  }

  if (name == "ex_v") {
    ScalarFn ft([](double eta) { return std::exp(eta + std::sin(eta)); }, kHalfLine,
                [](double eta) { return std::exp(eta + std::sin(eta)) * (1.0 + std::cos(eta)); },
                [](double eta) {
                  const double c = 1.0 + std::cos(eta);
                  return std::exp(eta + std::sin(eta)) * (c * c - std::sin(eta));
                });
    Energy en{EnergyRep::strain_ftilde(name, ft), std::nullopt, [](const Mat2& F) {
                const double eta = eta_matrix(F);
                return std::exp(eta + std::sin(eta));
              }};
    return base(b, std::move(en), Expectation::NotRankOneConvex,
                "monotone with exponential growth but the ftilde criterion is negative at eta = pi/2");
  }

  throw Error(ErrorKind::UnknownEnergy, name);
}

}  // namespace

const std::vector<CatalogItem>& catalog() {
  static const std::vector<CatalogItem> items = {
      {"hencky_iso", {{"mu", 1.0}}, "mu ||dev2 log U||^2"},
      {"exp_hencky_iso", {{"mu", 1.0}, {"k", 1.0}}, "mu exp(k ||dev2 log U||^2)"},
      {"exp_hencky_full",
       {{"mu", 1.0}, {"kappa", 1.0}, {"k", 1.0}, {"khat", 0.25}},
       "(mu/k) exp(k ||dev2 log U||^2) + (kappa/(2 khat)) exp(khat log^2 det F)"},
      {"biot", {{"mu", 1.0}}, "mu ||U - id||^2"},
      {"dist_iso_so2", {{"mu", 1.0}}, "mu ((sqrt(||F||^2/det F + 2) - 1)^2 - 1)"},
      {"power_k", {{"mu", 1.0}, {"beta", 1.0}}, "mu (||F||^2/det F)^beta"},
      {"w_sharp", {}, "-4 det F if lambda_max <= 1/2, else 2 (lambda_max - lambda_min) - 1"},
      {"ex_i", {}, "||V - V^-1||^2 with V = U / sqrt(det U)"},
      {"ex_ii", {}, "exp(||dev2 log U||^2) ||F||^2 / det F"},
      {"ex_iii", {}, "cosh(||dev2 log U||^2)"},
      {"ex_iv", {{"beta", 1.0}}, "||dev2 log U||^beta"},
      {"ex_v", {}, "exp(||dev2 log U||^2 + sin ||dev2 log U||^2)"},
  };
  return items;
}

ZooEntry make(const std::string& name, const Params& params) {
  const CatalogItem* item = nullptr;
  for (const auto& c : catalog()) {
    if (c.name == name) item = &c;
  }
  if (!item) throw Error(ErrorKind::UnknownEnergy, "no zoo entry named '" + name + "'");

  Params merged = item->defaults;
  for (const auto& [key, value] : params) {
    if (!item->defaults.count(key)) {
      throw Error(ErrorKind::ParamOutOfRange, "'" + name + "' has no parameter '" + key + "'");
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error(ErrorKind::ParamOutOfRange, key + " must be positive and finite, got " + format_real(value));
    }
    merged[key] = value;
  }
  return build(Builder{*item, merged});
}

ExpectedVsActual expected_vs_actual(const ZooEntry& entry, const CheckConfig& cfg, const SampleSpec& spec) {
  ExpectedVsActual out{analyze(entry.energy, cfg, spec), false};
  const Overall o = out.analysis.overall;
  const bool oracle_clean = out.analysis.oracle && out.analysis.oracle->status == OracleStatus::ConsistentConvex;
  switch (entry.expected) {
    case Expectation::Polyconvex: out.matches = o == Overall::PolyconvexConsistent; break;
    case Expectation::NotRankOneConvex: out.matches = o == Overall::NotRankOneConvex; break;
    case Expectation::Conditional:
      if (entry.condition_holds) {
        out.matches = o != Overall::NotRankOneConvex;
      } else {
        out.matches = entry.undetermined_when_false || o == Overall::NotRankOneConvex;
      }
      break;
    case Expectation::OracleConsistent: out.matches = oracle_clean && o != Overall::NotRankOneConvex; break;
  }
  return out;
}

}  // namespace isoconv

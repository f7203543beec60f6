#include "isoconv/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isoconv/numdiff.hpp"

namespace isoconv {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

class Accumulator {
 public:
  Accumulator(const CheckConfig& cfg, std::string id, GridSummary grid) : cfg_(cfg) {
    verdict_.criterion_id = std::move(id);
    verdict_.grid = std::move(grid);
    verdict_.min_margin = std::numeric_limits<double>::infinity();
  }

  void add(double x, double v, double scale, double partner = 0.0) {
    if (!std::isfinite(v) || !std::isfinite(scale)) {
      throw Error(ErrorKind::DomainError, verdict_.criterion_id + ": non-finite criterion value");
    }
    if (v < verdict_.min_margin) {
      verdict_.min_margin = v;
      verdict_.min_margin_point = x;
    }
    if (v < -(cfg_.tol_abs + cfg_.tol_rel * scale)) {
      const double normalized = v / scale;
      if (!failed_ || normalized < best_norm_ || (normalized == best_norm_ && x < verdict_.witness->point)) {
        best_norm_ = normalized;
        verdict_.witness = Witness{x, v};
        partner_ = partner;
      }
      failed_ = true;
    }
  }

  Verdict finish() {
    if (!std::isfinite(verdict_.min_margin)) verdict_.min_margin = 0.0;
    if (failed_) {
      verdict_.status = Status::Fail;
    } else {
      verdict_.status = verdict_.min_margin < 0.0 ? Status::Inconclusive : Status::Pass;
    }
    return verdict_;
  }

  double partner() const { return partner_; }

 private:
  const CheckConfig& cfg_;
  Verdict verdict_;
  bool failed_ = false;
  double best_norm_ = 0.0;
  double partner_ = 0.0;
};

// log t on the grid, so theta = L^2 never goes through exp and back.
std::vector<double> log_ratio_grid(const CheckConfig& cfg) {
  cfg.validate();
  const double lo = std::log1p(cfg.grid_min - 1.0);
  const double hi = std::log(cfg.grid_max);
  std::vector<double> out(static_cast<std::size_t>(cfg.grid_n));
  for (int i = 0; i < cfg.grid_n; ++i) {
    out[static_cast<std::size_t>(i)] = i + 1 == cfg.grid_n ? hi : lo + (hi - lo) * i / (cfg.grid_n - 1);
  }
  return out;
}

GridSummary summary(const char* var, const std::vector<double>& xs) {
  return {var, xs.front(), xs.back(), static_cast<int>(xs.size())};
}

template <typename Map>
std::vector<double> image(const std::vector<double>& logs, Map map) {
  std::vector<double> out;
  out.reserve(logs.size());
  for (double L : logs) out.push_back(map(L));
  return out;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
  return out;
}

}  // namespace

std::vector<double> t_grid(const CheckConfig& cfg) {
  return image(log_ratio_grid(cfg), [](double L) { return std::exp(L); });
}

Verdict check_h_monotone(const ScalarFn& h, const CheckConfig& cfg) {
  const auto ts = t_grid(cfg);
  Accumulator acc(cfg, "h_monotone", summary("t", ts));
  for (double t : ts) {
    const double d1 = d1_numeric(h, t, cfg);
    acc.add(t, d1, std::abs(d1));
  }
  return acc.finish();
}

Verdict check_h_criterion(const ScalarFn& h, const CheckConfig& cfg) {
  const auto ts = t_grid(cfg);
  Accumulator convex(cfg, "h_convex_nondecreasing", summary("t", ts));
  for (double t : ts) {
    const double d2 = d2_numeric(h, t, cfg);
    convex.add(t, d2, std::abs(d2));
  }
  Verdict out = convex.finish();
  const Verdict mono = check_h_monotone(h, cfg);
  if (mono.min_margin < out.min_margin) {
    out.min_margin = mono.min_margin;
    out.min_margin_point = mono.min_margin_point;
  }
  if (out.status == Status::Fail) return out;
  if (mono.status == Status::Fail) {
    out.status = Status::Fail;
    out.witness = mono.witness;
  } else if (mono.status == Status::Inconclusive) {
    out.status = Status::Inconclusive;
  }
  return out;
}

Verdict check_f_criterion(const ScalarFn& f, const CheckConfig& cfg) {
  const auto thetas = image(log_ratio_grid(cfg), [](double L) { return L * L; });
  Accumulator acc(cfg, "f_criterion", summary("theta", thetas));
  for (double theta : thetas) {
    const double a = 2.0 * theta * d2_numeric(f, theta, cfg);
    const double b = (1.0 - std::sqrt(theta)) * d1_numeric(f, theta, cfg);
    acc.add(theta, a + b, std::abs(a) + std::abs(b));
  }
  return acc.finish();
}

Verdict check_ftilde_criterion(const ScalarFn& ftilde, const CheckConfig& cfg) {
  const auto etas = image(log_ratio_grid(cfg), [](double L) { return 0.5 * L * L; });
  Accumulator acc(cfg, "ftilde_criterion", summary("eta", etas));
  for (double eta : etas) {
    const double a = 2.0 * eta * d2_numeric(ftilde, eta, cfg);
    const double b = (1.0 - std::sqrt(2.0 * eta)) * d1_numeric(ftilde, eta, cfg);
    acc.add(eta, a + b, std::abs(a) + std::abs(b));
  }
  return acc.finish();
}

Verdict check_z_criterion(const ScalarFn& z, const CheckConfig& cfg) {
  const auto rs = image(log_ratio_grid(cfg), [](double L) { return std::cosh(L); });
  Accumulator acc(cfg, "z_criterion", summary("r", rs));
  for (double r : rs) {
    const double m = (r - 1.0) * (r + 1.0);
    const double a = m * (r + std::sqrt(m)) * d2_numeric(z, r, cfg);
    const double b = d1_numeric(z, r, cfg);
    acc.add(r, a + b, std::abs(a) + std::abs(b));
  }
  return acc.finish();
}

Verdict check_separate_convexity(const SymmetricFn2& g, const CheckConfig& cfg, double* witness_partner) {
  cfg.validate();
  const double reach = std::sqrt(cfg.grid_max);
  const auto ls = log_spaced(1.0 / reach, reach, cfg.grid2_n);
  Accumulator acc(cfg, "separate_convexity", {"lambda1", ls.front(), ls.back(), cfg.grid2_n * cfg.grid2_n});
  for (double y : ls) {
    const ScalarFn slice([&g, y](double x) { return g(x, y); }, Domain::open_from(0.0));
    for (double x : ls) {
      double d2 = 0.0;
      try {
        d2 = g.has_d11() ? g.d11(x, y) : d2_numeric(slice, x, cfg);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DomainError || !g.has_d11()) throw;
        d2 = d2_numeric(slice, x, cfg);
      }
      acc.add(x, d2, std::abs(d2), y);
    }
  }
  if (witness_partner) *witness_partner = acc.partner();
  return acc.finish();
}

Verdict check_f_monotone(const ScalarFn& f, const CheckConfig& cfg) {
  const auto thetas = image(log_ratio_grid(cfg), [](double L) { return L * L; });
  Accumulator acc(cfg, "f_monotone", summary("theta", thetas));
  for (double theta : thetas) {
    const double d1 = d1_numeric(f, theta, cfg);
    acc.add(theta, d1, std::abs(d1));
  }
  return acc.finish();
}

GrowthBound growth_bound(const ScalarFn& f, const CheckConfig& cfg) {
  GrowthBound b;
  b.c1 = d1_numeric(f, 1.0, cfg) / std::exp(1.0);
  b.c2 = f(0.0) - b.c1;
  return b;
}

double growth_bound_onset() {
  const double L = std::log(2.0 * std::exp(1.0) - 1.0);
  return L * L;
}

Verdict check_growth_bound(const ScalarFn& f, const CheckConfig& cfg) {
  const double onset = growth_bound_onset();
  std::vector<double> thetas;
  for (double L : log_ratio_grid(cfg)) {
    if (L * L >= onset) thetas.push_back(L * L);
  }
  const GrowthBound b = growth_bound(f, cfg);
  GridSummary grid{"theta", thetas.empty() ? onset : thetas.front(), thetas.empty() ? onset : thetas.back(),
                   static_cast<int>(thetas.size())};
  Accumulator acc(cfg, "growth_bound", grid);
  for (double theta : thetas) {
    const double fv = f(theta);
    const double bound = b.c1 * std::exp(std::sqrt(theta));
    acc.add(theta, fv - bound - b.c2, std::abs(fv) + std::abs(bound) + std::abs(b.c2));
  }
  return acc.finish();
}

Verdict check_volumetric_convexity(const ScalarFn& wvol, const CheckConfig& cfg) {
  cfg.validate();
  const auto ss = log_spaced(1.0 / cfg.grid_max, cfg.grid_max, cfg.grid_n);
  Accumulator acc(cfg, "volumetric_convexity", summary("J", ss));
  for (double s : ss) {
    const double d2 = d2_numeric(wvol, s, cfg);
    acc.add(s, d2, std::abs(d2));
  }
  return acc.finish();
}

}  // namespace isoconv

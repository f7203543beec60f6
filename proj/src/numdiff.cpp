#include "isoconv/numdiff.hpp"

#include <algorithm>
#include <cmath>

#include "isoconv/format.hpp"

namespace isoconv {

namespace {

enum class Stencil { Central, Forward, Backward };

// Largest offsets used: central needs x +- h, one-sided needs x + 3h (or x - 3h).
Stencil choose(const Domain& dom, double x, double h, int one_sided_reach) {
  if (!dom.contains(x)) {
    throw Error(ErrorKind::DomainError, "derivative requested at " + format_real(x) + " outside " + dom.str());
  }
  if (dom.contains(x - h) && dom.contains(x + h)) return Stencil::Central;
  if (dom.contains(x + one_sided_reach * h)) return Stencil::Forward;
  if (dom.contains(x - one_sided_reach * h)) return Stencil::Backward;
  throw Error(ErrorKind::DomainError, "difference stencil at " + format_real(x) + " does not fit in " + dom.str());
}

double first_diff(const ScalarFn& fn, double x, double h, Stencil s) {
  switch (s) {
    case Stencil::Central: return (fn(x + h) - fn(x - h)) / (2.0 * h);
    case Stencil::Forward: return (-3.0 * fn(x) + 4.0 * fn(x + h) - fn(x + 2.0 * h)) / (2.0 * h);
    case Stencil::Backward: return (3.0 * fn(x) - 4.0 * fn(x - h) + fn(x - 2.0 * h)) / (2.0 * h);
  }
  return 0.0;
}

double second_diff(const ScalarFn& fn, double x, double h, Stencil s) {
  switch (s) {
    case Stencil::Central: return (fn(x + h) - 2.0 * fn(x) + fn(x - h)) / (h * h);
    case Stencil::Forward:
      return (2.0 * fn(x) - 5.0 * fn(x + h) + 4.0 * fn(x + 2.0 * h) - fn(x + 3.0 * h)) / (h * h);
    case Stencil::Backward:
      return (2.0 * fn(x) - 5.0 * fn(x - h) + 4.0 * fn(x - 2.0 * h) - fn(x - 3.0 * h)) / (h * h);
  }
  return 0.0;
}

}  // namespace

double d1_numeric(const ScalarFn& fn, double x, const CheckConfig& cfg) {
  if (fn.has_d1()) return fn.d1(x);
  const double h = cfg.d1_step * std::max(1.0, std::abs(x));
  const Stencil s = choose(fn.domain(), x, h, 2);
  return (4.0 * first_diff(fn, x, 0.5 * h, s) - first_diff(fn, x, h, s)) / 3.0;
}

double d2_numeric(const ScalarFn& fn, double x, const CheckConfig& cfg) {
  if (fn.has_d2()) return fn.d2(x);
  const double h = cfg.d2_step * std::max(1.0, std::abs(x));
  const Stencil s = choose(fn.domain(), x, h, 3);
  return (4.0 * second_diff(fn, x, 0.5 * h, s) - second_diff(fn, x, h, s)) / 3.0;
}

}  // namespace isoconv

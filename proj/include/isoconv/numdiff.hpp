#pragma once

#include "isoconv/check_config.hpp"
#include "isoconv/scalar_fn.hpp"

namespace isoconv {

/// First derivative. Uses the analytic d1 when registered; otherwise central
/// differences with step cfg.d1_step * max(1, |x|) and one Richardson level.
/// Near a domain boundary the stencil switches to a one-sided second-order
/// formula; DomainError if neither fits.
double d1_numeric(const ScalarFn& fn, double x, const CheckConfig& cfg = {});

/// Second derivative, same scheme with step cfg.d2_step * max(1, |x|).
double d2_numeric(const ScalarFn& fn, double x, const CheckConfig& cfg = {});

}  // namespace isoconv

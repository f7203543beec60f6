#include <doctest.h>

#include <cmath>

#include "isoconv/numdiff.hpp"
#include "isoconv/scalar_fn.hpp"

using namespace isoconv;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an isoconv::Error");
  return ErrorKind::NonFinite;
}

}  // namespace

TEST_CASE("domains") {
  const Domain open = Domain::open_from(0.0);
  const Domain closed = Domain::closed_from(1.0);
  CHECK_FALSE(open.contains(0.0));
  CHECK(open.contains(1e-300));
  CHECK(closed.contains(1.0));
  CHECK_FALSE(closed.contains(0.999));
  CHECK_FALSE(closed.contains(INFINITY));
  CHECK(open.str() == "(0, inf)");
  CHECK(closed.str() == "[1, inf)");
}

TEST_CASE("evaluation outside the domain or to a non-finite value is a DomainError") {
  const ScalarFn fn([](double x) { return std::log(x); }, Domain::closed_from(0.0));
  CHECK(kind_of([&] { fn(-1.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([&] { fn(0.0); }) == ErrorKind::DomainError);
  CHECK(fn(1.0) == 0.0);
  CHECK(kind_of([&] { fn.d1(1.0); }) == ErrorKind::InvalidConfig);
}

TEST_CASE("registration samples the domain") {
  CHECK(kind_of([] { ScalarFn::registered([](double x) { return 1.0 / (x - 2.0); }, Domain::closed_from(1.0)); }) ==
        ErrorKind::RegistrationFailed);
  CHECK(kind_of([] { ScalarFn::registered([](double x) { return std::log(x); }, Domain::closed_from(0.0)); }) ==
        ErrorKind::RegistrationFailed);
  CHECK_NOTHROW(ScalarFn::registered([](double x) { return std::log(x); }, Domain::open_from(0.0)));
  const auto xs = ScalarFn([](double x) { return x; }, Domain::open_from(0.0)).registration_samples();
  CHECK(xs.front() == 1e-6);
  CHECK(xs.size() == 8);
}

TEST_CASE("symmetric functions of two stretches") {
  CHECK_NOTHROW(SymmetricFn2::registered([](double x, double y) { return x * y; }));
  CHECK(kind_of([] { SymmetricFn2::registered([](double x, double y) { return x - y; }); }) ==
        ErrorKind::RegistrationFailed);
  const SymmetricFn2 g([](double x, double y) { return x * x + y * y; }, [](double, double) { return 2.0; });
  CHECK(g.has_d11());
  CHECK(g.d11(3.0, 4.0) == 2.0);
  CHECK(kind_of([&] { g(0.0, 1.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([&] { g.d11(-1.0, 1.0); }) == ErrorKind::DomainError);
}

TEST_CASE("numeric derivatives agree with closed forms") {
  const ScalarFn e([](double x) { return std::exp(0.3 * x); }, Domain::closed_from(0.0));
  const ScalarFn lg([](double x) { return std::log(x); }, Domain::open_from(0.0));
  for (double x : {0.5, 1.0, 3.0, 40.0}) {
    CHECK(d1_numeric(e, x) == doctest::Approx(0.3 * std::exp(0.3 * x)).epsilon(1e-9));
    CHECK(d2_numeric(e, x) == doctest::Approx(0.09 * std::exp(0.3 * x)).epsilon(1e-7));
    CHECK(d1_numeric(lg, x) == doctest::Approx(1.0 / x).epsilon(1e-9));
    CHECK(d2_numeric(lg, x) == doctest::Approx(-1.0 / (x * x)).epsilon(1e-6));
  }
  const ScalarFn big([](double x) { return x * x * x; }, Domain::open_from(0.0));
  CHECK(d2_numeric(big, 1e4) == doctest::Approx(6e4).epsilon(1e-8));
}

TEST_CASE("one-sided stencils at a closed boundary") {
  const ScalarFn fn([](double x) { return x * x + x; }, Domain::closed_from(0.0));
  CHECK(d1_numeric(fn, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(d2_numeric(fn, 0.0) == doctest::Approx(2.0).epsilon(1e-6));
  const ScalarFn bounded([](double x) { return std::sin(x); }, Domain{0.0, 1.0, false});
  CHECK(d1_numeric(bounded, 1.0 - 1e-7) == doctest::Approx(std::cos(1.0)).epsilon(1e-6));
  CHECK(kind_of([&] { d1_numeric(bounded, 2.0); }) == ErrorKind::DomainError);
}

TEST_CASE("a stencil that fits nowhere is a DomainError") {
  const ScalarFn tiny([](double x) { return x; }, Domain{0.0, 1e-9, false});
  CHECK(kind_of([&] { d2_numeric(tiny, 5e-10); }) == ErrorKind::DomainError);
}

TEST_CASE("analytic derivatives take precedence") {
  const ScalarFn fn([](double x) { return x; }, Domain::open_from(0.0), [](double) { return 7.0; },
                    [](double) { return -3.0; });
  CHECK(d1_numeric(fn, 2.0) == 7.0);
  CHECK(d2_numeric(fn, 2.0) == -3.0);
  CHECK(d1_numeric(fn.without_derivatives(), 2.0) == doctest::Approx(1.0));
}

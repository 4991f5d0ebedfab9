#include <doctest.h>

#include <cmath>

#include "meancomp/errors.hpp"
#include "meancomp/scalar_function.hpp"
#include "support.hpp"

using namespace meancomp;
using namespace meancomp::testing;

TEST_CASE("built-in constructors evaluate correctly") {
  CHECK(power_fn(2.0)(3.0) == doctest::Approx(9.0));
  CHECK(log_power_fn(2.0)(2.0) == doctest::Approx(4.0 * std::log(2.0)));
  CHECK(log_fn()(std::exp(1.0)) == doctest::Approx(1.0));
  CHECK(exp_fn()(0.0) == doctest::Approx(1.0));
  CHECK(affine_fn(2.0, -1.0)(3.0) == doctest::Approx(5.0));
  CHECK(const_fn(7.0)(123.0) == doctest::Approx(7.0));
  CHECK(identity_fn()(0.25) == doctest::Approx(0.25));
}

TEST_CASE("analytic derivatives agree with finite differences") {
  const ScalarFunction fns[] = {power_fn(2.5),  power_fn(-1.0),
                                log_power_fn(1.5), log_fn(),
                                exp_fn(),       affine_fn(3.0, 2.0)};
  for (const ScalarFunction& f : fns) {
    for (double x : {0.5, 1.0, 2.0, 3.5}) {
      const double h = 1e-5;
      CHECK(rel_err(f.deriv1(x), central_diff(f.value, x, h)) < 1e-5);
      CHECK(rel_err(f.deriv2(x), central_diff(f.deriv1, x, h)) < 1e-5);
    }
  }
}

TEST_CASE("linear combinations compose values and derivatives") {
  const ScalarFunction f = linear_combination(2.0, power_fn(2.0), -1.0,
                                              identity_fn());
  CHECK(f(3.0) == doctest::Approx(2.0 * 9.0 - 3.0));
  CHECK(f.deriv1(3.0) == doctest::Approx(2.0 * 6.0 - 1.0));
  CHECK(f.deriv2(3.0) == doctest::Approx(4.0));
  CHECK(f.domain.lo == doctest::Approx(0.0));

  const ScalarFunction g = scaled(log_fn(), -2.0);
  CHECK(g(1.0) == doctest::Approx(0.0));
  CHECK(g.deriv1(2.0) == doctest::Approx(-1.0));
}

TEST_CASE("interval intersection") {
  const Interval a{0.0, 10.0};
  const Interval b{-1.0, 5.0};
  const Interval c = intersect(a, b);
  CHECK(c.lo == 0.0);
  CHECK(c.hi == 5.0);
  CHECK(c.contains(2.0));
  CHECK(!c.contains(5.0));  // open interval
  CHECK(!c.contains(-0.5));
}

#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace meancomp {

using RealFn = std::function<double(double)>;

// Open interval (lo, hi); either end may be infinite.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x > lo && x < hi; }
  bool contains(const Interval& other) const { return other.lo >= lo && other.hi <= hi; }
};

Interval intersect(const Interval& a, const Interval& b);

// A real function on an open interval, with optional first and second
// derivative callables.  Values are immutable after construction and safe
// to evaluate concurrently.
struct ScalarFunction {
  Interval domain;
  RealFn value;
  RealFn deriv1;  // empty when unavailable
  RealFn deriv2;
  std::string label;

  double operator()(double x) const { return value(x); }
  bool has_deriv1() const { return static_cast<bool>(deriv1); }
  bool has_deriv2() const { return static_cast<bool>(deriv2); }
};

// Built-in constructors.  Every generator used by the library is assembled
// from these plus linear combinations.
ScalarFunction power_fn(double p);       // x^p on (0, inf)
ScalarFunction log_power_fn(double p);   // x^p * log(x) on (0, inf)
ScalarFunction log_fn();                 // log(x) on (0, inf)
ScalarFunction exp_fn();                 // e^x on R
ScalarFunction affine_fn(double a, double b);  // a*x + b on R
ScalarFunction const_fn(double c);
ScalarFunction identity_fn();

ScalarFunction scaled(const ScalarFunction& f, double c);
// a*f + b*g on the intersection of the domains.
ScalarFunction linear_combination(double a, const ScalarFunction& f,
                                  double b, const ScalarFunction& g);

}  // namespace meancomp

#include "meancomp/scalar_function.hpp"

#include <algorithm>

#include "meancomp/errors.hpp"

namespace meancomp {

namespace {
const Interval kPositive{0.0, std::numeric_limits<double>::infinity()};
const Interval kReals{};
}  // namespace

Interval intersect(const Interval& a, const Interval& b) {
  return Interval{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

ScalarFunction power_fn(double p) {
  ScalarFunction f;
  f.domain = kPositive;
  f.value = [p](double x) { return std::pow(x, p); };
  f.deriv1 = [p](double x) { return p * std::pow(x, p - 1.0); };
  f.deriv2 = [p](double x) { return p * (p - 1.0) * std::pow(x, p - 2.0); };
  f.label = "x^" + std::to_string(p);
  return f;
}

ScalarFunction log_power_fn(double p) {
  ScalarFunction f;
  f.domain = kPositive;
  f.value = [p](double x) { return std::pow(x, p) * std::log(x); };
  f.deriv1 = [p](double x) {
    return std::pow(x, p - 1.0) * (p * std::log(x) + 1.0);
  };
  f.deriv2 = [p](double x) {
    return std::pow(x, p - 2.0) * (p * (p - 1.0) * std::log(x) + 2.0 * p - 1.0);
  };
  f.label = "x^" + std::to_string(p) + "*log(x)";
  return f;
}

ScalarFunction log_fn() {
  ScalarFunction f;
  f.domain = kPositive;
  f.value = [](double x) { return std::log(x); };
  f.deriv1 = [](double x) { return 1.0 / x; };
  f.deriv2 = [](double x) { return -1.0 / (x * x); };
  f.label = "log";
  return f;
}

ScalarFunction exp_fn() {
  ScalarFunction f;
  f.domain = kReals;
  f.value = [](double x) { return std::exp(x); };
  f.deriv1 = f.value;
  f.deriv2 = f.value;
  f.label = "exp";
  return f;
}

ScalarFunction affine_fn(double a, double b) {
  ScalarFunction f;
  f.domain = kReals;
  f.value = [a, b](double x) { return a * x + b; };
  f.deriv1 = [a](double) { return a; };
  f.deriv2 = [](double) { return 0.0; };
  f.label = "affine(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return f;
}

ScalarFunction const_fn(double c) {
  ScalarFunction f = affine_fn(0.0, c);
  f.label = "const(" + std::to_string(c) + ")";
  return f;
}

ScalarFunction identity_fn() {
  ScalarFunction f = affine_fn(1.0, 0.0);
  f.label = "id";
  return f;
}

ScalarFunction scaled(const ScalarFunction& f, double c) {
  ScalarFunction r;
  r.domain = f.domain;
  r.value = [fv = f.value, c](double x) { return c * fv(x); };
  if (f.deriv1) r.deriv1 = [d = f.deriv1, c](double x) { return c * d(x); };
  if (f.deriv2) r.deriv2 = [d = f.deriv2, c](double x) { return c * d(x); };
  r.label = std::to_string(c) + "*" + f.label;
  return r;
}

ScalarFunction linear_combination(double a, const ScalarFunction& f,
                                  double b, const ScalarFunction& g) {
  ScalarFunction r;
  r.domain = intersect(f.domain, g.domain);
  r.value = [a, fv = f.value, b, gv = g.value](double x) {
    return a * fv(x) + b * gv(x);
  };
  if (f.deriv1 && g.deriv1) {
    r.deriv1 = [a, fd = f.deriv1, b, gd = g.deriv1](double x) {
      return a * fd(x) + b * gd(x);
    };
  }
  if (f.deriv2 && g.deriv2) {
    r.deriv2 = [a, fd = f.deriv2, b, gd = g.deriv2](double x) {
      return a * fd(x) + b * gd(x);
    };
  }
  r.label = "lincomb(" + f.label + "," + g.label + ")";
  return r;
}

}  // namespace meancomp

#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "meancomp/scalar_function.hpp"

namespace meancomp::testing {

// Central finite difference of a callable; the independent check used
// against every analytic derivative in the suite.
inline double central_diff(const std::function<double(double)>& fn, double x,
                           double h) {
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

inline double central_diff2(const std::function<double(double)>& fn, double x,
                            double h) {
  return (fn(x + h) - 2.0 * fn(x) + fn(x - h)) / (h * h);
}

inline double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  return out;
}

}  // namespace meancomp::testing

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "meancomp/measure.hpp"
#include "meancomp/scalar_function.hpp"

namespace meancomp {

using VecView = std::span<const double>;

// A parametrized family of d-variable means m(x, t): for every parameter t
// the map x -> m(x, t) satisfies min(x) <= m(x, t) <= max(x).  Partial
// derivatives are optional capabilities; indices are 0-based.
struct MeanFamily {
  int d = 2;
  Carrier carrier;
  std::function<double(VecView, const Param&)> eval;
  std::function<double(VecView, const Param&, int)> partial1;
  std::function<double(VecView, const Param&, int, int)> partial2;
  std::string label;

  bool has_partial1() const { return static_cast<bool>(partial1); }
  bool has_partial2() const { return static_cast<bool>(partial2); }
};

// m(x, t) = x_t over the index carrier {1, ..., d}.
MeanFamily coordinate_family(int d);

// m(x, t) = lambda_1(t) x_1 + ... + lambda_d(t) x_d with weights summing to
// one; validated at the supplied parameter check points.
MeanFamily weighted_arithmetic_family(
    std::vector<std::function<double(const Param&)>> lambdas, Carrier carrier,
    std::span<const Param> check_points);

// d = 2, lambda_1(t) = t on the unit interval.
MeanFamily segment_family();

// Weighted quasi-arithmetic mean over the simplex carrier:
// m(x, t) = phi^{-1}(t_1 phi(x_1) + ... + t_d phi(x_d)); the inverse is a
// monotone bisection on [min x, max x], never a supplied inverse formula.
MeanFamily quasi_arithmetic_family(ScalarFunction phi, int d);

// m(x, p) = p-th Holder (power) mean, over a finite set of exponents.
MeanFamily holder_path_family(int d, std::vector<double> exponents);

struct Envelope {
  std::function<double(VecView)> lower;
  std::function<double(VecView)> upper;
};

// Pointwise min/max of m(x, .) over the carrier: exact enumeration for
// finite carriers, a dense parameter grid (grid-limited accuracy) for the
// continuous ones.
Envelope family_envelope(const MeanFamily& fam, int t_resolution = 129);

// Parameter grid used by family_envelope and the comparison sweeps.
std::vector<Param> carrier_sample(const Carrier& carrier, int resolution);

// sup over x in domain^d of upper(x)/lower(x).  Sampled estimate on an
// endpoint-refined grid; ratios beyond `cap` report +infinity.  The domain
// must be a positive interval.
double family_ratio_sup(const MeanFamily& fam, Interval domain,
                        int x_resolution = 33, double cap = 1e6);

}  // namespace meancomp

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "meancomp/scalar_function.hpp"

namespace meancomp {

// Sign of the determinant D(x,y) = f(x)g(y) - f(y)g(x) for x < y.
enum class Orientation { Positive, Negative };

// C0: continuous Chebyshev pair; C1/C2 additionally have k-times
// differentiable generators with a nonvanishing Wronskian.
enum class Regularity { C0, C1, C2 };

// Nondegenerate 2x2 change of generators: (f,g) -> (a*f + b*g, c*f + d*g).
struct PairTransform {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  double det() const { return a * d - b * c; }
};

struct ChebyshevPair {
  ScalarFunction f;
  ScalarFunction g;
  Orientation orientation = Orientation::Positive;
  Regularity regularity = Regularity::C0;
  Interval domain;
};

// D(x,y) = f(x)g(y) - f(y)g(x); antisymmetric, zero exactly on the diagonal
// for a genuine Chebyshev pair.
double chebyshev_determinant(const ChebyshevPair& pair, double x, double y);

// f'(x)g(x) - g'(x)f(x), the first diagonal partial of the determinant.
double wronskian(const ChebyshevPair& pair, double x);

// (f''(x)g(x) - g''(x)f(x)) / (f'(x)g(x) - g'(x)f(x)), the ratio of the
// second to the first diagonal partial of the determinant.
double diag_d2_over_d1(const ChebyshevPair& pair, double x);

ChebyshevPair apply_transform(const ChebyshevPair& pair,
                              const PairTransform& t);

// Strictly increasing sample points covering the (possibly unbounded)
// interval; unbounded ends are compressed through a rational map.
std::vector<double> default_grid(const Interval& domain, int n = 64);

// Verifies the Chebyshev property on the grid (all pairwise determinants
// nonzero with one sign), detects the orientation, and classifies the
// regularity from the available derivatives.  Throws InputError when the
// sampled property is refuted.
ChebyshevPair make_chebyshev_pair(ScalarFunction f, ScalarFunction g,
                                  Interval domain,
                                  std::span<const double> grid = {});

// True when g > 0 and f/g is strictly monotone at the grid points.
bool is_normalized_on(const ChebyshevPair& pair, std::span<const double> grid);

// Bounded search for an equivalent pair in normal form (positive g*,
// strictly monotone f*/g*): identity, swap, sign flips, then a coarse
// (c,d) grid with a = 1, b = 0.  Empty result means the budget ran out,
// not that no normal form exists.
std::optional<std::pair<PairTransform, ChebyshevPair>> normalize_pair(
    const ChebyshevPair& pair, std::span<const double> grid = {});

// delta(t) = (t^p - t^q)/(p - q), or t^p log(t) when p == q exactly.
double delta_gini(double p, double q, double t);

// y^(p+q) * delta(x/y); equals chebyshev_determinant of gini_pair(p, q).
double capital_delta_gini(double p, double q, double x, double y);

// Power pair on (0, inf) scaled so that its determinant equals
// capital_delta_gini exactly: f = x^p/(p-q), g = x^q for p != q and
// f = x^p log x, g = x^p for p == q.  Always a negative system with
// diagonal Wronskian x^(p+q-1).
ChebyshevPair gini_pair(double p, double q);

}  // namespace meancomp

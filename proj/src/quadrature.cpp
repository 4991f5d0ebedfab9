#include "meancomp/quadrature.hpp"

#include <cmath>
#include <numeric>

#include "meancomp/errors.hpp"

namespace meancomp {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
struct LegendreEval {
  double p, dp;
};

LegendreEval legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre_01(int n) {
  if (n < 1) throw InputError("gauss_legendre_01: need at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double pi = std::acos(-1.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton from the Chebyshev-angle initial guess
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    LegendreEval le{};
    for (int it = 0; it < 100; ++it) {
      le = legendre(n, x);
      const double dx = le.p / le.dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    le = legendre(n, x);
    const double w = 2.0 / ((1.0 - x * x) * le.dp * le.dp);
    rule.nodes[i] = 0.5 * (1.0 - x);  // descending x -> ascending node
    rule.weights[i] = 0.5 * w;
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  if (n == 1) {
    rule.nodes[0] = 0.5;
    rule.weights[0] = 1.0;
  }
  const double total =
      std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
  for (double& w : rule.weights) w /= total;
  return rule;
}

}  // namespace meancomp

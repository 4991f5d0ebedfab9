#pragma once

#include <vector>

namespace meancomp {

// Nodes and weights on [0, 1]; weights are normalized so they sum to 1
// exactly (the rules integrate against probability measures).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule mapped to [0, 1].  Exact for polynomials of degree
// <= 2n-1, so every smooth integrand in scope is resolved to rounding
// level at the default 64 nodes.
QuadratureRule gauss_legendre_01(int n);

}  // namespace meancomp

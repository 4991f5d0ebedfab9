#pragma once

#include <functional>
#include <string>
#include <vector>

#include "meancomp/quadrature.hpp"
#include "meancomp/scalar_function.hpp"

namespace meancomp {

// A parameter point; scalar carriers use size-1 vectors, the simplex
// carrier uses d-vectors.
using Param = std::vector<double>;

enum class CarrierKind {
  Free,          // atoms not yet attached to a family's parameter space
  FiniteSet,     // explicit scalar parameter values
  UnitInterval,  // [0, 1]
  Simplex,       // {t >= 0, t_1 + ... + t_d = 1}
};

struct Carrier {
  CarrierKind kind = CarrierKind::Free;
  int dim = 0;                  // Simplex: number of coordinates d
  std::vector<double> points;   // FiniteSet: the parameter values

  bool contains(const Param& t, double tol = 1e-9) const;
  std::string describe() const;
};

Carrier finite_carrier(std::vector<double> points);
Carrier index_carrier(int d);  // {1, 2, ..., d}
Carrier unit_interval_carrier();
Carrier simplex_carrier(int d);

// Discrete atoms and quadrature rules share one representation: a list of
// parameter nodes with nonnegative weights of total mass one.  `discrete`
// records whether integration is exact or a quadrature approximation.
struct ProbabilityMeasure {
  Carrier carrier;
  bool discrete = true;
  std::vector<Param> nodes;
  std::vector<double> weights;

  size_t size() const { return nodes.size(); }
};

using ParamFn = std::function<double(const Param&)>;

// Weighted sum of phi over the nodes; exact for discrete measures.
// Throws NumericError naming the node when phi is non-finite there.
double integrate(const ProbabilityMeasure& mu, const ParamFn& phi);

// <phi, psi> = integral of the product.
double bracket(const ProbabilityMeasure& mu, const ParamFn& phi,
               const ParamFn& psi);

// Constructors.  Weight lists are validated (nonnegative, total within
// 1e-12 of one) and then rescaled so the total is exactly one.
ProbabilityMeasure atoms_measure(std::vector<Param> points,
                                 std::vector<double> weights,
                                 Carrier carrier = {});
ProbabilityMeasure dirac_measure(Param t0, Carrier carrier = {});
ProbabilityMeasure uniform01_measure(int nodes = 64);
ProbabilityMeasure density01_measure(const ScalarFunction& density,
                                     int nodes = 64);
ProbabilityMeasure simplex_uniform(int d, int resolution);

// (1 - gamma) * dirac(t0) + gamma * nu.
ProbabilityMeasure dirac_mixture(const Param& t0, double gamma,
                                 const ProbabilityMeasure& nu);

// Stamps a concrete carrier onto a measure (validating every node), or
// verifies an already-attached carrier against the target.
ProbabilityMeasure attach_carrier(ProbabilityMeasure mu,
                                  const Carrier& carrier);

}  // namespace meancomp

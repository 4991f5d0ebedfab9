#pragma once

#include "meancomp/chebyshev.hpp"
#include "meancomp/family.hpp"
#include "meancomp/measure.hpp"

namespace meancomp {

// A Chebyshev pair, a family of means, and a carrier-compatible probability
// measure.  Immutable; evaluation is pure and thread-safe.
struct GeneralizedMean {
  ChebyshevPair pair;
  MeanFamily family;
  ProbabilityMeasure measure;
};

// Validates carrier compatibility (attaching free atom measures to the
// family's carrier) before assembly.
GeneralizedMean make_mean(ChebyshevPair pair, MeanFamily family,
                          ProbabilityMeasure measure);

struct EvalOptions {
  double root_xtol = 1e-13;       // argument tolerance of the root solve
  double residual_rtol = 1e-10;   // accepted |h| relative to integral scale
  int max_iter = 300;
};

// Solves the defining equation: the unique y in [min x, max x] with
// integral of D(m(x,t), y) d mu = 0.  The integrand is bilinear in the
// generators, so only the two integrals F = int f(m) and G = int g(m) are
// computed; the residual is h(u) = g(u) F - f(u) G.  Works for any verified
// Chebyshev pair.
double eval_implicit(const GeneralizedMean& mean, VecView x,
                     const EvalOptions& opt = {});

// (f/g)^{-1}(F / G) via monotone bisection on [min x, max x].  Requires the
// pair in normal form (g > 0, f/g strictly monotone); throws
// CapabilityError otherwise.
double eval_explicit(const GeneralizedMean& mean, VecView x,
                     const EvalOptions& opt = {});

// Closed-form generalized Gini mean: (int m^p / int m^q)^(1/(p-q)), with
// the exp(int m^p log m / int m^p) branch at p == q.
double gini_mean(double p, double q, const MeanFamily& family,
                 const ProbabilityMeasure& mu, VecView x);

// p-th power mean; geometric at p == 0.
double holder_mean(double p, VecView x);

// (f'/g')^{-1}((f(x2)-f(x1)) / (g(x2)-g(x1))); x1 on the diagonal.
double cauchy_mean(const ScalarFunction& f, const ScalarFunction& g,
                   double x1, double x2);

// Two-variable Stolarsky mean with the limiting branches selected by exact
// parameter equality (p=q, q=0, p=q=0) and the diagonal short-circuit.
double stolarsky_mean(double p, double q, double x1, double x2);

}  // namespace meancomp

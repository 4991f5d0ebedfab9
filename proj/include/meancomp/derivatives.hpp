#pragma once

#include "meancomp/linalg.hpp"
#include "meancomp/mean.hpp"

namespace meancomp {

// Gradient and Hessian of a generalized mean at a diagonal point
// (x, ..., x).  The gradient entries sum to one; for weighted-arithmetic
// families every Hessian row sums to zero.
struct DiagonalDerivatives {
  double point = 0.0;
  std::vector<double> gradient;  // size d
  Matrix hessian;                // d x d, symmetric
};

// Phi(x) = int phi(m(x, t)) d mu(t).
double phi_integral(const ScalarFunction& phi, const MeanFamily& fam,
                    const ProbabilityMeasure& mu, VecView x);

// d_i Phi = int phi'(m) d_i m d mu; needs phi' and the family's partial1.
std::vector<double> phi_gradient(const ScalarFunction& phi,
                                 const MeanFamily& fam,
                                 const ProbabilityMeasure& mu, VecView x);

// d_i d_j Phi = int [phi'' d_i m d_j m + phi' d_i d_j m] d mu.
Matrix phi_hessian(const ScalarFunction& phi, const MeanFamily& fam,
                   const ProbabilityMeasure& mu, VecView x);

// Diagonal derivatives of the mean itself:
//   d_i M(x,..,x)     = <d_i m, 1>(x,..,x)
//   d_i d_j M(x,..,x) = (<d_i m, d_j m> - <d_i m,1><d_j m,1>)(x,..,x) * r
//                       + <d_i d_j m, 1>(x,..,x)
// where r = diag_d2_over_d1 of the pair at x.  The Hessian needs a C2 pair
// and the family's second partials.
DiagonalDerivatives mean_diag_derivatives(const GeneralizedMean& mean,
                                          double x);

// Difference quotients of the mean under the Dirac mixture
// mu_gamma = (1-gamma) dirac(t0) + gamma nu, together with their closed-form
// limit  int D(m(x,t), m(x,t0)) d nu / d1 D(m(x,t0), m(x,t0)).
struct MixtureLimit {
  std::vector<double> gammas;
  std::vector<double> quotients;  // [M_{mu_gamma}(x) - m(x,t0)] / gamma
  double prediction = 0.0;
};

std::vector<double> default_gamma_sequence();  // 2^-1 .. 2^-20

MixtureLimit dirac_mixture_limit(const ChebyshevPair& pair,
                                 const MeanFamily& fam, const Param& t0,
                                 const ProbabilityMeasure& nu, VecView x,
                                 std::vector<double> gammas = {});

}  // namespace meancomp

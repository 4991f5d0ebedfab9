#include "meancomp/derivatives.hpp"

#include <cmath>

#include "meancomp/errors.hpp"

namespace meancomp {

double phi_integral(const ScalarFunction& phi, const MeanFamily& fam,
                    const ProbabilityMeasure& mu, VecView x) {
  return integrate(mu,
                   [&](const Param& t) { return phi(fam.eval(x, t)); });
}

std::vector<double> phi_gradient(const ScalarFunction& phi,
                                 const MeanFamily& fam,
                                 const ProbabilityMeasure& mu, VecView x) {
  if (!phi.has_deriv1()) {
    throw CapabilityError("phi_gradient: phi lacks a first derivative");
  }
  if (!fam.has_partial1()) {
    throw CapabilityError("phi_gradient: family lacks first partials");
  }
  std::vector<double> grad(fam.d);
  for (int i = 0; i < fam.d; ++i) {
    grad[i] = integrate(mu, [&](const Param& t) {
      return phi.deriv1(fam.eval(x, t)) * fam.partial1(x, t, i);
    });
  }
  return grad;
}

Matrix phi_hessian(const ScalarFunction& phi, const MeanFamily& fam,
                   const ProbabilityMeasure& mu, VecView x) {
  if (!phi.has_deriv2()) {
    throw CapabilityError("phi_hessian: phi lacks a second derivative");
  }
  if (!fam.has_partial1() || !fam.has_partial2()) {
    throw CapabilityError("phi_hessian: family lacks second partials");
  }
  Matrix hess(fam.d, std::vector<double>(fam.d));
  for (int i = 0; i < fam.d; ++i) {
    for (int j = i; j < fam.d; ++j) {
      hess[i][j] = integrate(mu, [&](const Param& t) {
        const double m = fam.eval(x, t);
        return phi.deriv2(m) * fam.partial1(x, t, i) * fam.partial1(x, t, j) +
               phi.deriv1(m) * fam.partial2(x, t, i, j);
      });
      hess[j][i] = hess[i][j];
    }
  }
  return hess;
}

DiagonalDerivatives mean_diag_derivatives(const GeneralizedMean& mean,
                                          double x) {
  const MeanFamily& fam = mean.family;
  if (!fam.has_partial1()) {
    throw CapabilityError("mean_diag_derivatives: family lacks partials");
  }
  if (!mean.pair.domain.contains(x)) {
    throw InputError("mean_diag_derivatives: x outside the pair domain");
  }
  const std::vector<double> diag(fam.d, x);
  const VecView xv{diag};

  DiagonalDerivatives out;
  out.point = x;
  out.gradient.resize(fam.d);
  for (int i = 0; i < fam.d; ++i) {
    out.gradient[i] = integrate(mean.measure, [&](const Param& t) {
      return fam.partial1(xv, t, i);
    });
  }

  if (mean.pair.regularity == Regularity::C2 && fam.has_partial2()) {
    const double r = diag_d2_over_d1(mean.pair, x);
    out.hessian.assign(fam.d, std::vector<double>(fam.d));
    for (int i = 0; i < fam.d; ++i) {
      for (int j = i; j < fam.d; ++j) {
        const double second_moment =
            integrate(mean.measure, [&](const Param& t) {
              return fam.partial1(xv, t, i) * fam.partial1(xv, t, j);
            });
        const double cross =
            integrate(mean.measure, [&](const Param& t) {
              return fam.partial2(xv, t, i, j);
            });
        out.hessian[i][j] =
            (second_moment - out.gradient[i] * out.gradient[j]) * r + cross;
        out.hessian[j][i] = out.hessian[i][j];
      }
    }
  }
  return out;
}

std::vector<double> default_gamma_sequence() {
  std::vector<double> gammas;
  double g = 0.5;
  for (int k = 1; k <= 20; ++k, g *= 0.5) gammas.push_back(g);
  return gammas;
}

MixtureLimit dirac_mixture_limit(const ChebyshevPair& pair,
                                 const MeanFamily& fam, const Param& t0,
                                 const ProbabilityMeasure& nu, VecView x,
                                 std::vector<double> gammas) {
  if (pair.regularity == Regularity::C0) {
    throw CapabilityError("dirac_mixture_limit: pair must be at least C1");
  }
  if (gammas.empty()) gammas = default_gamma_sequence();
  for (size_t i = 0; i < gammas.size(); ++i) {
    if (!(gammas[i] > 0.0 && gammas[i] <= 1.0) ||
        (i > 0 && gammas[i] >= gammas[i - 1])) {
      throw InputError(
          "dirac_mixture_limit: gammas must decrease within (0, 1]");
    }
  }

  MixtureLimit out;
  out.gammas = gammas;
  const double base = fam.eval(x, t0);
  // the division by gamma amplifies any root-solve error, so the solver
  // runs to the machine-width floor here
  EvalOptions opt;
  opt.root_xtol = 0.0;
  for (double gamma : gammas) {
    const GeneralizedMean mixed =
        make_mean(pair, fam, dirac_mixture(t0, gamma, nu));
    const double value = eval_implicit(mixed, x, opt);
    out.quotients.push_back((value - base) / gamma);
  }
  const double numer = integrate(nu, [&](const Param& t) {
    return chebyshev_determinant(pair, fam.eval(x, t), base);
  });
  const double denom = wronskian(pair, base);
  if (denom == 0.0) {
    throw DegeneracyError("dirac_mixture_limit: vanishing Wronskian at the "
                          "base mean value");
  }
  out.prediction = numer / denom;
  return out;
}

}  // namespace meancomp

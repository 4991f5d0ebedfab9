#include "meancomp/compare.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "meancomp/errors.hpp"

namespace meancomp {

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PositiveDefinite";
    case Definiteness::PositiveSemidefinite: return "PositiveSemidefinite";
    case Definiteness::Indefinite: return "Indefinite";
  }
  return "?";
}

Definiteness semidefinite_status(const Matrix& a, double tol) {
  if (a.empty()) return Definiteness::PositiveSemidefinite;
  if (max_asymmetry(a) > tol) {
    throw InputError("semidefinite_status: matrix asymmetric beyond tol");
  }
  // symmetrize before the eigen step so roundoff cannot flip the verdict
  Matrix sym = a;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sym[i][j] = 0.5 * (a[i][j] + a[j][i]);
  }
  bool all_positive = true;
  for (double minor : leading_principal_minors(sym)) {
    if (!(minor > tol)) all_positive = false;
  }
  if (all_positive) return Definiteness::PositiveDefinite;
  const std::vector<double> eig = symmetric_eigenvalues(sym);
  if (eig.front() >= -tol) return Definiteness::PositiveSemidefinite;
  return Definiteness::Indefinite;
}

namespace {

std::vector<double> diagonal_gradient(const GeneralizedMean& mean, double x) {
  const std::vector<double> diag(mean.family.d, x);
  std::vector<double> grad(mean.family.d);
  for (int i = 0; i < mean.family.d; ++i) {
    grad[i] = integrate(mean.measure, [&](const Param& t) {
      return mean.family.partial1(diag, t, i);
    });
  }
  return grad;
}

}  // namespace

ComparisonVerdict local_first_order(const GeneralizedMean& M,
                                    const GeneralizedMean& N, double x0,
                                    const Neighborhood& nbhd,
                                    double tol_grad) {
  if (M.family.d != N.family.d) {
    throw InputError("local_first_order: mean arities differ");
  }
  if (!M.family.has_partial1() || !N.family.has_partial1()) {
    throw CapabilityError("local_first_order: family lacks first partials");
  }
  ComparisonVerdict verdict;
  verdict.detail = "first-order diagonal gradient equality";
  double worst = 0.0;
  double worst_x = x0;
  int worst_i = 0;
  const int n = std::max(1, nbhd.samples);
  for (int s = 0; s < n; ++s) {
    const double x =
        n == 1 ? x0 : x0 + nbhd.radius * (2.0 * s / (n - 1) - 1.0);
    if (!M.pair.domain.contains(x) || !N.pair.domain.contains(x)) continue;
    const std::vector<double> gm = diagonal_gradient(M, x);
    const std::vector<double> gn = diagonal_gradient(N, x);
    for (int i = 0; i < M.family.d; ++i) {
      const double dev = std::fabs(gm[i] - gn[i]);
      if (dev > worst) {
        worst = dev;
        worst_x = x;
        worst_i = i;
      }
    }
  }
  verdict.margin = -worst;
  if (worst <= tol_grad) {
    verdict.status = Status::Holds;
    verdict.ball_radius = nbhd.radius;
  } else {
    verdict.status = Status::Fails;
    verdict.witness_x = std::vector<double>{worst_x};
    verdict.witness_index = worst_i;
  }
  return verdict;
}

LocalReport local_second_order_matrix(const GeneralizedMean& M,
                                      const GeneralizedMean& N, double x0,
                                      double tol) {
  if (M.family.d != N.family.d) {
    throw InputError("local_second_order_matrix: mean arities differ");
  }
  const DiagonalDerivatives dm = mean_diag_derivatives(M, x0);
  const DiagonalDerivatives dn = mean_diag_derivatives(N, x0);
  if (dm.hessian.empty() || dn.hessian.empty()) {
    throw CapabilityError(
        "local_second_order_matrix: a mean lacks second-order data "
        "(pair not C2 or family without second partials)");
  }
  LocalReport report;
  double dev = 0.0;
  for (size_t i = 0; i < dm.gradient.size(); ++i) {
    dev = std::max(dev, std::fabs(dm.gradient[i] - dn.gradient[i]));
  }
  report.gradient_max_dev = dev;
  report.gradient_match = dev <= 1e-9;
  const int k = M.family.d - 1;
  report.matrix.assign(k, std::vector<double>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      report.matrix[i][j] = dn.hessian[i][j] - dm.hessian[i][j];
    }
  }
  report.psd = semidefinite_status(report.matrix, tol);
  return report;
}

ComparisonVerdict local_verdict(const GeneralizedMean& M,
                                const GeneralizedMean& N, double x0,
                                const Neighborhood& nbhd, double tol_grad,
                                double tol_psd) {
  ComparisonVerdict first = local_first_order(M, N, x0, nbhd, tol_grad);
  if (first.status == Status::Fails) {
    first.detail = "first-order gradient mismatch at a sampled point";
    return first;
  }
  const LocalReport report = local_second_order_matrix(M, N, x0, tol_psd);
  ComparisonVerdict verdict;
  const std::vector<double> eig = symmetric_eigenvalues(report.matrix);
  verdict.margin = eig.empty() ? 0.0 : eig.front();
  switch (report.psd) {
    case Definiteness::PositiveDefinite:
      verdict.status = Status::Holds;
      verdict.ball_radius = nbhd.radius;
      verdict.detail = "gradients match, second-order matrix positive definite";
      break;
    case Definiteness::Indefinite:
      verdict.status = Status::Fails;
      verdict.witness_x = std::vector<double>{x0};
      verdict.detail = "second-order matrix indefinite";
      break;
    case Definiteness::PositiveSemidefinite:
      verdict.status = Status::Inconclusive;
      verdict.detail =
          "second-order matrix semidefinite but singular: between the "
          "necessary and the sufficient condition";
      break;
  }
  return verdict;
}

namespace {

// Gram matrix of the centered partials d_i m - <d_i m, 1> for i < d-1.
Matrix centered_partial_gram(const GeneralizedMean& mean, double x0) {
  if (!mean.family.has_partial1()) {
    throw CapabilityError("centered partials: family lacks first partials");
  }
  const int k = mean.family.d - 1;
  const std::vector<double> diag(mean.family.d, x0);
  const std::vector<double> means = diagonal_gradient(mean, x0);
  Matrix gram(k, std::vector<double>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const double moment = integrate(mean.measure, [&](const Param& t) {
        return mean.family.partial1(diag, t, i) *
               mean.family.partial1(diag, t, j);
      });
      gram[i][j] = gram[j][i] = moment - means[i] * means[j];
    }
  }
  return gram;
}

}  // namespace

bool family_parameter_nondegenerate(const GeneralizedMean& mean, double x0,
                                    double tol) {
  const Matrix gram = centered_partial_gram(mean, x0);
  for (size_t i = 0; i < gram.size(); ++i) {
    if (gram[i][i] > tol) return true;
  }
  return false;
}

bool centered_partials_independent(const GeneralizedMean& mean, double x0,
                                   double tol) {
  const Matrix gram = centered_partial_gram(mean, x0);
  if (gram.empty()) return false;
  return symmetric_eigenvalues(gram).front() > tol;
}

ComparisonVerdict gini_local(double p, double q, double r, double s,
                             bool family_nondegenerate) {
  ComparisonVerdict verdict;
  verdict.margin = (r + s) - (p + q);
  if (!family_nondegenerate) {
    verdict.status = Status::Inconclusive;
    verdict.detail =
        "family parameter-degenerate: exponent-sum criterion inapplicable";
    return verdict;
  }
  if (p + q < r + s) {
    verdict.status = Status::Holds;
    verdict.detail = "exponent sums strictly ordered";
  } else if (p + q > r + s) {
    verdict.status = Status::Fails;
    verdict.detail = "necessary exponent-sum inequality violated";
    verdict.witness_t = p + q;
  } else {
    verdict.status = Status::Inconclusive;
    verdict.detail = "equal exponent sums: second-order matrix vanishes";
  }
  return verdict;
}

ComparisonVerdict global_condition_iii(const ChebyshevPair& pairM,
                                       const ChebyshevPair& pairN,
                                       const MeanFamily& fam, Interval domain,
                                       const GlobalSampling& sampling,
                                       double tol_base) {
  if (pairM.regularity == Regularity::C0 ||
      pairN.regularity == Regularity::C0) {
    throw CapabilityError("global_condition_iii: both pairs must be C1");
  }
  domain = intersect(intersect(domain, pairM.domain), pairN.domain);
  if (!(domain.lo < domain.hi)) {
    throw InputError("global_condition_iii: empty working interval");
  }
  const Envelope env = family_envelope(fam, sampling.t_resolution);

  // x-grid: two free axes, remaining coordinates pinned to the second
  std::vector<double> axis(sampling.x_points);
  {
    std::vector<double> finite = {domain.lo, domain.hi};
    if (!std::isfinite(domain.lo)) finite[0] = std::min(0.0, domain.hi - 1e4);
    if (!std::isfinite(domain.hi)) finite[1] = std::max(1e4, domain.lo * 1e4 + 1e4);
    const double w = finite[1] - finite[0];
    for (int i = 0; i < sampling.x_points; ++i) {
      const double u = sampling.endpoint_offset +
                       (1.0 - 2.0 * sampling.endpoint_offset) * i /
                           (sampling.x_points - 1);
      axis[i] = finite[0] + u * w;
    }
  }

  ComparisonVerdict verdict;
  verdict.detail = "measure-free envelope-square criterion";
  double min_slack = std::numeric_limits<double>::infinity();
  bool holds = true;
  std::vector<double> x(fam.d);

  for (double x1 : axis) {
    for (double x2 : axis) {
      x[0] = x1;
      for (int i = 1; i < fam.d; ++i) x[i] = x2;
      const double lo = env.lower(x);
      const double hi = env.upper(x);
      if (!(hi > lo)) continue;  // degenerate square: slack identically zero
      std::vector<double> vs(sampling.uv_points), wms(sampling.uv_points),
          wns(sampling.uv_points);
      for (int iv = 0; iv < sampling.uv_points; ++iv) {
        vs[iv] = lo + (hi - lo) * iv / (sampling.uv_points - 1);
        wms[iv] = wronskian(pairM, vs[iv]);
        wns[iv] = wronskian(pairN, vs[iv]);
        if (wms[iv] == 0.0 || wns[iv] == 0.0) {
          throw DegeneracyError(
              "global_condition_iii: vanishing Wronskian at v=" +
              std::to_string(vs[iv]));
        }
      }
      for (int iu = 0; iu < sampling.uv_points; ++iu) {
        const double u = lo + (hi - lo) * iu / (sampling.uv_points - 1);
        for (int iv = 0; iv < sampling.uv_points; ++iv) {
          const double v = vs[iv];
          const double lhs = chebyshev_determinant(pairM, u, v) / wms[iv];
          const double rhs = chebyshev_determinant(pairN, u, v) / wns[iv];
          const double slack = rhs - lhs;
          if (slack < min_slack) {
            min_slack = slack;
            verdict.witness_uv = std::make_pair(u, v);
            verdict.witness_x = x;
          }
          const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
          if (slack < -tol_base * (1.0 + scale)) holds = false;
        }
      }
    }
  }
  verdict.margin = std::isfinite(min_slack) ? min_slack : 0.0;
  if (holds) {
    verdict.status = Status::Holds;
    verdict.witness_uv.reset();
    verdict.witness_x.reset();
  } else {
    verdict.status = Status::Fails;
  }
  return verdict;
}

ComparisonVerdict gini_global(double p, double q, double r, double s,
                              double ratio_sup, double tol) {
  if (!(ratio_sup >= 1.0)) {
    throw InputError("gini_global: ratio supremum must be >= 1");
  }
  ComparisonVerdict verdict;
  const bool unbounded = std::isinf(ratio_sup);

  double closed_margin;
  std::string detail;
  if (unbounded) {
    closed_margin = std::min(std::min(r, s) - std::min(p, q),
                             std::max(r, s) - std::max(p, q));
    detail = "unbounded-envelope branch: min/max exponent dominance";
  } else {
    const double at_lo = delta_gini(r, s, 1.0 / ratio_sup) -
                         delta_gini(p, q, 1.0 / ratio_sup);
    const double at_hi = delta_gini(r, s, ratio_sup) -
                         delta_gini(p, q, ratio_sup);
    closed_margin = std::min({at_lo, at_hi, (r + s) - (p + q)});
    detail = "bounded-envelope branch: endpoint deltas and exponent sums";
  }

  // dense sampling cross-check of the delta inequality
  const double t_lo = unbounded ? 1e-6 : 1.0 / ratio_sup;
  const double t_hi = unbounded ? 1e6 : ratio_sup;
  const int n_t = 512;
  double sample_min = std::numeric_limits<double>::infinity();
  double sample_argmin = 1.0;
  for (int i = 0; i < n_t; ++i) {
    // log-spaced, ends inset since the interval is open
    const double frac = (i + 0.5) / n_t;
    const double t = t_lo * std::pow(t_hi / t_lo, frac);
    const double slack = delta_gini(r, s, t) - delta_gini(p, q, t);
    const double scaled =
        slack / (1.0 + std::fabs(delta_gini(p, q, t)) +
                 std::fabs(delta_gini(r, s, t)));
    if (scaled < sample_min) {
      sample_min = scaled;
      sample_argmin = t;
    }
  }

  verdict.margin = closed_margin;
  if (closed_margin >= -tol) {
    verdict.status = Status::Holds;
    verdict.detail = detail;
    if (sample_min < -1e-9) {
      verdict.detail += "; warning: sampled delta inequality disagrees";
    }
  } else {
    verdict.status = Status::Fails;
    verdict.detail = detail;
    verdict.witness_t = sample_argmin;
  }
  return verdict;
}

QuasiArithReport quasiarith_compare(const ScalarFunction& f,
                                    const ScalarFunction& h, Interval domain,
                                    int x_points, int uv_points,
                                    double tol_base) {
  if (!f.has_deriv1() || !f.has_deriv2() || !h.has_deriv1() ||
      !h.has_deriv2()) {
    throw CapabilityError(
        "quasiarith_compare: generators need two derivatives");
  }
  domain = intersect(intersect(domain, f.domain), h.domain);
  if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) ||
      !std::isfinite(domain.hi)) {
    throw InputError("quasiarith_compare: need a bounded working interval");
  }
  std::vector<double> grid(x_points);
  for (int i = 0; i < x_points; ++i) {
    const double u = 1e-9 + (1.0 - 2e-9) * i / (x_points - 1);
    grid[i] = domain.lo + u * (domain.hi - domain.lo);
  }
  auto deriv_or_throw = [](const ScalarFunction& fn, double x) {
    const double d = fn.deriv1(x);
    if (d == 0.0 || !std::isfinite(d)) {
      throw DegeneracyError("quasiarith_compare: vanishing derivative of " +
                            fn.label + " at " + std::to_string(x));
    }
    return d;
  };

  QuasiArithReport report;

  // generator-ratio condition on the x-grid
  {
    ComparisonVerdict& v = report.ratio_condition;
    v.detail = "second-to-first derivative ratio ordering";
    double min_slack = std::numeric_limits<double>::infinity();
    bool holds = true;
    for (double x : grid) {
      const double lhs = f.deriv2(x) / deriv_or_throw(f, x);
      const double rhs = h.deriv2(x) / deriv_or_throw(h, x);
      const double slack = rhs - lhs;
      if (slack < min_slack) {
        min_slack = slack;
        v.witness_x = std::vector<double>{x};
      }
      if (slack < -tol_base * (1.0 + std::max(std::fabs(lhs), std::fabs(rhs))))
        holds = false;
    }
    v.margin = min_slack;
    v.status = holds ? Status::Holds : Status::Fails;
    if (holds) v.witness_x.reset();
  }

  // support-line condition on the (u,v)-grid
  {
    ComparisonVerdict& v = report.support_condition;
    v.detail = "normalized increment ordering";
    std::vector<double> uv(uv_points);
    for (int i = 0; i < uv_points; ++i) {
      const double s = 1e-9 + (1.0 - 2e-9) * i / (uv_points - 1);
      uv[i] = domain.lo + s * (domain.hi - domain.lo);
    }
    double min_slack = std::numeric_limits<double>::infinity();
    bool holds = true;
    for (double u : uv) {
      for (double w : uv) {
        const double lhs = (f(u) - f(w)) / deriv_or_throw(f, w);
        const double rhs = (h(u) - h(w)) / deriv_or_throw(h, w);
        const double slack = rhs - lhs;
        if (slack < min_slack) {
          min_slack = slack;
          v.witness_uv = std::make_pair(u, w);
        }
        if (slack <
            -tol_base * (1.0 + std::max(std::fabs(lhs), std::fabs(rhs))))
          holds = false;
      }
    }
    v.margin = min_slack;
    v.status = holds ? Status::Holds : Status::Fails;
    if (holds) v.witness_uv.reset();
  }

  ComparisonVerdict& c = report.combined;
  c.margin = std::min(report.ratio_condition.margin,
                      report.support_condition.margin);
  if (report.ratio_condition.status == Status::Holds &&
      report.support_condition.status == Status::Holds) {
    c.status = Status::Holds;
    c.detail = "both equivalent conditions hold";
  } else if (report.ratio_condition.status == Status::Fails &&
             report.support_condition.status == Status::Fails) {
    c.status = Status::Fails;
    c.detail = "both equivalent conditions fail";
    c.witness_x = report.ratio_condition.witness_x;
    c.witness_uv = report.support_condition.witness_uv;
  } else {
    // the conditions are equivalent; disagreement flags a numerical or
    // input problem rather than a mathematical state
    c.status = Status::Inconclusive;
    c.detail = "equivalent conditions disagree: check inputs or tolerances";
    c.witness_x = report.ratio_condition.witness_x;
    c.witness_uv = report.support_condition.witness_uv;
  }
  return report;
}

ComparisonVerdict holder_compare(double p, double q) {
  ComparisonVerdict verdict;
  verdict.margin = q - p;
  if (p <= q) {
    verdict.status = Status::Holds;
    verdict.detail = "exponents ordered";
  } else {
    verdict.status = Status::Fails;
    verdict.detail = "exponents reversed";
    verdict.witness_t = p;
  }
  return verdict;
}

}  // namespace meancomp

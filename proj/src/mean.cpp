#include "meancomp/mean.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meancomp/errors.hpp"
#include "meancomp/root_finding.hpp"

namespace meancomp {

namespace {

double vec_min(VecView x) { return *std::min_element(x.begin(), x.end()); }
double vec_max(VecView x) { return *std::max_element(x.begin(), x.end()); }

void check_arity(const MeanFamily& fam, VecView x) {
  if (static_cast<int>(x.size()) != fam.d) {
    throw InputError("evaluation: expected " + std::to_string(fam.d) +
                     " coordinates, got " + std::to_string(x.size()));
  }
}

void check_domain(const Interval& domain, VecView x) {
  for (double xi : x) {
    if (!domain.contains(xi)) {
      throw InputError("evaluation: coordinate " + std::to_string(xi) +
                       " outside the pair domain");
    }
  }
}

bool diagonal(VecView x) {
  const double lo = vec_min(x), hi = vec_max(x);
  return hi - lo <= 1e-14 * std::max(1.0, std::fabs(hi));
}

struct GeneratorIntegrals {
  double f = 0.0;  // int f(m(x,t)) d mu
  double g = 0.0;  // int g(m(x,t)) d mu
};

GeneratorIntegrals generator_integrals(const GeneralizedMean& mean, VecView x) {
  GeneratorIntegrals out;
  out.f = integrate(mean.measure, [&](const Param& t) {
    return mean.pair.f(mean.family.eval(x, t));
  });
  out.g = integrate(mean.measure, [&](const Param& t) {
    return mean.pair.g(mean.family.eval(x, t));
  });
  return out;
}

}  // namespace

GeneralizedMean make_mean(ChebyshevPair pair, MeanFamily family,
                          ProbabilityMeasure measure) {
  if (measure.carrier.kind == CarrierKind::Free) {
    measure = attach_carrier(std::move(measure), family.carrier);
  } else {
    const Carrier& mc = measure.carrier;
    const Carrier& fc = family.carrier;
    bool ok = mc.kind == fc.kind && mc.dim == fc.dim;
    if (ok && mc.kind == CarrierKind::FiniteSet) {
      for (double p : mc.points) {
        if (!fc.contains({p})) ok = false;
      }
    }
    if (!ok) {
      throw InputError("make_mean: measure carrier " + mc.describe() +
                       " incompatible with family carrier " + fc.describe());
    }
  }
  return GeneralizedMean{std::move(pair), std::move(family),
                         std::move(measure)};
}

double eval_implicit(const GeneralizedMean& mean, VecView x,
                     const EvalOptions& opt) {
  check_arity(mean.family, x);
  check_domain(mean.pair.domain, x);
  if (diagonal(x)) return x[0];

  const GeneratorIntegrals fg = generator_integrals(mean, x);
  // for a positive system h is negative below the root and positive above;
  // a negative system flips
  const double sign =
      mean.pair.orientation == Orientation::Positive ? 1.0 : -1.0;
  const auto& f = mean.pair.f;
  const auto& g = mean.pair.g;
  auto h = [&](double u) { return sign * (g(u) * fg.f - f(u) * fg.g); };

  double lo = vec_min(x), hi = vec_max(x);
  // |h(u)| is pure cancellation noise once it drops below the rounding
  // level of its two terms, so acceptance is scaled pointwise
  auto accept = [&](double u) {
    return opt.residual_rtol *
           (std::fabs(g(u) * fg.f) + std::fabs(f(u) * fg.g) + 1e-300);
  };
  double hlo = h(lo), hhi = h(hi);
  // the root may sit at a bracket end (e.g. a Dirac measure selecting an
  // extreme coordinate); widen a few times before declaring the pair broken
  for (int attempt = 0; attempt < 4 && hlo > 0.0 && hhi > 0.0; ++attempt) {
    if (std::fabs(hlo) <= accept(lo)) return lo;
    const double pad = 0.05 * (hi - lo);
    if (mean.pair.domain.contains(lo - pad)) lo -= pad;
    hlo = h(lo);
  }
  for (int attempt = 0; attempt < 4 && hlo < 0.0 && hhi < 0.0; ++attempt) {
    if (std::fabs(hhi) <= accept(hi)) return hi;
    const double pad = 0.05 * (hi - lo);
    if (mean.pair.domain.contains(hi + pad)) hi += pad;
    hhi = h(hi);
  }
  if ((hlo > 0.0) == (hhi > 0.0) && hlo != 0.0 && hhi != 0.0) {
    throw NumericError(
        "eval_implicit: residual does not change sign on the bracket; "
        "the pair is not a Chebyshev system on the working interval");
  }
  const RootResult r =
      solve_bracketed(h, lo, hi, hlo, hhi, opt.root_xtol, opt.max_iter);
  // a width-converged bracket certifies a root of the continuous residual;
  // the residual gate fires only when the iteration budget ran out early
  const double width_cap =
      std::max(opt.root_xtol,
               4.0 * std::numeric_limits<double>::epsilon() *
                   std::max(std::fabs(lo), std::fabs(hi)));
  if (r.width > width_cap && std::fabs(r.residual) > accept(r.root)) {
    throw NumericError("eval_implicit: residual " +
                       std::to_string(r.residual) +
                       " above tolerance after root solve");
  }
  return r.root;
}

double eval_explicit(const GeneralizedMean& mean, VecView x,
                     const EvalOptions& opt) {
  check_arity(mean.family, x);
  check_domain(mean.pair.domain, x);
  if (diagonal(x)) return x[0];

  const double lo = vec_min(x), hi = vec_max(x);
  // normal-form spot check on the evaluation bracket
  {
    std::vector<double> probes(9);
    for (int i = 0; i < 9; ++i) probes[i] = lo + (hi - lo) * i / 8.0;
    if (!is_normalized_on(mean.pair, probes)) {
      throw CapabilityError(
          "eval_explicit: pair is not in normal form (g > 0 with f/g "
          "strictly monotone) on the working interval; normalize first");
    }
  }
  const GeneratorIntegrals fg = generator_integrals(mean, x);
  if (fg.g == 0.0) {
    throw NumericError("eval_explicit: denominator integral vanished");
  }
  const auto& f = mean.pair.f;
  const auto& g = mean.pair.g;
  auto ratio = [&](double u) { return f(u) / g(u); };
  return invert_monotone(ratio, fg.f / fg.g, lo, hi, opt.root_xtol);
}

double gini_mean(double p, double q, const MeanFamily& family,
                 const ProbabilityMeasure& mu, VecView x) {
  check_arity(family, x);
  for (double xi : x) {
    if (!(xi > 0.0)) throw InputError("gini_mean: coordinates must be positive");
  }
  if (diagonal(x)) return x[0];
  if (p == q) {
    const double num = integrate(mu, [&](const Param& t) {
      const double m = family.eval(x, t);
      return std::pow(m, p) * std::log(m);
    });
    const double den = integrate(
        mu, [&](const Param& t) { return std::pow(family.eval(x, t), p); });
    return std::exp(num / den);
  }
  const double mp = integrate(
      mu, [&](const Param& t) { return std::pow(family.eval(x, t), p); });
  const double mq = integrate(
      mu, [&](const Param& t) { return std::pow(family.eval(x, t), q); });
  return std::pow(mp / mq, 1.0 / (p - q));
}

double holder_mean(double p, VecView x) {
  if (x.empty()) throw InputError("holder_mean: empty input");
  for (double xi : x) {
    if (!(xi > 0.0)) {
      throw InputError("holder_mean: coordinates must be positive");
    }
  }
  const size_t d = x.size();
  if (p == 0.0) {
    double s = 0.0;
    for (double xi : x) s += std::log(xi);
    return std::exp(s / d);
  }
  double s = 0.0;
  for (double xi : x) s += std::pow(xi, p);
  return std::pow(s / d, 1.0 / p);
}

double cauchy_mean(const ScalarFunction& f, const ScalarFunction& g,
                   double x1, double x2) {
  if (!f.has_deriv1() || !g.has_deriv1()) {
    throw CapabilityError("cauchy_mean: generators need first derivatives");
  }
  if (x1 == x2) return x1;
  const double lo = std::min(x1, x2), hi = std::max(x1, x2);
  const double dg = g(x2) - g(x1);
  if (dg == 0.0) {
    throw NumericError("cauchy_mean: g takes equal values off the diagonal");
  }
  const double target = (f(x2) - f(x1)) / dg;
  auto ratio = [&](double u) {
    const double gd = g.deriv1(u);
    if (gd == 0.0) {
      throw DegeneracyError("cauchy_mean: g' vanished at " +
                            std::to_string(u));
    }
    return f.deriv1(u) / gd;
  };
  return invert_monotone(ratio, target, lo, hi);
}

double stolarsky_mean(double p, double q, double x1, double x2) {
  if (!(x1 > 0.0) || !(x2 > 0.0)) {
    throw InputError("stolarsky_mean: arguments must be positive");
  }
  if (x1 == x2) return x1;
  if (p == q) {
    if (p == 0.0) return std::sqrt(x1 * x2);
    // identric-type limit
    const double a = std::pow(x1, p), b = std::pow(x2, p);
    return std::exp(-1.0 / p +
                    (a * std::log(x1) - b * std::log(x2)) / (a - b));
  }
  if (q == 0.0) {
    return std::pow((std::pow(x1, p) - std::pow(x2, p)) /
                        (p * (std::log(x1) - std::log(x2))),
                    1.0 / p);
  }
  if (p == 0.0) return stolarsky_mean(q, p, x1, x2);  // symmetric in (p, q)
  return std::pow((q * (std::pow(x1, p) - std::pow(x2, p))) /
                      (p * (std::pow(x1, q) - std::pow(x2, q))),
                  1.0 / (p - q));
}

}  // namespace meancomp

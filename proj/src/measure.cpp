#include "meancomp/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "meancomp/errors.hpp"

namespace meancomp {

namespace {

std::string param_str(const Param& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
  os << ")";
  return os.str();
}

void normalize_weights(ProbabilityMeasure& mu, const char* who) {
  if (mu.nodes.size() != mu.weights.size()) {
    throw InputError(std::string(who) + ": node/weight count mismatch");
  }
  if (mu.nodes.empty()) {
    throw InputError(std::string(who) + ": measure needs at least one node");
  }
  double total = 0.0;
  for (double w : mu.weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InputError(std::string(who) + ": negative or non-finite weight");
    }
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw InputError(std::string(who) + ": total mass " +
                     std::to_string(total) + " differs from 1");
  }
  for (double& w : mu.weights) w /= total;
}

}  // namespace

bool Carrier::contains(const Param& t, double tol) const {
  switch (kind) {
    case CarrierKind::Free:
      return true;
    case CarrierKind::FiniteSet: {
      if (t.size() != 1) return false;
      for (double p : points) {
        if (std::fabs(t[0] - p) <= tol) return true;
      }
      return false;
    }
    case CarrierKind::UnitInterval:
      return t.size() == 1 && t[0] >= -tol && t[0] <= 1.0 + tol;
    case CarrierKind::Simplex: {
      if (static_cast<int>(t.size()) != dim) return false;
      double sum = 0.0;
      for (double c : t) {
        if (c < -tol) return false;
        sum += c;
      }
      return std::fabs(sum - 1.0) <= tol * dim + tol;
    }
  }
  return false;
}

std::string Carrier::describe() const {
  switch (kind) {
    case CarrierKind::Free:
      return "free";
    case CarrierKind::FiniteSet:
      return "finite set of " + std::to_string(points.size()) + " points";
    case CarrierKind::UnitInterval:
      return "[0,1]";
    case CarrierKind::Simplex:
      return "simplex S_" + std::to_string(dim);
  }
  return "?";
}

Carrier finite_carrier(std::vector<double> points) {
  Carrier c;
  c.kind = CarrierKind::FiniteSet;
  c.points = std::move(points);
  return c;
}

Carrier index_carrier(int d) {
  std::vector<double> pts(d);
  for (int i = 0; i < d; ++i) pts[i] = i + 1.0;
  return finite_carrier(std::move(pts));
}

Carrier unit_interval_carrier() {
  Carrier c;
  c.kind = CarrierKind::UnitInterval;
  return c;
}

Carrier simplex_carrier(int d) {
  Carrier c;
  c.kind = CarrierKind::Simplex;
  c.dim = d;
  return c;
}

double integrate(const ProbabilityMeasure& mu, const ParamFn& phi) {
  double sum = 0.0;
  for (size_t i = 0; i < mu.nodes.size(); ++i) {
    const double v = phi(mu.nodes[i]);
    if (!std::isfinite(v)) {
      throw NumericError("integrate: non-finite integrand at node " +
                         param_str(mu.nodes[i]));
    }
    sum += mu.weights[i] * v;
  }
  return sum;
}

double bracket(const ProbabilityMeasure& mu, const ParamFn& phi,
               const ParamFn& psi) {
  return integrate(mu, [&](const Param& t) { return phi(t) * psi(t); });
}

ProbabilityMeasure atoms_measure(std::vector<Param> points,
                                 std::vector<double> weights,
                                 Carrier carrier) {
  ProbabilityMeasure mu;
  mu.carrier = std::move(carrier);
  mu.discrete = true;
  mu.nodes = std::move(points);
  mu.weights = std::move(weights);
  normalize_weights(mu, "atoms_measure");
  for (const Param& t : mu.nodes) {
    if (!mu.carrier.contains(t)) {
      throw InputError("atoms_measure: atom " + param_str(t) +
                       " outside carrier " + mu.carrier.describe());
    }
  }
  return mu;
}

ProbabilityMeasure dirac_measure(Param t0, Carrier carrier) {
  return atoms_measure({std::move(t0)}, {1.0}, std::move(carrier));
}

ProbabilityMeasure uniform01_measure(int nodes) {
  const QuadratureRule rule = gauss_legendre_01(nodes);
  ProbabilityMeasure mu;
  mu.carrier = unit_interval_carrier();
  mu.discrete = false;
  mu.nodes.reserve(rule.nodes.size());
  for (double x : rule.nodes) mu.nodes.push_back({x});
  mu.weights = rule.weights;
  return mu;
}

ProbabilityMeasure density01_measure(const ScalarFunction& density,
                                     int nodes) {
  const QuadratureRule rule = gauss_legendre_01(nodes);
  ProbabilityMeasure mu;
  mu.carrier = unit_interval_carrier();
  mu.discrete = false;
  double total = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = density(rule.nodes[i]);
    if (!(rho >= 0.0) || !std::isfinite(rho)) {
      throw InputError("density01_measure: density negative or non-finite at " +
                       std::to_string(rule.nodes[i]));
    }
    mu.nodes.push_back({rule.nodes[i]});
    mu.weights.push_back(rule.weights[i] * rho);
    total += mu.weights.back();
  }
  if (!(total > 0.0)) {
    throw InputError("density01_measure: density integrates to zero");
  }
  for (double& w : mu.weights) w /= total;
  return mu;
}

ProbabilityMeasure simplex_uniform(int d, int resolution) {
  if (d < 2) throw InputError("simplex_uniform: need d >= 2");
  if (resolution < 1) throw InputError("simplex_uniform: resolution >= 1");
  const QuadratureRule rule = gauss_legendre_01(resolution);
  ProbabilityMeasure mu;
  mu.carrier = simplex_carrier(d);
  mu.discrete = false;

  // Iterated product rule over t_i = (1 - t_1 - ... - t_{i-1}) * u_i with
  // the per-level scale as the weight factor; the last coordinate takes
  // the remainder.  Weights are normalized afterwards, which absorbs the
  // simplex volume.
  std::vector<int> idx(d - 1, 0);
  double total = 0.0;
  while (true) {
    Param t(d, 0.0);
    double remaining = 1.0;
    double w = 1.0;
    for (int level = 0; level < d - 1; ++level) {
      const double u = rule.nodes[idx[level]];
      t[level] = remaining * u;
      w *= rule.weights[idx[level]] * remaining;  // dy = remaining * du
      remaining -= t[level];
    }
    t[d - 1] = remaining;
    mu.nodes.push_back(std::move(t));
    mu.weights.push_back(w);
    total += w;

    int level = d - 2;
    while (level >= 0 && ++idx[level] == resolution) idx[level--] = 0;
    if (level < 0) break;
  }
  for (double& w : mu.weights) w /= total;
  return mu;
}

ProbabilityMeasure dirac_mixture(const Param& t0, double gamma,
                                 const ProbabilityMeasure& nu) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InputError("dirac_mixture: gamma must lie in [0, 1]");
  }
  if (gamma == 1.0) return nu;
  ProbabilityMeasure mu;
  mu.carrier = nu.carrier;
  mu.discrete = nu.discrete;
  mu.nodes.push_back(t0);
  mu.weights.push_back(1.0 - gamma);
  if (gamma > 0.0) {
    for (size_t i = 0; i < nu.nodes.size(); ++i) {
      mu.nodes.push_back(nu.nodes[i]);
      mu.weights.push_back(gamma * nu.weights[i]);
    }
  }
  if (!mu.carrier.contains(t0)) {
    throw InputError("dirac_mixture: t0 outside the carrier of nu");
  }
  return mu;
}

ProbabilityMeasure attach_carrier(ProbabilityMeasure mu,
                                  const Carrier& carrier) {
  for (const Param& t : mu.nodes) {
    if (!carrier.contains(t)) {
      throw InputError("attach_carrier: node " + param_str(t) +
                       " outside carrier " + carrier.describe());
    }
  }
  mu.carrier = carrier;
  return mu;
}

}  // namespace meancomp

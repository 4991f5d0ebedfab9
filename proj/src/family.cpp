#include "meancomp/family.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <sstream>

#include "meancomp/errors.hpp"
#include "meancomp/root_finding.hpp"

namespace meancomp {

namespace {

double vec_min(VecView x) { return *std::min_element(x.begin(), x.end()); }
double vec_max(VecView x) { return *std::max_element(x.begin(), x.end()); }

void require_positive(VecView x, const char* who) {
  for (double xi : x) {
    if (!(xi > 0.0)) {
      throw InputError(std::string(who) + ": coordinates must be positive");
    }
  }
}

int finite_index(const Param& t, int d, const char* who) {
  const int k = static_cast<int>(std::lround(t.at(0)));
  if (k < 1 || k > d) {
    throw InputError(std::string(who) + ": parameter " + std::to_string(t[0]) +
                     " outside {1..d}");
  }
  return k - 1;
}

// All lattice points with coordinates k_i/m on the simplex.
void simplex_lattice(int d, int m, Param& partial, int remaining,
                     std::vector<Param>& out) {
  if (static_cast<int>(partial.size()) == d - 1) {
    Param t = partial;
    t.push_back(static_cast<double>(remaining) / m);
    out.push_back(std::move(t));
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    partial.push_back(static_cast<double>(k) / m);
    simplex_lattice(d, m, partial, remaining - k, out);
    partial.pop_back();
  }
}

}  // namespace

MeanFamily coordinate_family(int d) {
  if (d < 2) throw InputError("coordinate_family: need d >= 2");
  MeanFamily fam;
  fam.d = d;
  fam.carrier = index_carrier(d);
  fam.label = "coordinates(d=" + std::to_string(d) + ")";
  fam.eval = [d, label = fam.label](VecView x, const Param& t) {
    return x[finite_index(t, d, label.c_str())];
  };
  fam.partial1 = [d, label = fam.label](VecView, const Param& t, int i) {
    return i == finite_index(t, d, label.c_str()) ? 1.0 : 0.0;
  };
  fam.partial2 = [](VecView, const Param&, int, int) { return 0.0; };
  return fam;
}

MeanFamily weighted_arithmetic_family(
    std::vector<std::function<double(const Param&)>> lambdas, Carrier carrier,
    std::span<const Param> check_points) {
  const int d = static_cast<int>(lambdas.size());
  if (d < 2) throw InputError("weighted_arithmetic_family: need d >= 2");
  for (const Param& t : check_points) {
    double sum = 0.0;
    for (const auto& lam : lambdas) {
      const double v = lam(t);
      if (v < -1e-12 || v > 1.0 + 1e-12) {
        std::ostringstream os;
        os << "weighted_arithmetic_family: weight " << v
           << " outside [0,1] at t=(";
        for (double c : t) os << c << " ";
        os << ")";
        throw InputError(os.str());
      }
      sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
      std::ostringstream os;
      os << "weighted_arithmetic_family: weights sum to " << sum << " at t=(";
      for (double c : t) os << c << " ";
      os << ")";
      throw InputError(os.str());
    }
  }
  auto shared =
      std::make_shared<std::vector<std::function<double(const Param&)>>>(
          std::move(lambdas));
  MeanFamily fam;
  fam.d = d;
  fam.carrier = std::move(carrier);
  fam.label = "weighted_arithmetic(d=" + std::to_string(d) + ")";
  fam.eval = [shared, d](VecView x, const Param& t) {
    double sum = 0.0;
    for (int i = 0; i < d; ++i) sum += (*shared)[i](t) * x[i];
    return sum;
  };
  fam.partial1 = [shared](VecView, const Param& t, int i) {
    return (*shared)[static_cast<size_t>(i)](t);
  };
  fam.partial2 = [](VecView, const Param&, int, int) { return 0.0; };
  return fam;
}

MeanFamily segment_family() {
  std::vector<std::function<double(const Param&)>> lambdas;
  lambdas.emplace_back([](const Param& t) { return t.at(0); });
  lambdas.emplace_back([](const Param& t) { return 1.0 - t.at(0); });
  std::vector<Param> checks;
  for (int i = 0; i <= 16; ++i) checks.push_back({i / 16.0});
  MeanFamily fam = weighted_arithmetic_family(
      std::move(lambdas), unit_interval_carrier(), checks);
  fam.label = "segment";
  return fam;
}

MeanFamily quasi_arithmetic_family(ScalarFunction phi, int d) {
  if (d < 2) throw InputError("quasi_arithmetic_family: need d >= 2");
  auto ph = std::make_shared<ScalarFunction>(std::move(phi));
  MeanFamily fam;
  fam.d = d;
  fam.carrier = simplex_carrier(d);
  fam.label = "quasi_arithmetic(" + ph->label + ", d=" + std::to_string(d) + ")";
  auto eval = [ph, d](VecView x, const Param& t) {
    const double lo = vec_min(x), hi = vec_max(x);
    if (hi - lo <= 1e-14 * std::max(1.0, std::fabs(hi))) return x[0];
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += t.at(i) * ph->value(x[i]);
    return invert_monotone(ph->value, s, lo, hi);
  };
  fam.eval = eval;
  if (ph->has_deriv1()) {
    fam.partial1 = [ph, eval](VecView x, const Param& t, int i) {
      const double a = eval(x, t);
      return t.at(i) * ph->deriv1(x[i]) / ph->deriv1(a);
    };
    if (ph->has_deriv2()) {
      fam.partial2 = [ph, eval](VecView x, const Param& t, int i, int j) {
        const double a = eval(x, t);
        const double d1a = ph->deriv1(a);
        const double d2a = ph->deriv2(a);
        const double pi = t.at(i) * ph->deriv1(x[i]) / d1a;
        const double pj = t.at(j) * ph->deriv1(x[j]) / d1a;
        double out = -d2a * pi * pj / d1a;
        if (i == j) out += t.at(i) * ph->deriv2(x[i]) / d1a;
        return out;
      };
    }
  }
  return fam;
}

MeanFamily holder_path_family(int d, std::vector<double> exponents) {
  if (d < 2) throw InputError("holder_path_family: need d >= 2");
  if (exponents.empty()) {
    throw InputError("holder_path_family: empty exponent list");
  }
  MeanFamily fam;
  fam.d = d;
  fam.carrier = finite_carrier(std::move(exponents));
  fam.label = "holder_path(d=" + std::to_string(d) + ")";
  fam.eval = [d](VecView x, const Param& t) {
    require_positive(x, "holder_path_family");
    const double p = t.at(0);
    if (p == 0.0) {
      double s = 0.0;
      for (double xi : x) s += std::log(xi);
      return std::exp(s / d);
    }
    double s = 0.0;
    for (double xi : x) s += std::pow(xi, p);
    return std::pow(s / d, 1.0 / p);
  };
  fam.partial1 = [d, eval = fam.eval](VecView x, const Param& t, int i) {
    const double p = t.at(0);
    const double h = eval(x, t);
    if (p == 0.0) return h / (d * x[i]);
    return std::pow(x[i], p - 1.0) * std::pow(h, 1.0 - p) / d;
  };
  return fam;
}

std::vector<Param> carrier_sample(const Carrier& carrier, int resolution) {
  std::vector<Param> out;
  switch (carrier.kind) {
    case CarrierKind::FiniteSet:
      for (double p : carrier.points) out.push_back({p});
      break;
    case CarrierKind::UnitInterval: {
      const int n = std::max(2, resolution);
      for (int i = 0; i < n; ++i) {
        out.push_back({static_cast<double>(i) / (n - 1)});
      }
      break;
    }
    case CarrierKind::Simplex: {
      // lattice density shrinks with dimension to keep the count bounded
      const int res = std::max(2, resolution);
      const int m =
          carrier.dim <= 3
              ? res
              : std::max(2, static_cast<int>(std::floor(std::pow(
                                res, 2.0 / (carrier.dim - 1)))));
      Param partial;
      simplex_lattice(carrier.dim, m, partial, m, out);
      break;
    }
    case CarrierKind::Free:
      throw InputError("carrier_sample: free carrier cannot be sampled");
  }
  return out;
}

Envelope family_envelope(const MeanFamily& fam, int t_resolution) {
  auto samples = std::make_shared<std::vector<Param>>(
      carrier_sample(fam.carrier, t_resolution));
  auto eval = fam.eval;
  Envelope env;
  env.lower = [samples, eval](VecView x) {
    double lo = std::numeric_limits<double>::infinity();
    for (const Param& t : *samples) lo = std::min(lo, eval(x, t));
    return lo;
  };
  env.upper = [samples, eval](VecView x) {
    double hi = -std::numeric_limits<double>::infinity();
    for (const Param& t : *samples) hi = std::max(hi, eval(x, t));
    return hi;
  };
  return env;
}

double family_ratio_sup(const MeanFamily& fam, Interval domain,
                        int x_resolution, double cap) {
  if (!(domain.lo >= 0.0)) {
    throw InputError("family_ratio_sup: domain must be positive");
  }
  // endpoint-refined coordinate candidates
  std::vector<double> vals;
  const bool unbounded = !std::isfinite(domain.hi);
  if (unbounded) {
    double v = std::max(domain.lo, 0.0) + 1e-9;
    for (; v < 1e13; v *= 8.0) vals.push_back(v);
  } else {
    const double w = domain.hi - domain.lo;
    for (double frac : {1e-9, 1e-6, 1e-3}) {
      vals.push_back(domain.lo + frac * w);
      vals.push_back(domain.hi - frac * w);
    }
    const int n = std::max(3, x_resolution);
    for (int i = 1; i < n - 1; ++i) {
      vals.push_back(domain.lo + w * i / (n - 1));
    }
    std::sort(vals.begin(), vals.end());
  }

  const Envelope env = family_envelope(fam, 65);
  double sup = 1.0;
  std::vector<double> x(fam.d);
  for (size_t i = 0; i < vals.size(); ++i) {
    for (size_t j = i; j < vals.size(); ++j) {
      std::fill(x.begin(), x.end(), vals[j]);
      x[0] = vals[i];
      const double lo = env.lower(x);
      const double hi = env.upper(x);
      if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
      const double ratio = hi / lo;
      if (ratio > cap) return std::numeric_limits<double>::infinity();
      sup = std::max(sup, ratio);
    }
  }
  return sup;
}

}  // namespace meancomp

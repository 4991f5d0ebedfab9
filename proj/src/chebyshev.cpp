#include "meancomp/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meancomp/errors.hpp"

namespace meancomp {

double chebyshev_determinant(const ChebyshevPair& pair, double x, double y) {
  if (!pair.domain.contains(x) || !pair.domain.contains(y)) {
    throw InputError("chebyshev_determinant: point outside pair domain");
  }
  return pair.f(x) * pair.g(y) - pair.f(y) * pair.g(x);
}

double wronskian(const ChebyshevPair& pair, double x) {
  if (!pair.f.has_deriv1() || !pair.g.has_deriv1()) {
    throw CapabilityError("wronskian: pair lacks first derivatives");
  }
  if (!pair.domain.contains(x)) {
    throw InputError("wronskian: point outside pair domain");
  }
  return pair.f.deriv1(x) * pair.g(x) - pair.g.deriv1(x) * pair.f(x);
}

double diag_d2_over_d1(const ChebyshevPair& pair, double x) {
  if (pair.regularity != Regularity::C2 || !pair.f.has_deriv2() ||
      !pair.g.has_deriv2()) {
    throw CapabilityError("diag_d2_over_d1: pair is not C2");
  }
  const double w = wronskian(pair, x);
  if (w == 0.0 || !std::isfinite(w)) {
    throw DegeneracyError("diag_d2_over_d1: vanishing Wronskian at x=" +
                          std::to_string(x));
  }
  const double second =
      pair.f.deriv2(x) * pair.g(x) - pair.g.deriv2(x) * pair.f(x);
  return second / w;
}

ChebyshevPair apply_transform(const ChebyshevPair& pair,
                              const PairTransform& t) {
  const double dt = t.det();
  if (dt == 0.0) throw InputError("apply_transform: singular transform");
  ChebyshevPair out;
  out.f = linear_combination(t.a, pair.f, t.b, pair.g);
  out.g = linear_combination(t.c, pair.f, t.d, pair.g);
  out.domain = pair.domain;
  out.regularity = pair.regularity;
  out.orientation = (dt > 0.0) == (pair.orientation == Orientation::Positive)
                        ? Orientation::Positive
                        : Orientation::Negative;
  return out;
}

std::vector<double> default_grid(const Interval& domain, int n) {
  if (n < 2) throw InputError("default_grid: need at least two points");
  std::vector<double> grid(n);
  const bool lo_inf = !std::isfinite(domain.lo);
  const bool hi_inf = !std::isfinite(domain.hi);
  for (int i = 0; i < n; ++i) {
    const double u = (i + 0.5) / n;  // (0,1), endpoints excluded
    double x;
    if (!lo_inf && !hi_inf) {
      x = domain.lo + u * (domain.hi - domain.lo);
    } else if (lo_inf && hi_inf) {
      x = std::tan((u - 0.5) * std::acos(-1.0));
    } else if (lo_inf) {
      x = domain.hi - u / (1.0 - u);
    } else {
      x = domain.lo + u / (1.0 - u);
    }
    grid[i] = x;
  }
  return grid;
}

namespace {

std::vector<double> grid_or_default(const Interval& domain,
                                    std::span<const double> grid) {
  if (!grid.empty()) return {grid.begin(), grid.end()};
  return default_grid(domain);
}

Regularity classify_regularity(const ChebyshevPair& pair,
                               const std::vector<double>& grid) {
  if (!pair.f.has_deriv1() || !pair.g.has_deriv1()) return Regularity::C0;
  for (double x : grid) {
    const double w =
        pair.f.deriv1(x) * pair.g(x) - pair.g.deriv1(x) * pair.f(x);
    if (w == 0.0 || !std::isfinite(w)) return Regularity::C0;
  }
  return (pair.f.has_deriv2() && pair.g.has_deriv2()) ? Regularity::C2
                                                      : Regularity::C1;
}

}  // namespace

ChebyshevPair make_chebyshev_pair(ScalarFunction f, ScalarFunction g,
                                  Interval domain,
                                  std::span<const double> grid) {
  const Interval common = intersect(intersect(f.domain, g.domain), domain);
  if (!(common.lo < common.hi)) {
    throw InputError("make_chebyshev_pair: empty working interval");
  }
  ChebyshevPair pair;
  pair.f = std::move(f);
  pair.g = std::move(g);
  pair.domain = common;

  const std::vector<double> pts = grid_or_default(common, grid);
  int sign = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      const double d = pair.f(pts[i]) * pair.g(pts[j]) -
                       pair.f(pts[j]) * pair.g(pts[i]);
      if (d == 0.0 || !std::isfinite(d)) {
        throw InputError(
            "make_chebyshev_pair: determinant vanished at sampled (" +
            std::to_string(pts[i]) + ", " + std::to_string(pts[j]) + ")");
      }
      const int s = d > 0.0 ? 1 : -1;
      if (sign == 0) sign = s;
      if (s != sign) {
        throw InputError(
            "make_chebyshev_pair: determinant changed sign on the grid");
      }
    }
  }
  pair.orientation = sign >= 0 ? Orientation::Positive : Orientation::Negative;
  pair.regularity = classify_regularity(pair, pts);
  return pair;
}

bool is_normalized_on(const ChebyshevPair& pair,
                      std::span<const double> grid) {
  const std::vector<double> pts = grid_or_default(pair.domain, grid);
  double prev = 0.0;
  int dir = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const double gv = pair.g(pts[i]);
    if (!(gv > 0.0) || !std::isfinite(gv)) return false;
    const double ratio = pair.f(pts[i]) / gv;
    if (!std::isfinite(ratio)) return false;
    if (i > 0) {
      if (ratio == prev) return false;
      const int d = ratio > prev ? 1 : -1;
      if (dir == 0) dir = d;
      if (d != dir) return false;
    }
    prev = ratio;
  }
  return true;
}

std::optional<std::pair<PairTransform, ChebyshevPair>> normalize_pair(
    const ChebyshevPair& pair, std::span<const double> grid) {
  const std::vector<double> pts = grid_or_default(pair.domain, grid);
  std::vector<PairTransform> candidates = {
      {1, 0, 0, 1},  {0, 1, 1, 0},   {-1, 0, 0, 1},  {1, 0, 0, -1},
      {-1, 0, 0, -1}, {0, -1, 1, 0}, {0, 1, -1, 0},  {0, -1, -1, 0},
  };
  // coarse (c,d) sweep with the f generator kept
  for (double c = -2.0; c <= 2.0; c += 0.25) {
    for (double d = -2.0; d <= 2.0; d += 0.25) {
      if (d == 0.0 && c == 0.0) continue;
      candidates.push_back({1, 0, c, d});
    }
  }
  for (const PairTransform& t : candidates) {
    if (t.det() == 0.0) continue;
    ChebyshevPair candidate = apply_transform(pair, t);
    if (is_normalized_on(candidate, pts)) {
      return std::make_pair(t, std::move(candidate));
    }
  }
  return std::nullopt;
}

double delta_gini(double p, double q, double t) {
  if (!(t > 0.0)) throw InputError("delta_gini: t must be positive");
  if (p == q) return std::pow(t, p) * std::log(t);
  return (std::pow(t, p) - std::pow(t, q)) / (p - q);
}

double capital_delta_gini(double p, double q, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw InputError("capital_delta_gini: arguments must be positive");
  }
  return std::pow(y, p + q) * delta_gini(p, q, x / y);
}

ChebyshevPair gini_pair(double p, double q) {
  ChebyshevPair pair;
  if (p == q) {
    pair.f = log_power_fn(p);
    pair.g = power_fn(p);
  } else {
    pair.f = scaled(power_fn(p), 1.0 / (p - q));
    pair.g = power_fn(q);
  }
  pair.domain = Interval{0.0, std::numeric_limits<double>::infinity()};
  pair.orientation = Orientation::Negative;  // f/g is increasing
  pair.regularity = Regularity::C2;
  pair.f.label = "gini_f(" + std::to_string(p) + "," + std::to_string(q) + ")";
  pair.g.label = "gini_g(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return pair;
}

}  // namespace meancomp

#include "meancomp/root_finding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meancomp/errors.hpp"

namespace meancomp {

RootResult solve_bracketed(const std::function<double(double)>& f,
                           double lo, double hi, double flo, double fhi,
                           double xtol, int max_iter) {
  if (lo > hi) {
    std::swap(lo, hi);
    std::swap(flo, fhi);
  }
  if (flo == 0.0) return {lo, 0.0, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0.0, 0};
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NumericError("solve_bracketed: no sign change on [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }

  double a = lo, b = hi;
  double fa = flo, fb = fhi;        // interpolation values (Illinois-scaled)
  double fa_raw = flo, fb_raw = fhi;  // true residuals at the endpoints
  // width below which further refinement is pure rounding noise
  const double eps = std::numeric_limits<double>::epsilon();
  const double floor_width =
      2.0 * eps * std::max({std::fabs(a), std::fabs(b), 1e-300});
  const double stop = std::max(xtol, floor_width);

  int side = 0;  // Illinois bookkeeping: which end was retained last
  int it = 0;
  for (; it < max_iter && (b - a) > stop; ++it) {
    double c;
    if (fb != fa) {
      c = (a * fb - b * fa) / (fb - fa);
    } else {
      c = 0.5 * (a + b);
    }
    // keep the trial point strictly interior; degenerate steps bisect
    const double guard = 1e-3 * (b - a);
    if (!(c > a + guard && c < b - guard)) c = 0.5 * (a + b);
    // alternate with plain bisection so the bracket provably halves every
    // two steps; interpolation alone crawls on brackets spanning many
    // decades
    if (it % 2 == 1) c = 0.5 * (a + b);

    const double fc = f(c);
    if (fc == 0.0) return {c, 0.0, 0.0, it + 1};  // landed on the root
    if ((fc > 0.0) == (fb_raw > 0.0)) {
      b = c;
      fb = fb_raw = fc;
      if (side == +1) fa *= 0.5;  // Illinois: stop the stalled end sticking
      side = +1;
    } else {
      a = c;
      fa = fa_raw = fc;
      if (side == -1) fb *= 0.5;
      side = -1;
    }
  }
  if (std::fabs(fa_raw) <= std::fabs(fb_raw)) return {a, fa_raw, b - a, it};
  return {b, fb_raw, b - a, it};
}

double invert_monotone(const std::function<double(double)>& fn,
                       double target, double lo, double hi,
                       double xtol, double slack) {
  if (lo > hi) std::swap(lo, hi);
  double vlo = fn(lo);
  double vhi = fn(hi);
  if (!std::isfinite(vlo) || !std::isfinite(vhi)) {
    throw NumericError("invert_monotone: non-finite bracket values");
  }
  const bool increasing = vhi >= vlo;
  double vmin = std::min(vlo, vhi), vmax = std::max(vlo, vhi);
  const double span = std::max(vmax - vmin, 1e-300);
  if (target < vmin || target > vmax) {
    const double overshoot = std::max(vmin - target, target - vmax);
    if (overshoot > slack * (span + std::fabs(target))) {
      throw NumericError(
          "invert_monotone: target " + std::to_string(target) +
          " outside bracket values [" + std::to_string(vmin) + ", " +
          std::to_string(vmax) + "]");
    }
    target = std::clamp(target, vmin, vmax);
  }
  const double sign = increasing ? 1.0 : -1.0;
  auto h = [&](double y) { return sign * (fn(y) - target); };
  return solve_bracketed(h, lo, hi, sign * (vlo - target),
                         sign * (vhi - target), xtol)
      .root;
}

}  // namespace meancomp

#pragma once

#include <functional>

namespace meancomp {

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  double width = 0.0;  // final bracket width
  int iterations = 0;
};

// Safeguarded bracketed solver: regula falsi with Illinois weighting, with a
// bisection fallback that guarantees the bracket keeps shrinking.  Requires
// f(lo) and f(hi) of opposite (or zero) sign.  Iterates until the bracket
// width drops below xtol or the machine resolution of the endpoints,
// whichever is larger.  Cannot leave the initial bracket.
RootResult solve_bracketed(const std::function<double(double)>& f,
                           double lo, double hi, double flo, double fhi,
                           double xtol = 1e-13, int max_iter = 300);

// Inverts a strictly monotone function on [lo, hi]: solves fn(y) = target.
// The target is clamped into [fn(lo), fn(hi)] when it overshoots by at most
// `slack` relative units; a larger overshoot throws NumericError.
double invert_monotone(const std::function<double(double)>& fn,
                       double target, double lo, double hi,
                       double xtol = 1e-13, double slack = 1e-9);

}  // namespace meancomp

#pragma once

#include <optional>
#include <string>

#include "meancomp/derivatives.hpp"
#include "meancomp/linalg.hpp"
#include "meancomp/mean.hpp"

namespace meancomp {

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

// Sylvester test first (all leading principal minors above tol), then the
// smallest eigenvalue for the semidefinite/indefinite split.
Definiteness semidefinite_status(const Matrix& a, double tol);

enum class Status { Holds, Fails, Inconclusive };

std::string to_string(Status s);
std::string to_string(Definiteness d);

// Output contract of every comparison engine.  `margin` is the smallest
// slack seen: for inequality conditions the raw slack (rhs - lhs), for
// equality conditions minus the largest deviation.  A Fails verdict always
// carries a witness that reproduces the violation.
struct ComparisonVerdict {
  Status status = Status::Inconclusive;
  double margin = 0.0;
  std::string detail;
  std::optional<std::vector<double>> witness_x;
  std::optional<std::pair<double, double>> witness_uv;
  std::optional<double> witness_t;
  std::optional<int> witness_index;
  std::optional<double> ball_radius;  // neighborhood certified by Holds
};

// Second-order local comparison data at a diagonal point.
struct LocalReport {
  bool gradient_match = false;
  double gradient_max_dev = 0.0;
  Matrix matrix;  // (d-1) x (d-1) difference of the diagonal Hessians
  Definiteness psd = Definiteness::Indefinite;
};

struct Neighborhood {
  double radius = 0.1;
  int samples = 9;
};

// First-order necessary condition: the diagonal gradients of both means
// agree at every sampled point of the neighborhood.
ComparisonVerdict local_first_order(const GeneralizedMean& M,
                                    const GeneralizedMean& N, double x0,
                                    const Neighborhood& nbhd = {},
                                    double tol_grad = 1e-9);

// Difference of the (d-1)x(d-1) diagonal Hessians (N minus M) with its
// definiteness classification.
LocalReport local_second_order_matrix(const GeneralizedMean& M,
                                      const GeneralizedMean& N, double x0,
                                      double tol = 1e-10);

// Holds: gradients match on the neighborhood and the matrix is positive
// definite.  Fails: gradient mismatch or indefinite matrix.  Inconclusive:
// semidefinite-but-singular (the gap between the necessary and the
// sufficient condition).
ComparisonVerdict local_verdict(const GeneralizedMean& M,
                                const GeneralizedMean& N, double x0,
                                const Neighborhood& nbhd = {},
                                double tol_grad = 1e-9, double tol_psd = 1e-10);

// True when some centered partial d_i m (i < d-1) has variance above tol
// at the diagonal point, i.e. the parameter dependence is not almost
// everywhere constant.
bool family_parameter_nondegenerate(const GeneralizedMean& mean, double x0,
                                    double tol = 1e-12);

// True when the centered partials d_i m - <d_i m, 1> for i < d-1 are
// linearly independent in L2(mu): their Gram matrix has smallest
// eigenvalue above tol.  This is the hypothesis under which a strict
// second-order ordering is sufficient for local comparison.
bool centered_partials_independent(const GeneralizedMean& mean, double x0,
                                   double tol = 1e-10);

// Local Gini comparison with shared family and measure: decided by the
// exponent sums.  `family_nondegenerate` asserts some partial d_i m is not
// almost-everywhere constant (see family_parameter_nondegenerate).
ComparisonVerdict gini_local(double p, double q, double r, double s,
                             bool family_nondegenerate = true);

struct GlobalSampling {
  int x_points = 17;   // per axis, at most two free axes
  int uv_points = 33;  // per envelope square axis
  double endpoint_offset = 1e-9;  // relative inset from the open ends
  int t_resolution = 65;          // envelope parameter grid
};

// Measure-free global criterion: D_M(u,v)/d1 D_M(v,v) <= D_N(u,v)/d1 D_N(v,v)
// over sampled envelope squares.  A Holds verdict certifies the comparison
// for every Borel probability measure on the carrier.
ComparisonVerdict global_condition_iii(const ChebyshevPair& pairM,
                                       const ChebyshevPair& pairN,
                                       const MeanFamily& fam, Interval domain,
                                       const GlobalSampling& sampling = {},
                                       double tol_base = 1e-10);

// Global Gini comparison from the envelope ratio supremum: the unbounded
// branch checks min/max exponent dominance, the bounded branch checks the
// delta inequality at both interval ends plus the exponent-sum inequality.
// Cross-checked against dense sampling of delta_{p,q} <= delta_{r,s}.
ComparisonVerdict gini_global(double p, double q, double r, double s,
                              double ratio_sup, double tol = 1e-12);

// Both equivalent quasi-arithmetic conditions, reported separately:
// the generator-ratio condition f''/f' <= h''/h' on an x-grid and the
// support-line condition (f(u)-f(v))/f'(v) <= (h(u)-h(v))/h'(v) on a
// (u,v)-grid.
struct QuasiArithReport {
  ComparisonVerdict combined;
  ComparisonVerdict ratio_condition;
  ComparisonVerdict support_condition;
};

QuasiArithReport quasiarith_compare(const ScalarFunction& f,
                                    const ScalarFunction& h, Interval domain,
                                    int x_points = 65, int uv_points = 33,
                                    double tol_base = 1e-10);

// Power-mean comparison: Holds exactly when p <= q.
ComparisonVerdict holder_compare(double p, double q);

}  // namespace meancomp

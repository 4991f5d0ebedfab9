#include <doctest.h>

#include <cmath>
#include <random>

#include "meancomp/derivatives.hpp"
#include "meancomp/errors.hpp"
#include "support.hpp"

using namespace meancomp;
using namespace meancomp::testing;

namespace {

ProbabilityMeasure uniform_atoms(int d) {
  std::vector<Param> pts;
  for (int i = 1; i <= d; ++i) pts.push_back({static_cast<double>(i)});
  return atoms_measure(std::move(pts), std::vector<double>(d, 1.0 / d),
                       index_carrier(d));
}

}  // namespace

TEST_CASE("phi_integral worked values") {
  CHECK(phi_integral(identity_fn(), coordinate_family(2), uniform_atoms(2),
                     std::vector<double>{1.0, 3.0}) == doctest::Approx(2.0));
  // phi = x^2 over the segment family at x = (0, 1): int (1-t)^2 dt = 1/3
  CHECK(phi_integral(power_fn(2.0), segment_family(), uniform01_measure(64),
                     std::vector<double>{0.0, 1.0}) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(phi_integral(const_fn(1.0), segment_family(), uniform01_measure(16),
                     std::vector<double>{0.4, 0.9}) == doctest::Approx(1.0));
}

TEST_CASE("phi_gradient worked values and finite-difference agreement") {
  // segment family, phi = id, i = 0: int t dt = 1/2
  const MeanFamily seg = segment_family();
  const ProbabilityMeasure u01 = uniform01_measure(64);
  const std::vector<double> x = {1.0, 2.5};
  const auto grad = phi_gradient(identity_fn(), seg, u01, x);
  CHECK(grad[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(grad[1] == doctest::Approx(0.5).epsilon(1e-13));

  // phi constant: zero gradient
  for (double g : phi_gradient(const_fn(3.0), seg, u01, x)) {
    CHECK(g == doctest::Approx(0.0));
  }

  // phi = x^2, coordinate d=2 uniform atoms, x=(1,3), i=1: 2*3*(1/2) = 3
  const auto cg = phi_gradient(power_fn(2.0), coordinate_family(2),
                               uniform_atoms(2), std::vector<double>{1.0, 3.0});
  CHECK(cg[1] == doctest::Approx(3.0));

  // finite differences of phi_integral
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> xs(0.5, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> pt = {xs(rng), xs(rng)};
    const auto analytic = phi_gradient(power_fn(1.7), seg, u01, pt);
    for (int i = 0; i < 2; ++i) {
      auto slice = [&](double v) {
        std::vector<double> probe = pt;
        probe[i] = v;
        return phi_integral(power_fn(1.7), seg, u01, probe);
      };
      const double fd = central_diff(slice, pt[i], 1e-5);
      CHECK(std::fabs(analytic[i] - fd) < 1e-5 * std::max(1.0, std::fabs(fd)));
    }
  }
}

TEST_CASE("phi_hessian worked values") {
  const MeanFamily seg = segment_family();
  const ProbabilityMeasure u01 = uniform01_measure(64);
  const std::vector<double> x = {1.0, 2.5};

  // affine phi over a weighted-arithmetic family: second partials vanish
  const Matrix zero = phi_hessian(affine_fn(2.0, 1.0), seg, u01, x);
  for (const auto& row : zero) {
    for (double v : row) CHECK(v == doctest::Approx(0.0));
  }

  // phi = x^2, segment family, entry (0,0): 2 int t^2 dt = 2/3
  const Matrix h = phi_hessian(power_fn(2.0), seg, u01, x);
  CHECK(h[0][0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  // coordinate family: off-diagonal entries vanish pointwise
  const Matrix hc = phi_hessian(power_fn(2.0), coordinate_family(2),
                                uniform_atoms(2), std::vector<double>{1.0, 3.0});
  CHECK(hc[0][1] == doctest::Approx(0.0));

  // symmetry and finite differences of phi_gradient
  const Matrix hq = phi_hessian(power_fn(2.5), seg, u01, x);
  CHECK(hq[0][1] == doctest::Approx(hq[1][0]));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      auto slice = [&](double v) {
        std::vector<double> probe = x;
        probe[j] = v;
        return phi_gradient(power_fn(2.5), seg, u01, probe)[i];
      };
      const double fd = central_diff(slice, x[j], 1e-5);
      CHECK(std::fabs(hq[i][j] - fd) < 1e-4 * std::max(1.0, std::fabs(fd)));
    }
  }
}

TEST_CASE("diagonal mean derivatives: closed forms") {
  SUBCASE("segment family gradient is (1/2, 1/2) for any pair") {
    const GeneralizedMean M = make_mean(gini_pair(2.0, 0.0), segment_family(),
                                        uniform01_measure(64));
    const DiagonalDerivatives d = mean_diag_derivatives(M, 1.0);
    CHECK(d.gradient[0] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(d.gradient[1] == doctest::Approx(0.5).epsilon(1e-13));
    // Hessian entry (0,0): variance 1/12 times ratio (p+q-1)/x = 1
    CHECK(d.hessian[0][0] == doctest::Approx(1.0 / 12.0).epsilon(1e-10));
  }
  SUBCASE("coordinate family gradient lists the atom masses") {
    const GeneralizedMean M = make_mean(gini_pair(1.0, 0.0),
                                        coordinate_family(3), uniform_atoms(3));
    const DiagonalDerivatives d = mean_diag_derivatives(M, 2.0);
    for (int i = 0; i < 3; ++i) {
      CHECK(d.gradient[i] == doctest::Approx(1.0 / 3.0));
    }
  }
}

TEST_CASE("diagonal derivatives: gradient sums to one, Hessian rows to zero") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> pq(-2.5, 2.5);
  std::uniform_real_distribution<double> pos(0.6, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const GeneralizedMean M = make_mean(gini_pair(pq(rng), pq(rng)),
                                        segment_family(), uniform01_measure(48));
    const double x0 = pos(rng);
    const DiagonalDerivatives d = mean_diag_derivatives(M, x0);
    CHECK(std::fabs(d.gradient[0] + d.gradient[1] - 1.0) < 1e-8);
    for (const auto& row : d.hessian) {
      double sum = 0.0;
      for (double v : row) sum += v;
      CHECK(std::fabs(sum) < 1e-6);
    }
    CHECK(max_asymmetry(d.hessian) < 1e-8);
  }
}

TEST_CASE("diagonal derivatives agree with finite differences of the mean") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> pq(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double p = pq(rng), q = pq(rng);
    const GeneralizedMean M =
        make_mean(gini_pair(p, q), segment_family(), uniform01_measure(48));
    const double x0 = 1.0 + 0.5 * (trial % 4);
    const DiagonalDerivatives d = mean_diag_derivatives(M, x0);

    auto eval_at = [&](double a, double b) {
      return eval_implicit(M, std::vector<double>{a, b});
    };
    const double h1 = 1e-5 * std::max(1.0, x0);
    const double fd0 = (eval_at(x0 + h1, x0) - eval_at(x0 - h1, x0)) / (2 * h1);
    CHECK(std::fabs(d.gradient[0] - fd0) < 1e-5);

    const double h2 = 1e-3 * std::max(1.0, x0);
    const double fd00 =
        (eval_at(x0 + h2, x0) - 2 * eval_at(x0, x0) + eval_at(x0 - h2, x0)) /
        (h2 * h2);
    CHECK(std::fabs(d.hessian[0][0] - fd00) < 1e-3);
    const double fd01 = (eval_at(x0 + h2, x0 + h2) - eval_at(x0 + h2, x0 - h2) -
                         eval_at(x0 - h2, x0 + h2) + eval_at(x0 - h2, x0 - h2)) /
                        (4 * h2 * h2);
    CHECK(std::fabs(d.hessian[0][1] - fd01) < 1e-3);
  }
}

TEST_CASE("capability errors for missing ingredients") {
  // holder_path has no second partials
  CHECK_THROWS_AS(phi_hessian(power_fn(2.0), holder_path_family(2, {1.0}),
                              dirac_measure({1.0}),
                              std::vector<double>{1.0, 2.0}),
                  CapabilityError);
  // phi without derivatives
  ScalarFunction bare = identity_fn();
  bare.deriv1 = nullptr;
  CHECK_THROWS_AS(phi_gradient(bare, segment_family(), uniform01_measure(8),
                               std::vector<double>{1.0, 2.0}),
                  CapabilityError);
}

TEST_CASE("mixture difference quotients and their limit") {
  SUBCASE("pair (id, 1): quotient equals the prediction for every gamma") {
    const ChebyshevPair pair =
        make_chebyshev_pair(identity_fn(), const_fn(1.0), Interval{-10, 10});
    const MeanFamily fam = segment_family();
    const ProbabilityMeasure nu = dirac_measure({1.0}, unit_interval_carrier());
    const MixtureLimit lim = dirac_mixture_limit(
        pair, fam, {0.0}, nu, std::vector<double>{1.0, 3.0});
    // m(x, 0) = x2 = 3, m(x, 1) = x1 = 1, prediction = 1 - 3 = -2
    CHECK(lim.prediction == doctest::Approx(-2.0));
    for (double qt : lim.quotients) {
      CHECK(qt == doctest::Approx(-2.0).epsilon(1e-9));
    }
  }
  SUBCASE("nu concentrated at t0 gives limit zero") {
    const ChebyshevPair pair = gini_pair(2.0, 1.0);
    const MeanFamily fam = segment_family();
    const ProbabilityMeasure nu = dirac_measure({0.5}, unit_interval_carrier());
    const MixtureLimit lim = dirac_mixture_limit(
        pair, fam, {0.5}, nu, std::vector<double>{1.0, 3.0});
    CHECK(lim.prediction == doctest::Approx(0.0));
    // the root is exact here; the quotient floor is ulp(root)/gamma
    CHECK(std::fabs(lim.quotients.back()) < 5e-9);
  }
  SUBCASE("worked value: pair (x^2, x), segment family") {
    const ChebyshevPair pair = gini_pair(2.0, 1.0);
    const MeanFamily fam = segment_family();
    const ProbabilityMeasure nu = dirac_measure({1.0}, unit_interval_carrier());
    const MixtureLimit lim = dirac_mixture_limit(
        pair, fam, {0.0}, nu, std::vector<double>{1.0, 3.0});
    // D(m(x,1), m(x,0)) / d1 D(m(x,0), m(x,0)) = Delta(1,3)/3^2 = -6/9
    CHECK(lim.prediction == doctest::Approx(-2.0 / 3.0));
    CHECK(lim.quotients.back() ==
          doctest::Approx(-2.0 / 3.0).epsilon(1e-5));
    // quotient error decays linearly in gamma
    const size_t n = lim.quotients.size();
    const double dev_early = std::fabs(lim.quotients[9] - lim.prediction);
    const double dev_late = std::fabs(lim.quotients[n - 1] - lim.prediction);
    CHECK(dev_late < dev_early);
  }
  SUBCASE("invalid gamma sequences rejected") {
    const ChebyshevPair pair = gini_pair(2.0, 1.0);
    const MeanFamily fam = segment_family();
    const ProbabilityMeasure nu = dirac_measure({1.0}, unit_interval_carrier());
    CHECK_THROWS_AS(dirac_mixture_limit(pair, fam, {0.0}, nu,
                                        std::vector<double>{1.0, 3.0},
                                        {0.5, 0.75}),
                    InputError);
    CHECK_THROWS_AS(dirac_mixture_limit(pair, fam, {0.0}, nu,
                                        std::vector<double>{1.0, 3.0},
                                        {1.5}),
                    InputError);
  }
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "meancomp/chebyshev.hpp"
#include "meancomp/errors.hpp"
#include "support.hpp"

using namespace meancomp;
using namespace meancomp::testing;

namespace {

ChebyshevPair pair_1_id() {
  return make_chebyshev_pair(const_fn(1.0), identity_fn(), Interval{-10, 10});
}

}  // namespace

TEST_CASE("determinant: linear case and antisymmetry") {
  const ChebyshevPair pair = pair_1_id();
  CHECK(chebyshev_determinant(pair, 1.0, 3.0) == doctest::Approx(2.0));
  CHECK(chebyshev_determinant(pair, 2.0, 2.0) == 0.0);
  CHECK(pair.orientation == Orientation::Positive);

  // f = x^2, g = x on (0, inf): D(1,2) = 1*2 - 4*1 = -2
  const ChebyshevPair sq =
      make_chebyshev_pair(power_fn(2.0), power_fn(1.0), Interval{0, 100});
  CHECK(chebyshev_determinant(sq, 1.0, 2.0) == doctest::Approx(-2.0));
  CHECK(sq.orientation == Orientation::Negative);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 50.0);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng), y = u(rng);
    CHECK(chebyshev_determinant(sq, x, y) ==
          doctest::Approx(-chebyshev_determinant(sq, y, x)));
  }
}

TEST_CASE("determinant: domain violations raise input errors") {
  const ChebyshevPair sq =
      make_chebyshev_pair(power_fn(2.0), power_fn(1.0), Interval{0, 100});
  CHECK_THROWS_AS(chebyshev_determinant(sq, -1.0, 2.0), InputError);
}

TEST_CASE("wronskian values") {
  const ChebyshevPair pair = pair_1_id();
  CHECK(wronskian(pair, 0.3) == doctest::Approx(-1.0));
  CHECK(wronskian(pair, -5.0) == doctest::Approx(-1.0));

  // Gini pair (2,1) at x = 1: diagonal first partial is x^(p+q-1) = 1
  CHECK(wronskian(gini_pair(2.0, 1.0), 1.0) == doctest::Approx(1.0));

  // f = x^3, g = x at x = 2: 12*2 - 1*8 = 16
  const ChebyshevPair cube =
      make_chebyshev_pair(power_fn(3.0), power_fn(1.0), Interval{0, 100});
  CHECK(wronskian(cube, 2.0) == doctest::Approx(16.0));
}

TEST_CASE("wronskian requires derivatives") {
  ScalarFunction f = const_fn(1.0);
  f.deriv1 = nullptr;
  f.deriv2 = nullptr;
  const ChebyshevPair pair =
      make_chebyshev_pair(f, identity_fn(), Interval{-1, 1});
  CHECK(pair.regularity == Regularity::C0);
  CHECK_THROWS_AS(wronskian(pair, 0.0), CapabilityError);
}

TEST_CASE("diagonal second-to-first partial ratio") {
  CHECK(diag_d2_over_d1(gini_pair(2.0, 0.0), 1.0) == doctest::Approx(1.0));
  CHECK(diag_d2_over_d1(gini_pair(3.0, 2.0), 2.0) == doctest::Approx(2.0));
  // (id, 1): f'' = g'' = 0
  const ChebyshevPair lin =
      make_chebyshev_pair(identity_fn(), const_fn(1.0), Interval{-5, 5});
  CHECK(diag_d2_over_d1(lin, 1.7) == doctest::Approx(0.0));

  // Gini ratio equals (p+q-1)/x across parameters, including p == q
  for (double p : {-1.5, 0.0, 1.0, 2.0}) {
    for (double q : {-1.0, 0.5, 2.0, p}) {
      for (double x : {0.5, 1.0, 3.0}) {
        CHECK(diag_d2_over_d1(gini_pair(p, q), x) ==
              doctest::Approx((p + q - 1.0) / x).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("apply_transform scales the determinant by det(t)") {
  const ChebyshevPair pair = pair_1_id();
  SUBCASE("identity") {
    const ChebyshevPair same = apply_transform(pair, PairTransform{});
    CHECK(chebyshev_determinant(same, 1.0, 3.0) == doctest::Approx(2.0));
    CHECK(same.orientation == pair.orientation);
  }
  SUBCASE("swap negates") {
    const ChebyshevPair swapped =
        apply_transform(pair, PairTransform{0, 1, 1, 0});
    CHECK(chebyshev_determinant(swapped, 1.0, 3.0) == doctest::Approx(-2.0));
    CHECK(swapped.orientation == Orientation::Negative);
  }
  SUBCASE("scale (2,0,0,3) multiplies by 6") {
    const ChebyshevPair scaled =
        apply_transform(pair, PairTransform{2, 0, 0, 3});
    CHECK(chebyshev_determinant(scaled, 1.0, 3.0) == doctest::Approx(12.0));
  }
  SUBCASE("random transforms: exact covariance") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
      PairTransform t{u(rng), u(rng), u(rng), u(rng)};
      if (std::fabs(t.det()) < 0.1) continue;
      const ChebyshevPair moved = apply_transform(pair, t);
      for (double x : {-3.0, 0.5, 2.0}) {
        const double y = x + 1.5;
        CHECK(chebyshev_determinant(moved, x, y) ==
              doctest::Approx(t.det() * chebyshev_determinant(pair, x, y))
                  .epsilon(1e-12));
      }
    }
  }
  SUBCASE("singular transform rejected") {
    CHECK_THROWS_AS(apply_transform(pair, PairTransform{1, 2, 2, 4}),
                    InputError);
  }
}

TEST_CASE("sign coherence: g > 0 with decreasing f/g gives a positive system") {
  // f = 1/x, g = 1 on (0, inf): f/g decreasing
  const ChebyshevPair pair =
      make_chebyshev_pair(power_fn(-1.0), const_fn(1.0), Interval{0, 50});
  CHECK(pair.orientation == Orientation::Positive);
  const auto grid = default_grid(pair.domain, 16);
  for (size_t i = 0; i < grid.size(); ++i) {
    for (size_t j = i + 1; j < grid.size(); ++j) {
      CHECK(chebyshev_determinant(pair, grid[i], grid[j]) > 0.0);
    }
  }
}

TEST_CASE("make_chebyshev_pair refutes non-Chebyshev pairs") {
  // x^2 against 1 on (-1, 1): the determinant vanishes at y = -x
  ScalarFunction square;
  square.domain = Interval{-10, 10};
  square.value = [](double x) { return x * x; };
  square.deriv1 = [](double x) { return 2.0 * x; };
  square.deriv2 = [](double) { return 2.0; };
  CHECK_THROWS_AS(make_chebyshev_pair(square, const_fn(1.0), Interval{-1, 1}),
                  InputError);
}

TEST_CASE("normalize_pair") {
  SUBCASE("already normal: identity transform") {
    const ChebyshevPair pair =
        make_chebyshev_pair(identity_fn(), const_fn(1.0), Interval{-3, 3});
    const auto result = normalize_pair(pair);
    REQUIRE(result.has_value());
    CHECK(result->first.a == 1.0);
    CHECK(result->first.b == 0.0);
    CHECK(result->first.c == 0.0);
    CHECK(result->first.d == 1.0);
  }
  SUBCASE("(1, id) on (0, inf) is accepted in normal form") {
    // g = id is positive and f/g = 1/x strictly monotone on (0, 9), so the
    // identity already qualifies; the swap (id, 1) is an equally valid
    // normal form the search never needs to reach
    const ChebyshevPair pair =
        make_chebyshev_pair(const_fn(1.0), identity_fn(), Interval{0.0, 9.0});
    const auto result = normalize_pair(pair);
    REQUIRE(result.has_value());
    CHECK(is_normalized_on(result->second, default_grid(pair.domain)));
    const ChebyshevPair swapped =
        apply_transform(pair, PairTransform{0, 1, 1, 0});
    CHECK(is_normalized_on(swapped, default_grid(pair.domain)));
  }
  SUBCASE("negated generators need a sign-flip transform") {
    const ChebyshevPair pair = make_chebyshev_pair(
        identity_fn(), const_fn(-1.0), Interval{0.5, 9.0});
    const auto result = normalize_pair(pair);
    REQUIRE(result.has_value());
    CHECK(is_normalized_on(result->second, default_grid(pair.domain)));
    CHECK(result->first.det() != 0.0);
  }
  SUBCASE("(sin, cos) on (-pi/2, pi/2): identity works") {
    ScalarFunction sine;
    sine.domain = Interval{-10, 10};
    sine.value = [](double x) { return std::sin(x); };
    sine.deriv1 = [](double x) { return std::cos(x); };
    sine.deriv2 = [](double x) { return -std::sin(x); };
    ScalarFunction cosine;
    cosine.domain = Interval{-10, 10};
    cosine.value = [](double x) { return std::cos(x); };
    cosine.deriv1 = [](double x) { return -std::sin(x); };
    cosine.deriv2 = [](double x) { return -std::cos(x); };
    const double half_pi = std::acos(-1.0) / 2.0;
    const ChebyshevPair pair = make_chebyshev_pair(
        sine, cosine, Interval{-half_pi + 1e-6, half_pi - 1e-6});
    const auto result = normalize_pair(pair);
    REQUIRE(result.has_value());
    CHECK(result->first.a == 1.0);
    CHECK(result->first.d == 1.0);
    CHECK(result->first.b == 0.0);
    CHECK(result->first.c == 0.0);
  }
}

TEST_CASE("delta_gini values and derivative anchors") {
  CHECK(delta_gini(2.0, 1.0, 1.0) == 0.0);
  CHECK(delta_gini(2.0, 1.0, 2.0) == doctest::Approx(2.0));
  CHECK(delta_gini(0.0, 0.0, std::exp(1.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(delta_gini(1.0, 2.0, 0.0), InputError);
  CHECK_THROWS_AS(delta_gini(1.0, 2.0, -1.0), InputError);

  // delta'(1) = 1 and delta''(1) = p+q-1, checked by finite differences
  for (double p : {-2.0, -0.5, 0.0, 1.0, 2.5}) {
    for (double q : {-1.5, 0.0, 1.0, 3.0, p}) {
      auto delta = [&](double t) { return delta_gini(p, q, t); };
      CHECK(std::fabs(central_diff(delta, 1.0, 1e-5) - 1.0) < 1e-6);
      CHECK(std::fabs(central_diff2(delta, 1.0, 1e-4) - (p + q - 1.0)) <
            1e-4);
    }
  }
}

TEST_CASE("capital delta: worked values and pair consistency") {
  CHECK(capital_delta_gini(2.0, 1.0, 1.0, 2.0) == doctest::Approx(-2.0));
  CHECK(capital_delta_gini(1.5, -0.5, 3.0, 3.0) == 0.0);
  CHECK(capital_delta_gini(0.0, 0.0, std::exp(1.0), 1.0) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(capital_delta_gini(1.0, 2.0, -1.0, 2.0), InputError);

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> pq(-3.0, 3.0);
  std::uniform_real_distribution<double> xs(0.2, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double p = pq(rng), q = pq(rng);
    const double x = xs(rng), y = xs(rng);
    const ChebyshevPair pair = gini_pair(p, q);
    const double via_pair = chebyshev_determinant(pair, x, y);
    const double direct = capital_delta_gini(p, q, x, y);
    CHECK(std::fabs(via_pair - direct) <=
          1e-12 * std::max(1.0, std::fabs(direct)));
  }
  // p == q branch of the pair
  const ChebyshevPair eq = gini_pair(1.5, 1.5);
  CHECK(chebyshev_determinant(eq, 2.0, 3.0) ==
        doctest::Approx(capital_delta_gini(1.5, 1.5, 2.0, 3.0)));
}

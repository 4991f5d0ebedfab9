#include <doctest.h>

#include <cmath>

#include "meancomp/errors.hpp"
#include "meancomp/json_io.hpp"
#include "meancomp/oracle.hpp"
#include "support.hpp"

using namespace meancomp;

namespace {

ProbabilityMeasure uniform_atoms(int d) {
  std::vector<Param> pts;
  for (int i = 1; i <= d; ++i) pts.push_back({static_cast<double>(i)});
  return atoms_measure(std::move(pts), std::vector<double>(d, 1.0 / d),
                       index_carrier(d));
}

GeneralizedMean quasiarith_mean(const ScalarFunction& f, int d) {
  return make_mean(
      make_chebyshev_pair(f, const_fn(1.0), Interval{0.0, 100.0}),
      coordinate_family(d), uniform_atoms(d));
}

}  // namespace

TEST_CASE("oracle: identical means dominate with slack zero") {
  const GeneralizedMean M = quasiarith_mean(log_fn(), 2);
  const OracleReport r = brute_force_compare(M, M, Interval{0.5, 4.0}, 200, 1);
  CHECK(r.verdict == OracleVerdict::Dominates);
  CHECK(r.min_slack == 0.0);
  CHECK(r.eval_failures == 0);
}

TEST_CASE("oracle: GM vs AM dominates, reversed violates") {
  const GeneralizedMean gm = quasiarith_mean(log_fn(), 2);
  const GeneralizedMean am = quasiarith_mean(identity_fn(), 2);
  const OracleReport fwd =
      brute_force_compare(gm, am, Interval{0.5, 4.0}, 300, 42);
  CHECK(fwd.verdict == OracleVerdict::Dominates);
  const OracleReport rev =
      brute_force_compare(am, gm, Interval{0.5, 4.0}, 300, 42);
  CHECK(rev.verdict == OracleVerdict::Violated);
  REQUIRE(!rev.argmin.empty());
  // the witness reproduces the violation
  CHECK(eval_implicit(gm, rev.argmin) - eval_implicit(am, rev.argmin) ==
        doctest::Approx(rev.min_slack));
  CHECK(rev.min_slack < -1e-9);
}

TEST_CASE("oracle determinism: identical seeds, identical serialized reports") {
  const GeneralizedMean gm = quasiarith_mean(log_fn(), 2);
  const GeneralizedMean am = quasiarith_mean(identity_fn(), 2);
  const OracleReport a =
      brute_force_compare(am, gm, Interval{0.5, 4.0}, 257, 7);
  const OracleReport b =
      brute_force_compare(am, gm, Interval{0.5, 4.0}, 257, 7);
  CHECK(dump_json_17(to_json(a)) == dump_json_17(to_json(b)));
  // a different seed moves the quasi-random bulk
  const OracleReport c =
      brute_force_compare(am, gm, Interval{0.5, 4.0}, 257, 8);
  CHECK(a.samples == c.samples);
}

TEST_CASE("random measure battery is valid and seeded") {
  const auto battery = random_measure_battery(index_carrier(3), 8, 8, 5);
  REQUIRE(battery.size() == 8);
  for (const auto& mu : battery) {
    CHECK(std::fabs(integrate(mu, [](const Param&) { return 1.0; }) - 1.0) <
          1e-12);
    CHECK(mu.size() >= 1);
    CHECK(mu.size() <= 8);
  }
  const auto battery2 = random_measure_battery(index_carrier(3), 8, 8, 5);
  for (size_t i = 0; i < battery.size(); ++i) {
    CHECK(battery[i].nodes == battery2[i].nodes);
    CHECK(battery[i].weights == battery2[i].weights);
  }
  // simplex variant
  const auto simplex = random_measure_battery(simplex_carrier(3), 4, 4, 9);
  for (const auto& mu : simplex) {
    for (const Param& t : mu.nodes) {
      CHECK(t.size() == 3);
      CHECK(std::fabs(t[0] + t[1] + t[2] - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("scenario: identity") {
  const ScenarioResult r = run_scenario("identity", 11);
  CHECK(r.pass);
}

TEST_CASE("scenario: unknown name raises input error") {
  CHECK_THROWS_AS(run_scenario("nonsense", 1), InputError);
}

TEST_CASE("theorem-2 style contrapositive: a failed envelope criterion "
          "yields a mixture violation") {
  // (2,0) vs (1,0) fails globally; build the mixture from the witness
  const MeanFamily fam = segment_family();
  const ComparisonVerdict v = global_condition_iii(
      gini_pair(2.0, 0.0), gini_pair(1.0, 0.0), fam, Interval{0.5, 4.0});
  REQUIRE(v.status == Status::Fails);
  REQUIRE(v.witness_uv.has_value());
  REQUIRE(v.witness_x.has_value());
  const auto [u, w] = *v.witness_uv;
  const std::vector<double>& x = *v.witness_x;
  // segment family: solve m(x, t) = u and m(x, t0) = w for t, t0
  const double t_u = (u - x[1]) / (x[0] - x[1]);
  const double t_w = (w - x[1]) / (x[0] - x[1]);
  REQUIRE(t_u >= -1e-9);
  REQUIRE(t_u <= 1.0 + 1e-9);
  bool violated = false;
  for (int k = 2; k <= 20 && !violated; ++k) {
    const double gamma = std::ldexp(1.0, -k);
    const ProbabilityMeasure mu = dirac_mixture(
        {std::clamp(t_w, 0.0, 1.0)}, gamma,
        dirac_measure({std::clamp(t_u, 0.0, 1.0)}, unit_interval_carrier()));
    const GeneralizedMean M = make_mean(gini_pair(2.0, 0.0), fam, mu);
    const GeneralizedMean N = make_mean(gini_pair(1.0, 0.0), fam, mu);
    violated = eval_implicit(N, x) - eval_implicit(M, x) < -1e-12;
  }
  CHECK(violated);
}

TEST_CASE("holds verdicts are confirmed over a random measure battery") {
  const MeanFamily fam = coordinate_family(2);
  const Interval domain{0.5, 4.0};
  const ComparisonVerdict v = global_condition_iii(
      gini_pair(1.0, 0.0), gini_pair(2.0, 0.0), fam, domain);
  REQUIRE(v.status == Status::Holds);
  for (const auto& mu : random_measure_battery(fam.carrier, 8, 4, 3)) {
    const GeneralizedMean M = make_mean(gini_pair(1.0, 0.0), fam, mu);
    const GeneralizedMean N = make_mean(gini_pair(2.0, 0.0), fam, mu);
    const OracleReport r = brute_force_compare(M, N, domain, 128, 19);
    CHECK(r.min_slack >= -1e-9);
  }
}

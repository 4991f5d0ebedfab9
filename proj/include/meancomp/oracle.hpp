#pragma once

#include <cstdint>
#include <string>

#include "meancomp/compare.hpp"
#include "meancomp/mean.hpp"

namespace meancomp {

enum class OracleVerdict { Dominates, Violated, Borderline };

std::string to_string(OracleVerdict v);

// Direct sampling of the comparison inequality N(x) - M(x) >= 0.
struct OracleReport {
  long samples = 0;
  double min_slack = 0.0;
  std::vector<double> argmin;
  OracleVerdict verdict = OracleVerdict::Borderline;
  long eval_failures = 0;  // samples skipped after evaluation errors
};

struct OracleOptions {
  double tol = 1e-9;
  bool use_implicit = true;  // evaluate through the defining equation
};

// Evaluates both means at quasi-random points of domain^d (a low-
// discrepancy sequence offset by the seed) plus structured probes:
// diagonal points and one-coordinate perturbations at 1e-3 and 1e-1 of the
// span.  Deterministic for a fixed seed.  Verdict: Violated when the worst
// slack is below -tol, Borderline when negative within tol, Dominates
// otherwise.
OracleReport brute_force_compare(const GeneralizedMean& M,
                                 const GeneralizedMean& N, Interval domain,
                                 int n_samples, uint64_t seed,
                                 const OracleOptions& opt = {});

// Seeded battery of discrete measures on a carrier: 1..max_atoms atoms at
// random carrier points with Dirichlet(1) weights.
std::vector<ProbabilityMeasure> random_measure_battery(const Carrier& carrier,
                                                       int count,
                                                       int max_atoms,
                                                       uint64_t seed);

// One theorem-equivalence scenario: a set of cases, each wiring the
// engine conditions and the oracle together and asserting agreement.
struct ScenarioCase {
  std::string name;
  std::vector<std::pair<std::string, std::string>> conditions;
  bool agree = false;
  std::string note;
};

struct ScenarioResult {
  std::string scenario;
  uint64_t seed = 0;
  std::vector<ScenarioCase> cases;
  bool pass = false;
};

std::vector<std::string> scenario_names();
// oracle_samples = 0 keeps each scenario's built-in sample count.
ScenarioResult run_scenario(const std::string& name, uint64_t seed,
                            int oracle_samples = 0);

}  // namespace meancomp

#pragma once

#include <string>

#include <json.hpp>

#include "meancomp/compare.hpp"
#include "meancomp/mean.hpp"
#include "meancomp/oracle.hpp"

namespace meancomp {

using Json = nlohmann::json;

// Descriptor loaders.  Schemas:
//   function: {"kind":"power","p":2.0} | {"kind":"log_power","p":2.0}
//           | {"kind":"log"} | {"kind":"exp"}
//           | {"kind":"affine","a":..,"b":..} | {"kind":"const","c":..}
//   pair:     {"f":<fn>,"g":<fn>,"interval":[lo,hi]}
//           | {"kind":"gini","p":..,"q":..}
//   measure:  {"kind":"atoms","atoms":[[t,w],..]}
//           | {"kind":"uniform01","nodes":64}
//           | {"kind":"density01","expr":<fn>,"nodes":64}
//           | {"kind":"simplex","d":3,"resolution":64}
//           | {"kind":"dirac","t":..}
//   family:   {"kind":"coordinates","d":2} | {"kind":"segment"}
//           | {"kind":"weighted_arithmetic","lambdas":[<fn>,..]}
//           | {"kind":"quasi_arithmetic","phi":<fn>,"d":3}
//           | {"kind":"holder_path","exponents":[..],"d":2}
//   mean:     {"pair":<pair>,"family":<family>,"measure":<measure>}
//           | {"kind":"gini","p":..,"q":..,"family":..,"measure":..}
// All loaders throw InputError on schema violations.
ScalarFunction load_function(const Json& j);
ChebyshevPair load_pair(const Json& j);
ProbabilityMeasure load_measure(const Json& j);
MeanFamily load_family(const Json& j);
GeneralizedMean load_mean(const Json& j);

// Interval endpoints accept numbers or the strings "inf"/"-inf".
Interval load_interval(const Json& j);

// Serializes with every floating-point number printed at 17 significant
// digits ("%.17g"); non-finite values become the strings "inf", "-inf",
// "nan".  Object keys come out sorted, so equal documents serialize to
// identical bytes.
std::string dump_json_17(const Json& j, int indent = -1);

Json to_json(const ComparisonVerdict& verdict);
Json to_json(const QuasiArithReport& report);
Json to_json(const OracleReport& report);
Json to_json(const ScenarioResult& result);
Json to_json(const DiagonalDerivatives& derivs);
Json to_json(const MixtureLimit& limit);

}  // namespace meancomp

#include "meancomp/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "meancomp/errors.hpp"

namespace meancomp {

namespace {

double require_number(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw InputError(std::string("descriptor: missing numeric field '") +
                     key + "'");
  }
  return j[key].get<double>();
}

std::string require_kind(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw InputError("descriptor: expected an object with a 'kind' field");
  }
  return j["kind"].get<std::string>();
}

Param load_param(const Json& j) {
  if (j.is_number()) return {j.get<double>()};
  if (j.is_array()) {
    Param t;
    for (const Json& c : j) {
      if (!c.is_number()) throw InputError("parameter: non-numeric entry");
      t.push_back(c.get<double>());
    }
    return t;
  }
  throw InputError("parameter: expected a number or an array");
}

double endpoint(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw InputError("interval: endpoints must be numbers or \"inf\"/\"-inf\"");
}

}  // namespace

Interval load_interval(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InputError("interval: expected [lo, hi]");
  }
  const Interval out{endpoint(j[0]), endpoint(j[1])};
  if (!(out.lo < out.hi)) throw InputError("interval: lo must be below hi");
  return out;
}

ScalarFunction load_function(const Json& j) {
  const std::string kind = require_kind(j);
  if (kind == "power") return power_fn(require_number(j, "p"));
  if (kind == "log_power") return log_power_fn(require_number(j, "p"));
  if (kind == "log") return log_fn();
  if (kind == "exp") return exp_fn();
  if (kind == "affine") {
    return affine_fn(require_number(j, "a"), require_number(j, "b"));
  }
  if (kind == "const") return const_fn(require_number(j, "c"));
  if (kind == "identity") return identity_fn();
  throw InputError("function descriptor: unknown kind '" + kind + "'");
}

ChebyshevPair load_pair(const Json& j) {
  if (j.is_object() && j.contains("kind") && j["kind"] == "gini") {
    return gini_pair(require_number(j, "p"), require_number(j, "q"));
  }
  if (!j.is_object() || !j.contains("f") || !j.contains("g")) {
    throw InputError("pair descriptor: expected {f, g, interval}");
  }
  Interval domain;  // default: whole line, clipped by the generator domains
  if (j.contains("interval")) domain = load_interval(j["interval"]);
  return make_chebyshev_pair(load_function(j["f"]), load_function(j["g"]),
                             domain);
}

ProbabilityMeasure load_measure(const Json& j) {
  const std::string kind = require_kind(j);
  if (kind == "atoms") {
    if (!j.contains("atoms") || !j["atoms"].is_array()) {
      throw InputError("atoms measure: missing 'atoms' array");
    }
    std::vector<Param> points;
    std::vector<double> weights;
    for (const Json& aw : j["atoms"]) {
      if (!aw.is_array() || aw.size() != 2) {
        throw InputError("atoms measure: each entry must be [t, w]");
      }
      points.push_back(load_param(aw[0]));
      if (!aw[1].is_number()) {
        throw InputError("atoms measure: weight must be a number");
      }
      weights.push_back(aw[1].get<double>());
    }
    return atoms_measure(std::move(points), std::move(weights));
  }
  if (kind == "uniform01") {
    const int nodes =
        j.contains("nodes") ? static_cast<int>(require_number(j, "nodes")) : 64;
    return uniform01_measure(nodes);
  }
  if (kind == "density01") {
    if (!j.contains("expr")) {
      throw InputError("density01 measure: missing 'expr' function");
    }
    const int nodes =
        j.contains("nodes") ? static_cast<int>(require_number(j, "nodes")) : 64;
    return density01_measure(load_function(j["expr"]), nodes);
  }
  if (kind == "simplex") {
    const int d = static_cast<int>(require_number(j, "d"));
    const int resolution = j.contains("resolution")
                               ? static_cast<int>(require_number(j, "resolution"))
                               : 16;
    return simplex_uniform(d, resolution);
  }
  if (kind == "dirac") {
    if (!j.contains("t")) throw InputError("dirac measure: missing 't'");
    return dirac_measure(load_param(j["t"]));
  }
  throw InputError("measure descriptor: unknown kind '" + kind + "'");
}

MeanFamily load_family(const Json& j) {
  const std::string kind = require_kind(j);
  if (kind == "coordinates") {
    return coordinate_family(static_cast<int>(require_number(j, "d")));
  }
  if (kind == "segment") return segment_family();
  if (kind == "weighted_arithmetic") {
    if (!j.contains("lambdas") || !j["lambdas"].is_array()) {
      throw InputError("weighted_arithmetic family: missing 'lambdas'");
    }
    std::vector<std::function<double(const Param&)>> lambdas;
    for (const Json& lj : j["lambdas"]) {
      ScalarFunction fn = load_function(lj);
      lambdas.emplace_back(
          [fn](const Param& t) { return fn.value(t.at(0)); });
    }
    std::vector<Param> checks;
    for (int i = 0; i <= 16; ++i) checks.push_back({i / 16.0});
    return weighted_arithmetic_family(std::move(lambdas),
                                      unit_interval_carrier(), checks);
  }
  if (kind == "quasi_arithmetic") {
    if (!j.contains("phi")) {
      throw InputError("quasi_arithmetic family: missing 'phi'");
    }
    return quasi_arithmetic_family(load_function(j["phi"]),
                                   static_cast<int>(require_number(j, "d")));
  }
  if (kind == "holder_path") {
    if (!j.contains("exponents") || !j["exponents"].is_array()) {
      throw InputError("holder_path family: missing 'exponents'");
    }
    std::vector<double> exponents;
    for (const Json& e : j["exponents"]) exponents.push_back(e.get<double>());
    const int d =
        j.contains("d") ? static_cast<int>(require_number(j, "d")) : 2;
    return holder_path_family(d, std::move(exponents));
  }
  throw InputError("family descriptor: unknown kind '" + kind + "'");
}

GeneralizedMean load_mean(const Json& j) {
  if (!j.is_object()) throw InputError("mean descriptor: expected an object");
  if (j.contains("kind") && j["kind"] == "gini") {
    if (!j.contains("family") || !j.contains("measure")) {
      throw InputError("gini mean descriptor: missing family or measure");
    }
    return make_mean(
        gini_pair(require_number(j, "p"), require_number(j, "q")),
        load_family(j["family"]), load_measure(j["measure"]));
  }
  if (!j.contains("pair") || !j.contains("family") || !j.contains("measure")) {
    throw InputError("mean descriptor: expected {pair, family, measure}");
  }
  return make_mean(load_pair(j["pair"]), load_family(j["family"]),
                   load_measure(j["measure"]));
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad =
      indent >= 0 ? "\n" + std::string(static_cast<size_t>(indent) * (depth + 1), ' ') : "";
  const std::string pad_close =
      indent >= 0 ? "\n" + std::string(static_cast<size_t>(indent) * depth, ' ') : "";
  switch (j.type()) {
    case Json::value_t::object: {
      out += "{";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",";
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += indent >= 0 ? ": " : ":";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      if (!first) out += pad_close;
      out += "}";
      break;
    }
    case Json::value_t::array: {
      out += "[";
      bool first = true;
      for (const Json& item : j) {
        if (!first) out += ",";
        first = false;
        out += pad;
        dump_rec(item, out, indent, depth + 1);
      }
      if (!first) out += pad_close;
      out += "]";
      break;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    default:
      out += j.dump();
      break;
  }
}

Json witness_json(const ComparisonVerdict& v) {
  Json w = Json::object();
  if (v.witness_x) w["x"] = *v.witness_x;
  if (v.witness_uv) w["uv"] = {v.witness_uv->first, v.witness_uv->second};
  if (v.witness_t) w["t"] = *v.witness_t;
  if (v.witness_index) w["index"] = *v.witness_index;
  return w;
}

}  // namespace

std::string dump_json_17(const Json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  return out;
}

Json to_json(const ComparisonVerdict& verdict) {
  Json j;
  j["status"] = to_string(verdict.status);
  j["margin"] = verdict.margin;
  j["detail"] = verdict.detail;
  const Json w = witness_json(verdict);
  if (!w.empty()) j["witness"] = w;
  if (verdict.ball_radius) j["ball_radius"] = *verdict.ball_radius;
  return j;
}

Json to_json(const QuasiArithReport& report) {
  Json j;
  j["combined"] = to_json(report.combined);
  j["ratio_condition"] = to_json(report.ratio_condition);
  j["support_condition"] = to_json(report.support_condition);
  return j;
}

Json to_json(const OracleReport& report) {
  Json j;
  j["samples"] = report.samples;
  j["min_slack"] = report.min_slack;
  j["argmin"] = report.argmin;
  j["verdict"] = to_string(report.verdict);
  j["eval_failures"] = report.eval_failures;
  return j;
}

Json to_json(const ScenarioResult& result) {
  Json j;
  j["scenario"] = result.scenario;
  j["seed"] = result.seed;
  j["pass"] = result.pass;
  Json cases = Json::array();
  for (const ScenarioCase& c : result.cases) {
    Json cj;
    cj["name"] = c.name;
    cj["agree"] = c.agree;
    if (!c.note.empty()) cj["note"] = c.note;
    Json conds;
    for (const auto& [key, value] : c.conditions) conds[key] = value;
    cj["conditions"] = conds;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  return j;
}

Json to_json(const DiagonalDerivatives& derivs) {
  Json j;
  j["point"] = derivs.point;
  j["gradient"] = derivs.gradient;
  if (!derivs.hessian.empty()) j["hessian"] = derivs.hessian;
  return j;
}

Json to_json(const MixtureLimit& limit) {
  Json j;
  j["gammas"] = limit.gammas;
  j["quotients"] = limit.quotients;
  j["prediction"] = limit.prediction;
  return j;
}

}  // namespace meancomp

// Command-line front end: evaluate generalized means, run local/global
// comparisons, sweep Gini parameter regions, and run the verification
// scenarios.  All configuration comes from a JSON file; a few flags
// override individual fields.  Exit codes: 0 holds/success, 1 fails or
// violated (with a witness in the output), 2 input error, 3 numeric or
// capability error.

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "meancomp/errors.hpp"
#include "meancomp/json_io.hpp"

namespace {

using namespace meancomp;

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  uint64_t seed = 1;
  int jobs = 1;
  double tol_cmp = 1e-10;
  double tol_grad = 1e-9;
  int samples = 0;  // 0 = command defaults
};

void add_common(CLI::App* cmd, CommonArgs& args, bool config_required = true) {
  auto* opt = cmd->add_option("--config", args.config_path,
                              "JSON configuration file");
  if (config_required) opt->required();
  cmd->add_option("--out", args.out_path, "output path (default: stdout)");
  cmd->add_option("--format", args.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", args.seed, "seed for sampling (default 1)");
  cmd->add_option("--jobs", args.jobs, "worker threads for sweeps (default 1)");
  cmd->add_option("--tol-cmp", args.tol_cmp,
                  "comparison slack tolerance (default 1e-10)");
  cmd->add_option("--tol-grad", args.tol_grad,
                  "gradient equality tolerance (default 1e-9)");
  cmd->add_option("--samples", args.samples,
                  "oracle sample count for verify scenarios "
                  "(0 = scenario defaults)");
}

Json read_config(const CommonArgs& args) {
  if (args.config_path.empty()) return Json::object();
  std::ifstream in(args.config_path);
  if (!in) throw InputError("cannot open config file " + args.config_path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError(std::string("config is not valid JSON: ") + e.what());
  }
  return j;
}

void write_output(const CommonArgs& args, const std::string& text) {
  if (args.out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) throw InputError("cannot open output path " + args.out_path);
  out << text << "\n";
}

std::vector<double> load_vector(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw InputError(std::string("config: missing array '") + key + "'");
  }
  std::vector<double> x;
  for (const Json& v : j[key]) x.push_back(v.get<double>());
  return x;
}

int exit_code(Status status) {
  switch (status) {
    case Status::Holds: return 0;
    case Status::Fails: return 1;
    case Status::Inconclusive: return 0;
  }
  return 0;
}

// --------------------------------------------------------------- eval ----

int run_eval(const CommonArgs& args) {
  const Json cfg = read_config(args);
  if (!cfg.contains("mean")) throw InputError("eval config: missing 'mean'");
  const std::vector<double> x = load_vector(cfg, "x");
  const GeneralizedMean mean = load_mean(cfg["mean"]);

  Json out;
  out["command"] = "eval";
  if (cfg["mean"].contains("kind") && cfg["mean"]["kind"] == "gini") {
    const double p = cfg["mean"]["p"].get<double>();
    const double q = cfg["mean"]["q"].get<double>();
    out["value"] = gini_mean(p, q, mean.family, mean.measure, x);
    out["method"] = "gini_closed_form";
  } else {
    out["value"] = eval_implicit(mean, x);
    out["method"] = "implicit";
  }
  out["config"] = cfg;
  write_output(args, dump_json_17(out, 2));
  return 0;
}

// -------------------------------------------------------- derivatives ----

int run_derivatives(const CommonArgs& args) {
  const Json cfg = read_config(args);
  if (!cfg.contains("mean") || !cfg.contains("x0")) {
    throw InputError("derivatives config: need 'mean' and 'x0'");
  }
  const GeneralizedMean mean = load_mean(cfg["mean"]);
  const DiagonalDerivatives d =
      mean_diag_derivatives(mean, cfg["x0"].get<double>());
  Json out;
  out["command"] = "derivatives";
  out["result"] = to_json(d);
  out["config"] = cfg;
  write_output(args, dump_json_17(out, 2));
  return 0;
}

// ------------------------------------------------------------- lemma2 ----

int run_lemma2(const CommonArgs& args) {
  const Json cfg = read_config(args);
  for (const char* key : {"pair", "family", "t0", "nu", "x"}) {
    if (!cfg.contains(key)) {
      throw InputError(std::string("lemma2 config: missing '") + key + "'");
    }
  }
  const ChebyshevPair pair = load_pair(cfg["pair"]);
  const MeanFamily fam = load_family(cfg["family"]);
  const ProbabilityMeasure nu = load_measure(cfg["nu"]);
  const std::vector<double> x = load_vector(cfg, "x");
  Param t0;
  if (cfg["t0"].is_number()) {
    t0 = {cfg["t0"].get<double>()};
  } else {
    for (const Json& c : cfg["t0"]) t0.push_back(c.get<double>());
  }
  std::vector<double> gammas;
  if (cfg.contains("gammas")) gammas = load_vector(cfg, "gammas");
  const MixtureLimit lim = dirac_mixture_limit(
      pair, fam, t0, attach_carrier(nu, fam.carrier), x, gammas);
  Json out;
  out["command"] = "lemma2";
  out["result"] = to_json(lim);
  out["config"] = cfg;
  write_output(args, dump_json_17(out, 2));
  return 0;
}

// ------------------------------------------------------ compare-local ----

int run_compare_local(const CommonArgs& args) {
  const Json cfg = read_config(args);
  if (!cfg.contains("M") || !cfg.contains("N") || !cfg.contains("x0")) {
    throw InputError("compare-local config: need 'M', 'N', 'x0'");
  }
  const GeneralizedMean M = load_mean(cfg["M"]);
  const GeneralizedMean N = load_mean(cfg["N"]);
  Neighborhood nbhd;
  if (cfg.contains("radius")) nbhd.radius = cfg["radius"].get<double>();
  if (cfg.contains("samples")) nbhd.samples = cfg["samples"].get<int>();
  const ComparisonVerdict v = local_verdict(M, N, cfg["x0"].get<double>(),
                                            nbhd, args.tol_grad, args.tol_cmp);
  Json out;
  out["command"] = "compare-local";
  out["verdict"] = to_json(v);
  out["config"] = cfg;
  write_output(args, dump_json_17(out, 2));
  return exit_code(v.status);
}

// ----------------------------------------------------- compare-global ----

int run_compare_global(const CommonArgs& args) {
  const Json cfg = read_config(args);
  if (!cfg.contains("M") || !cfg.contains("N")) {
    throw InputError("compare-global config: need pair descriptors 'M', 'N'");
  }
  if (!cfg.contains("family")) {
    throw InputError("compare-global config: need 'family'");
  }
  const MeanFamily fam = load_family(cfg["family"]);
  Interval domain{0.0, std::numeric_limits<double>::infinity()};
  if (cfg.contains("domain")) domain = load_interval(cfg["domain"]);

  const bool both_gini = cfg["M"].contains("kind") &&
                         cfg["M"]["kind"] == "gini" &&
                         cfg["N"].contains("kind") && cfg["N"]["kind"] == "gini";
  ComparisonVerdict v;
  Json out;
  out["command"] = "compare-global";
  if (both_gini) {
    double ratio_sup;
    if (cfg.contains("ratio_sup")) {
      ratio_sup = cfg["ratio_sup"].is_string()
                      ? std::numeric_limits<double>::infinity()
                      : cfg["ratio_sup"].get<double>();
    } else {
      ratio_sup = family_ratio_sup(fam, domain);
    }
    out["ratio_sup"] = ratio_sup;
    v = gini_global(cfg["M"]["p"].get<double>(), cfg["M"]["q"].get<double>(),
                    cfg["N"]["p"].get<double>(), cfg["N"]["q"].get<double>(),
                    ratio_sup);
  } else {
    GlobalSampling sampling;
    v = global_condition_iii(load_pair(cfg["M"]), load_pair(cfg["N"]), fam,
                             domain, sampling, args.tol_cmp);
  }
  out["verdict"] = to_json(v);
  out["config"] = cfg;
  write_output(args, dump_json_17(out, 2));
  return exit_code(v.status);
}

// -------------------------------------------------------- gini-region ----

int run_gini_region(const CommonArgs& args) {
  const Json cfg = read_config(args);
  for (const char* key : {"p_min", "p_max", "q_min", "q_max", "step", "r", "s"}) {
    if (!cfg.contains(key)) {
      throw InputError(std::string("gini-region config: missing '") + key + "'");
    }
  }
  const double p_min = cfg["p_min"].get<double>();
  const double p_max = cfg["p_max"].get<double>();
  const double q_min = cfg["q_min"].get<double>();
  const double q_max = cfg["q_max"].get<double>();
  const double step = cfg["step"].get<double>();
  const double r = cfg["r"].get<double>();
  const double s = cfg["s"].get<double>();
  double ratio_sup = std::numeric_limits<double>::infinity();
  if (cfg.contains("ratio_sup") && cfg["ratio_sup"].is_number()) {
    ratio_sup = cfg["ratio_sup"].get<double>();
  }
  if (!(step > 0.0)) throw InputError("gini-region config: step must be > 0");

  std::vector<double> ps, qs;
  for (double p = p_min; p <= p_max + 1e-12; p += step) ps.push_back(p);
  for (double q = q_min; q <= q_max + 1e-12; q += step) qs.push_back(q);

  struct Row {
    double p, q;
    ComparisonVerdict verdict;
  };
  std::vector<Row> rows(ps.size() * qs.size());
  const int jobs = std::max(1, args.jobs);
  std::vector<std::thread> workers;
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next.fetch_add(1); i < rows.size();
         i = next.fetch_add(1)) {
      const double p = ps[i / qs.size()];
      const double q = qs[i % qs.size()];
      rows[i] = Row{p, q, gini_global(p, q, r, s, ratio_sup)};
    }
  };
  for (int w = 1; w < jobs; ++w) workers.emplace_back(work);
  work();
  for (auto& t : workers) t.join();

  if (args.format == "csv") {
    std::string csv = "p,q,r,s,status,margin\n";
    char buf[64];
    for (const Row& row : rows) {
      auto num = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        csv += buf;
      };
      num(row.p);
      csv += ",";
      num(row.q);
      csv += ",";
      num(r);
      csv += ",";
      num(s);
      csv += ",";
      csv += to_string(row.verdict.status);
      csv += ",";
      num(row.verdict.margin);
      csv += "\n";
    }
    csv.pop_back();  // write_output appends the final newline
    write_output(args, csv);
  } else {
    Json out;
    out["command"] = "gini-region";
    Json arr = Json::array();
    for (const Row& row : rows) {
      Json rj;
      rj["p"] = row.p;
      rj["q"] = row.q;
      rj["r"] = r;
      rj["s"] = s;
      rj["status"] = to_string(row.verdict.status);
      rj["margin"] = row.verdict.margin;
      arr.push_back(std::move(rj));
    }
    out["rows"] = std::move(arr);
    out["config"] = cfg;
    write_output(args, dump_json_17(out, 2));
  }
  return 0;
}

// ------------------------------------------------------------- verify ----

int run_verify(const CommonArgs& args) {
  Json out;
  out["command"] = "verify";
  out["seed"] = args.seed;
  Json scenarios = Json::array();
  bool all_pass = true;
  for (const std::string& name : scenario_names()) {
    const ScenarioResult result = run_scenario(name, args.seed, args.samples);
    all_pass = all_pass && result.pass;
    scenarios.push_back(to_json(result));
  }
  out["scenarios"] = std::move(scenarios);
  out["pass"] = all_pass;
  write_output(args, dump_json_17(out, 2));
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "meancomp: construction and comparison of generalized "
      "Bajraktarevic means"};
  app.require_subcommand(1);

  CommonArgs eval_args, deriv_args, lemma2_args, local_args, global_args,
      region_args, verify_args;

  auto* cmd_eval =
      app.add_subcommand("eval", "evaluate a generalized mean at a point");
  add_common(cmd_eval, eval_args);
  auto* cmd_deriv = app.add_subcommand(
      "derivatives", "diagonal gradient and Hessian of a mean");
  add_common(cmd_deriv, deriv_args);
  auto* cmd_lemma2 = app.add_subcommand(
      "lemma2", "difference quotients of Dirac-mixture perturbations "
                "against their closed-form limit");
  add_common(cmd_lemma2, lemma2_args);
  auto* cmd_local = app.add_subcommand(
      "compare-local", "local comparison verdict at a diagonal point");
  add_common(cmd_local, local_args);
  auto* cmd_global = app.add_subcommand(
      "compare-global", "measure-free global comparison verdict");
  add_common(cmd_global, global_args);
  auto* cmd_region = app.add_subcommand(
      "gini-region", "sweep a Gini parameter grid against a fixed pair");
  add_common(cmd_region, region_args);
  auto* cmd_verify = app.add_subcommand(
      "verify", "run the theorem-equivalence scenario suite");
  add_common(cmd_verify, verify_args, /*config_required=*/false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_eval->parsed()) return run_eval(eval_args);
    if (cmd_deriv->parsed()) return run_derivatives(deriv_args);
    if (cmd_lemma2->parsed()) return run_lemma2(lemma2_args);
    if (cmd_local->parsed()) return run_compare_local(local_args);
    if (cmd_global->parsed()) return run_compare_global(global_args);
    if (cmd_region->parsed()) return run_gini_region(region_args);
    if (cmd_verify->parsed()) return run_verify(verify_args);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

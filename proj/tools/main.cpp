// resroc: ROC analysis under the resilience (constant reversed-hazard-ratio)
// family, with empirical, binormal, and Lehmann comparators and a Monte
// Carlo study engine.
//
// Machine output (JSON or CSV) goes to stdout or --out; human-readable
// summaries go to stderr. Exit status: 0 on success, 2 when any selected
// method or model failed to estimate, other nonzero for input problems.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "resroc/errors.hpp"
#include "resroc/io.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitEstimation = 2;

struct InputArgs {
  std::string input;
  std::string negative;
  std::string positive;
};

void add_input_options(CLI::App* cmd, InputArgs& args) {
  auto* input = cmd->add_option("input,--input", args.input,
                                "CSV file with a score,label header (label 0=negative, 1=positive)");
  auto* neg = cmd->add_option("--negative", args.negative,
                              "score file for the negative group (two-file mode)");
  auto* pos = cmd->add_option("--positive", args.positive,
                              "score file for the positive group (two-file mode)");
  neg->needs(pos);
  pos->needs(neg);
  input->excludes(neg);
  input->excludes(pos);
}

resroc::ParsedScores load_scores(const InputArgs& args) {
  if (!args.input.empty()) return resroc::parse_scores_file(args.input);
  if (!args.negative.empty()) return resroc::parse_group_files(args.negative, args.positive);
  throw CLI::ValidationError("provide an input CSV or --negative/--positive files");
}

std::vector<resroc::Method> parse_methods(const std::string& spec) {
  std::vector<resroc::Method> methods;
  std::size_t begin = 0;
  while (begin <= spec.size()) {
    std::size_t end = spec.find(',', begin);
    if (end == std::string::npos) end = spec.size();
    const std::string name = spec.substr(begin, end - begin);
    if (name == "pl") {
      methods.push_back(resroc::Method::pl);
    } else if (name == "mw") {
      methods.push_back(resroc::Method::mw);
    } else if (name == "rojo") {
      methods.push_back(resroc::Method::rojo);
    } else if (!name.empty()) {
      throw CLI::ValidationError("--methods", "unknown method '" + name +
                                                  "' (expected pl, mw, rojo)");
    }
    begin = end + 1;
  }
  if (methods.empty()) throw CLI::ValidationError("--methods", "no methods selected");
  return methods;
}

resroc::Transform parse_transform(const std::string& name) {
  if (name.empty() || name == "none") return resroc::Transform::none;
  if (name == "yeo-johnson") return resroc::Transform::yeo_johnson;
  throw CLI::ValidationError("--transform", "unknown transform '" + name +
                                                "' (expected yeo-johnson)");
}

resroc::OutputFormat parse_format(const std::string& name) {
  if (name == "json") return resroc::OutputFormat::json;
  if (name == "csv") return resroc::OutputFormat::csv;
  throw CLI::ValidationError("--format", "unknown format '" + name +
                                             "' (expected json or csv)");
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << payload;
}

std::vector<std::pair<int, int>> parse_sizes(const std::vector<std::string>& specs) {
  std::vector<std::pair<int, int>> pairs;
  for (const std::string& s : specs) {
    const std::size_t sep = s.find('x');
    if (sep == std::string::npos) {
      throw CLI::ValidationError("--sizes", "expected MxN, got '" + s + "'");
    }
    try {
      pairs.emplace_back(std::stoi(s.substr(0, sep)), std::stoi(s.substr(sep + 1)));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--sizes", "expected MxN, got '" + s + "'");
    }
  }
  return pairs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ROC analysis under the resilience family R(t) = 1 - (1-t)^theta"};
  app.require_subcommand(1);

  // ---- estimate ----
  auto* cmd_estimate = app.add_subcommand(
      "estimate", "Estimate theta, AUC, Youden index and cutpoint from scores");
  InputArgs est_input;
  add_input_options(cmd_estimate, est_input);
  double est_alpha = 0.05;
  std::string est_methods = "pl,mw,rojo";
  bool est_enforce = false;
  std::string est_transform;
  std::string est_format = "json";
  std::string est_out;
  cmd_estimate->add_option("--alpha", est_alpha, "two-sided interval level (default 0.05)");
  cmd_estimate->add_option("--methods", est_methods, "comma list of pl,mw,rojo");
  cmd_estimate->add_flag("--enforce-family", est_enforce,
                         "clamp estimates below theta=1 to the family boundary");
  cmd_estimate->add_option("--transform", est_transform,
                           "apply yeo-johnson to the pooled scores first");
  cmd_estimate->add_option("--format", est_format, "json or csv (default json)");
  cmd_estimate->add_option("--out", est_out, "write machine output to a file");

  // ---- diagnose ----
  auto* cmd_diagnose = app.add_subcommand(
      "diagnose", "Model-checking report: dominance, log(-log) series, constancy score");
  InputArgs diag_input;
  add_input_options(cmd_diagnose, diag_input);
  std::string diag_transform;
  std::string diag_format = "json";
  std::string diag_out;
  cmd_diagnose->add_option("--transform", diag_transform,
                           "apply yeo-johnson to the pooled scores first");
  cmd_diagnose->add_option("--format", diag_format, "json or csv (default json)");
  cmd_diagnose->add_option("--out", diag_out, "write machine output to a file");

  // ---- roc-points ----
  auto* cmd_roc = app.add_subcommand(
      "roc-points", "Fitted ROC curves on a 1001-point grid for plotting");
  InputArgs roc_input;
  add_input_options(cmd_roc, roc_input);
  double roc_alpha = 0.05;
  std::string roc_methods = "pl,mw,rojo";
  std::string roc_transform;
  std::string roc_format = "csv";
  std::string roc_out;
  cmd_roc->add_option("--alpha", roc_alpha, "interval level used by the fits");
  cmd_roc->add_option("--methods", roc_methods, "resilience curves to include (pl,mw,rojo)");
  cmd_roc->add_option("--transform", roc_transform,
                      "apply yeo-johnson to the pooled scores first");
  cmd_roc->add_option("--format", roc_format, "csv or json (default csv)");
  cmd_roc->add_option("--out", roc_out, "write machine output to a file");

  // ---- simulate ----
  auto* cmd_simulate = app.add_subcommand(
      "simulate", "Monte Carlo study of the three estimators on generalized "
                  "exponential samples");
  resroc::StudyConfig study;
  std::vector<std::string> sim_sizes;
  std::string sim_methods = "pl,mw,rojo";
  std::string sim_format = "csv";
  std::string sim_out;
  cmd_simulate->add_option("--theta", study.theta_values,
                           "true theta values (default 2 4 6)")
      ->delimiter(',');
  cmd_simulate->add_option("--sizes", sim_sizes,
                           "group sizes as MxN (default 60x60 60x80 60x100)")
      ->delimiter(',');
  cmd_simulate->add_option("--reps", study.replications,
                           "replications per cell (default 10000)");
  cmd_simulate->add_option("--alpha", study.alpha, "interval level (default 0.05)");
  cmd_simulate->add_option("--seed", study.seed, "stream seed (default pinned)");
  cmd_simulate->add_option("--methods", sim_methods, "comma list of pl,mw,rojo");
  cmd_simulate->add_option("--threads", study.threads,
                           "worker threads, 0 = hardware (results identical either way)");
  cmd_simulate->add_option("--format", sim_format, "csv or json (default csv)");
  cmd_simulate->add_option("--out", sim_out, "write machine output to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_estimate->parsed()) {
      const resroc::ParsedScores scores = load_scores(est_input);
      resroc::EstimateOptions options;
      options.alpha = est_alpha;
      options.methods = parse_methods(est_methods);
      options.enforce_family = est_enforce;
      options.transform = parse_transform(est_transform);
      const resroc::EstimateResult result = resroc::run_estimate(scores.data, options);
      emit(parse_format(est_format) == resroc::OutputFormat::json ? resroc::to_json(result)
                                                                  : resroc::to_csv(result),
           est_out);
      std::cerr << resroc::to_table(result);
      return result.any_error() ? kExitEstimation : 0;
    }
    if (cmd_diagnose->parsed()) {
      const resroc::ParsedScores scores = load_scores(diag_input);
      const resroc::DiagnoseResult result =
          resroc::run_diagnose(scores.data, parse_transform(diag_transform));
      emit(parse_format(diag_format) == resroc::OutputFormat::json
               ? resroc::to_json(result)
               : resroc::to_csv(result),
           diag_out);
      std::cerr << resroc::to_table(result);
      return 0;
    }
    if (cmd_roc->parsed()) {
      const resroc::ParsedScores scores = load_scores(roc_input);
      resroc::RocPointsOptions options;
      options.alpha = roc_alpha;
      options.methods = parse_methods(roc_methods);
      options.transform = parse_transform(roc_transform);
      const resroc::RocPointsResult result = resroc::run_roc_points(scores.data, options);
      emit(parse_format(roc_format) == resroc::OutputFormat::json
               ? resroc::to_json(result)
               : resroc::to_csv(result),
           roc_out);
      for (const auto& f : result.failed) {
        std::cerr << f.model << ": " << f.error << "\n";
      }
      return result.any_error() ? kExitEstimation : 0;
    }
    // simulate
    if (!sim_sizes.empty()) study.size_pairs = parse_sizes(sim_sizes);
    study.methods = parse_methods(sim_methods);
    const resroc::SimulationReport report = resroc::run_study(study);
    emit(parse_format(sim_format) == resroc::OutputFormat::json
             ? resroc::to_json(report, study)
             : resroc::to_csv(report, study),
         sim_out);
    std::cerr << resroc::to_table(report, study);
    return 0;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const resroc::EstimationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEstimation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

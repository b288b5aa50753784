#include "resroc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "resroc/errors.hpp"

namespace resroc {

using nlohmann::json;

// ==================== number formatting ====================

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

std::string fixed4(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return buf;
}

// CSV quoting for free-text fields (warnings, errors).
std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

// ==================== CSV ingestion ====================

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_score_field(const std::string& field, std::size_t line_no) {
  const std::string t = trimmed(field);
  if (t.empty()) throw MalformedRowError(line_no, "empty score field");
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) {
    throw MalformedRowError(line_no, "score is not a number: '" + t + "'");
  }
  if (!std::isfinite(value)) {
    throw MalformedRowError(line_no, "score is not finite: '" + t + "'");
  }
  return value;
}

int parse_label_field(const std::string& field, std::size_t line_no) {
  const std::string t = trimmed(field);
  if (t == "0") return 0;
  if (t == "1") return 1;
  throw NonBinaryLabelError(line_no, "label must be 0 or 1, got '" + t + "'");
}

std::int64_t count_cross_group_ties(const TwoSampleData& data) {
  std::vector<double> xs = data.x;
  std::vector<double> ys = data.y;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::int64_t pairs = 0;
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i] < ys[j]) {
      ++i;
    } else if (ys[j] < xs[i]) {
      ++j;
    } else {
      const double v = xs[i];
      std::size_t ci = 0, cj = 0;
      while (i < xs.size() && xs[i] == v) ++i, ++ci;
      while (j < ys.size() && ys[j] == v) ++j, ++cj;
      pairs += static_cast<std::int64_t>(ci) * static_cast<std::int64_t>(cj);
    }
  }
  return pairs;
}

}  // namespace

ParsedScores parse_scores(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw MalformedRowError(1, "empty input");
  ++line_no;
  strip_cr(line);
  // Tolerate a UTF-8 byte-order mark before the header.
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  if (trimmed(line) != "score,label") {
    throw MalformedRowError(1, "header must be 'score,label', got '" + line + "'");
  }

  ParsedScores out;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (trimmed(line).empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw MalformedRowError(line_no, "expected 'score,label', got '" + line + "'");
    }
    if (line.find(',', comma + 1) != std::string::npos) {
      throw MalformedRowError(line_no, "too many fields: '" + line + "'");
    }
    const double score = parse_score_field(line.substr(0, comma), line_no);
    const int label = parse_label_field(line.substr(comma + 1), line_no);
    if (label == 0) {
      out.data.x.push_back(score);
    } else {
      out.data.y.push_back(score);
    }
  }
  if (out.data.x.empty()) throw EmptyGroupError("no rows with label 0 (negative group)");
  if (out.data.y.empty()) throw EmptyGroupError("no rows with label 1 (positive group)");
  out.cross_group_tie_pairs = count_cross_group_ties(out.data);
  return out;
}

ParsedScores parse_scores_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_scores(in);
}

namespace {

std::vector<double> parse_score_column(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (first) {
      if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
      first = false;
      // Allow the labeled-CSV header here so the same files work in both modes.
      if (trimmed(line) == "score,label" || trimmed(line) == "score") continue;
    }
    if (trimmed(line).empty()) continue;
    const std::size_t comma = line.find(',');
    const std::string field = comma == std::string::npos ? line : line.substr(0, comma);
    out.push_back(parse_score_field(field, line_no));
  }
  return out;
}

}  // namespace

ParsedScores parse_group_files(const std::string& negative_path,
                               const std::string& positive_path) {
  ParsedScores out;
  out.data.x = parse_score_column(negative_path);
  out.data.y = parse_score_column(positive_path);
  if (out.data.x.empty()) throw EmptyGroupError("negative file has no scores");
  if (out.data.y.empty()) throw EmptyGroupError("positive file has no scores");
  out.cross_group_tie_pairs = count_cross_group_ties(out.data);
  return out;
}

// ==================== estimate ====================

bool EstimateResult::any_error() const {
  return std::any_of(methods.begin(), methods.end(),
                     [](const MethodResult& r) { return !r.error.empty(); });
}

namespace {

std::optional<TransformInfo> apply_transform(TwoSampleData& data, Transform transform) {
  if (transform == Transform::none) return std::nullopt;
  std::vector<double> pooled = data.x;
  pooled.insert(pooled.end(), data.y.begin(), data.y.end());
  const YeoJohnsonLambda fit = yeo_johnson_fit(pooled);
  data.x = yeo_johnson_apply(data.x, fit.lambda);
  data.y = yeo_johnson_apply(data.y, fit.lambda);
  return TransformInfo{fit.lambda, fit.loglik, fit.boundary};
}

// Family clamp for a finished report: the estimate is pulled to the
// boundary and every derived quantity is rebuilt there, so the report stays
// internally consistent. The Wald test keeps the unrestricted statistic;
// the restriction is a reporting convention, not evidence about the null.
InferenceReport clamp_report(InferenceReport report, bool enforce) {
  const bool was_below = report.estimate.theta_hat < 1.0;
  report.estimate = clamp_to_family(std::move(report.estimate), enforce);
  if (enforce && was_below) {
    report.tau_hat = 0.5;
    report.ci_tau.lo = std::max(report.ci_tau.lo, 0.5);
    report.ci_tau.hi = std::max(report.ci_tau.hi, 0.5);
    report.youden.reset();
  }
  return report;
}

}  // namespace

EstimateResult run_estimate(const TwoSampleData& input, const EstimateOptions& options) {
  validate(input);
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (options.methods.empty()) throw std::invalid_argument("no methods selected");

  TwoSampleData data = input;
  EstimateResult result;
  result.transform = apply_transform(data, options.transform);
  result.m = data.x.size();
  result.n = data.y.size();
  result.alpha = options.alpha;
  result.enforce_family = options.enforce_family;
  result.tie_pairs = count_cross_group_ties(data);
  result.dominance = dominance_check(data);

  for (Method method : options.methods) {
    MethodResult mr;
    mr.method = method;
    try {
      InferenceReport report;
      switch (method) {
        case Method::pl:
          report = pl_estimate(data, options.alpha);
          break;
        case Method::mw:
          report = mw_estimate(data, options.alpha);
          break;
        case Method::rojo:
          report = rojo_estimate(data, options.alpha);
          break;
      }
      if (result.dominance.fraction_satisfied < 1.0) {
        report.estimate.warnings.push_back(
            "stochastic dominance violated at " +
            fixed4(100.0 * (1.0 - result.dominance.fraction_satisfied)) +
            "% of pooled values (max excess " + fixed4(result.dominance.max_violation) +
            "); the one-parameter curve may fit poorly");
      }
      mr.report = clamp_report(std::move(report), options.enforce_family);
    } catch (const EstimationError& e) {
      mr.error = e.what();
    }
    result.methods.push_back(std::move(mr));
  }
  return result;
}

// ==================== diagnose ====================

DiagnoseResult run_diagnose(const TwoSampleData& input, Transform transform) {
  validate(input);
  TwoSampleData data = input;
  DiagnoseResult result;
  result.transform = apply_transform(data, transform);
  result.m = data.x.size();
  result.n = data.y.size();
  result.dominance = dominance_check(data);
  result.negative_series = loglog_series(ecdf(data.x), Group::negative);
  result.positive_series = loglog_series(ecdf(data.y), Group::positive);
  result.constancy = loglog_constancy(data);
  return result;
}

// ==================== roc-points ====================

RocPointsResult run_roc_points(const TwoSampleData& input, const RocPointsOptions& options) {
  validate(input);
  TwoSampleData data = input;
  apply_transform(data, options.transform);

  RocPointsResult result;
  result.grid.reserve(1001);
  for (int i = 0; i <= 1000; ++i) {
    result.grid.push_back(static_cast<double>(i) / 1000.0);
  }

  const auto add_curve = [&](const std::string& model, auto&& eval) {
    try {
      RocPointsResult::Column col;
      col.model = model;
      col.values.reserve(result.grid.size());
      for (double t : result.grid) col.values.push_back(eval(t));
      result.columns.push_back(std::move(col));
    } catch (const std::exception& e) {
      result.failed.push_back({model, e.what()});
    }
  };

  for (Method method : options.methods) {
    const std::string model = "resilience_" + std::string(method_name(method));
    try {
      InferenceReport report;
      switch (method) {
        case Method::pl:
          report = pl_estimate(data, options.alpha);
          break;
        case Method::mw:
          report = mw_estimate(data, options.alpha);
          break;
        case Method::rojo:
          report = rojo_estimate(data, options.alpha);
          break;
      }
      const double theta = report.estimate.theta_hat;
      add_curve(model, [theta](double t) { return roc_value(theta, t); });
    } catch (const std::exception& e) {
      result.failed.push_back({model, e.what()});
    }
  }

  {
    const StepFunction f0 = ecdf(data.x);
    const StepFunction fn = ecdf(data.y);
    add_curve("empirical",
              [&](double t) { return empirical_roc_value(f0, fn, t); });
  }
  try {
    const BinormalFit fit = binormal_fit(data);
    add_curve("binormal", [&](double t) { return binormal_roc(fit, t); });
  } catch (const std::exception& e) {
    result.failed.push_back({"binormal", e.what()});
  }
  try {
    const LehmannGamma gamma = lehmann_estimate(data);
    add_curve("lehmann", [&](double t) { return lehmann_roc(gamma.gamma, t); });
  } catch (const std::exception& e) {
    result.failed.push_back({"lehmann", e.what()});
  }
  return result;
}

// ==================== JSON serialization ====================

namespace {

json ci_json(const ConfidenceInterval& ci) { return json{{"lo", ci.lo}, {"hi", ci.hi}}; }

json report_json(const InferenceReport& r) {
  json j;
  j["theta_hat"] = r.estimate.theta_hat;
  j["se_theta"] = r.estimate.se_theta;
  j["ci_theta"] = ci_json(r.estimate.ci_theta);
  j["alpha"] = r.estimate.alpha;
  j["clamped"] = r.estimate.clamped;
  j["warnings"] = r.estimate.warnings;
  j["tau_hat"] = r.tau_hat;
  j["ci_tau"] = ci_json(r.ci_tau);
  if (r.youden) {
    j["youden"] = {{"value", r.youden->value},
                   {"ci", ci_json(r.youden->ci)},
                   {"cutpoint", {{"fpr", r.youden->cutpoint.fpr},
                                 {"tpr", r.youden->cutpoint.tpr}}}};
  } else {
    j["youden"] = nullptr;
  }
  j["wald_z"] = r.wald_z;
  j["wald_p"] = r.wald_p;
  return j;
}

json transform_json(const std::optional<TransformInfo>& t) {
  if (!t) return nullptr;
  return json{{"name", "yeo-johnson"},
              {"lambda", t->lambda},
              {"loglik", t->loglik},
              {"boundary", t->boundary}};
}

}  // namespace

std::string to_json(const EstimateResult& result) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "estimate";
  j["m"] = result.m;
  j["n"] = result.n;
  j["tie_pairs"] = result.tie_pairs;
  j["alpha"] = result.alpha;
  j["enforce_family"] = result.enforce_family;
  j["transform"] = transform_json(result.transform);
  j["dominance"] = {{"fraction_satisfied", result.dominance.fraction_satisfied},
                    {"max_violation", result.dominance.max_violation}};
  json methods = json::array();
  for (const auto& mr : result.methods) {
    json m;
    m["method"] = std::string(method_name(mr.method));
    if (mr.report) {
      m["report"] = report_json(*mr.report);
    } else {
      m["error"] = mr.error;
    }
    methods.push_back(std::move(m));
  }
  j["methods"] = std::move(methods);
  return j.dump(2) + "\n";
}

std::string to_json(const DiagnoseResult& result) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "diagnose";
  j["m"] = result.m;
  j["n"] = result.n;
  j["transform"] = transform_json(result.transform);
  j["dominance"] = {{"fraction_satisfied", result.dominance.fraction_satisfied},
                    {"max_violation", result.dominance.max_violation}};
  const auto series_json = [](const DiagnosticSeries& s) {
    json points = json::array();
    for (const auto& [t, v] : s.points) points.push_back(json::array({t, v}));
    return points;
  };
  j["loglog"] = {{"negative", series_json(result.negative_series)},
                 {"positive", series_json(result.positive_series)}};
  j["constancy"] = {{"sd", result.constancy.sd}, {"points", result.constancy.points}};
  return j.dump(2) + "\n";
}

std::string to_json(const RocPointsResult& result) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "roc-points";
  j["t"] = result.grid;
  json curves = json::object();
  for (const auto& col : result.columns) curves[col.model] = col.values;
  j["curves"] = std::move(curves);
  json failed = json::array();
  for (const auto& f : result.failed) {
    failed.push_back({{"model", f.model}, {"error", f.error}});
  }
  j["failed"] = std::move(failed);
  return j.dump(2) + "\n";
}

std::string to_json(const SimulationReport& report, const StudyConfig& config) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "simulate";
  j["config"] = {{"theta", config.theta_values},
                 {"sizes", config.size_pairs},
                 {"replications", config.replications},
                 {"alpha", config.alpha},
                 {"seed", config.seed}};
  json rows = json::array();
  for (const auto& c : report.rows) {
    rows.push_back({{"theta", c.theta},
                    {"m", c.m},
                    {"n", c.n},
                    {"method", std::string(method_name(c.method))},
                    {"reps_used", c.reps_used},
                    {"failures", c.failures},
                    {"avg_theta", c.avg_theta},
                    {"sd_theta", c.sd_theta},
                    {"rmse_theta", c.rmse_theta},
                    {"coverage", c.coverage},
                    {"avg_tau", c.avg_tau},
                    {"avg_youden", c.avg_youden},
                    {"youden_count", c.youden_count}});
  }
  j["cells"] = std::move(rows);
  return j.dump(2) + "\n";
}

// ==================== CSV serialization ====================

std::string to_csv(const EstimateResult& result) {
  std::string out =
      "method,theta_hat,se_theta,ci_theta_lo,ci_theta_hi,tau_hat,ci_tau_lo,ci_tau_hi,"
      "youden,ci_youden_lo,ci_youden_hi,cutpoint_fpr,cutpoint_tpr,wald_z,wald_p,"
      "clamped,warnings,error\n";
  for (const auto& mr : result.methods) {
    out += std::string(method_name(mr.method));
    if (mr.report) {
      const InferenceReport& r = *mr.report;
      out += "," + format_double(r.estimate.theta_hat);
      out += "," + format_double(r.estimate.se_theta);
      out += "," + format_double(r.estimate.ci_theta.lo);
      out += "," + format_double(r.estimate.ci_theta.hi);
      out += "," + format_double(r.tau_hat);
      out += "," + format_double(r.ci_tau.lo);
      out += "," + format_double(r.ci_tau.hi);
      if (r.youden) {
        out += "," + format_double(r.youden->value);
        out += "," + format_double(r.youden->ci.lo);
        out += "," + format_double(r.youden->ci.hi);
        out += "," + format_double(r.youden->cutpoint.fpr);
        out += "," + format_double(r.youden->cutpoint.tpr);
      } else {
        out += ",,,,,";
      }
      out += "," + format_double(r.wald_z);
      out += "," + format_double(r.wald_p);
      out += r.estimate.clamped ? ",true" : ",false";
      out += "," + csv_quote(join(r.estimate.warnings, "; "));
      out += ",";
    } else {
      out += ",,,,,,,,,,,,,,,,," + csv_quote(mr.error);
    }
    out += "\n";
  }
  return out;
}

std::string to_csv(const DiagnoseResult& result) {
  std::string out = "series,t,value\n";
  out += "dominance_fraction,," + format_double(result.dominance.fraction_satisfied) + "\n";
  out += "max_violation,," + format_double(result.dominance.max_violation) + "\n";
  out += "loglog_sd,," + format_double(result.constancy.sd) + "\n";
  out += "loglog_points,," + std::to_string(result.constancy.points) + "\n";
  for (const auto& [t, v] : result.negative_series.points) {
    out += "loglog_negative," + format_double(t) + "," + format_double(v) + "\n";
  }
  for (const auto& [t, v] : result.positive_series.points) {
    out += "loglog_positive," + format_double(t) + "," + format_double(v) + "\n";
  }
  return out;
}

std::string to_csv(const RocPointsResult& result) {
  std::string out = "t";
  for (const auto& col : result.columns) out += "," + col.model;
  out += "\n";
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    out += format_double(result.grid[i]);
    for (const auto& col : result.columns) out += "," + format_double(col.values[i]);
    out += "\n";
  }
  return out;
}

std::string to_csv(const SimulationReport& report, const StudyConfig&) {
  std::string out =
      "theta,m,n,method,reps_used,failures,avg_theta,sd_theta,rmse_theta,coverage,"
      "avg_tau,avg_youden,youden_count\n";
  for (const auto& c : report.rows) {
    out += format_double(c.theta);
    out += "," + std::to_string(c.m);
    out += "," + std::to_string(c.n);
    out += "," + std::string(method_name(c.method));
    out += "," + std::to_string(c.reps_used);
    out += "," + std::to_string(c.failures);
    out += "," + format_double(c.avg_theta);
    out += "," + format_double(c.sd_theta);
    out += "," + format_double(c.rmse_theta);
    out += "," + format_double(c.coverage);
    out += "," + format_double(c.avg_tau);
    out += "," + format_double(c.avg_youden);
    out += "," + std::to_string(c.youden_count);
    out += "\n";
  }
  return out;
}

// ==================== tables ====================

std::string to_table(const EstimateResult& result) {
  std::ostringstream out;
  out << "Groups: m=" << result.m << " negative, n=" << result.n << " positive";
  if (result.tie_pairs > 0) out << " (" << result.tie_pairs << " cross-group tied pairs)";
  out << "\n";
  if (result.transform) {
    out << "Transform: yeo-johnson lambda=" << fixed4(result.transform->lambda)
        << (result.transform->boundary ? " (search boundary)" : "") << "\n";
  }
  out << "Dominance: fraction " << fixed4(result.dominance.fraction_satisfied)
      << ", max violation " << fixed4(result.dominance.max_violation) << "\n";
  const int level = static_cast<int>(std::lround(100.0 * (1.0 - result.alpha)));
  out << "\n";
  char line[160];
  std::snprintf(line, sizeof(line), "%-6s %9s %9s %21s %8s %8s %17s %8s %9s\n", "method",
                "theta", "se", (std::to_string(level) + "% CI(theta)").c_str(), "tau",
                "youden", "cutpoint", "wald_z", "wald_p");
  out << line;
  for (const auto& mr : result.methods) {
    if (!mr.report) {
      std::snprintf(line, sizeof(line), "%-6s  error: %s\n",
                    std::string(method_name(mr.method)).c_str(), mr.error.c_str());
      out << line;
      continue;
    }
    const InferenceReport& r = *mr.report;
    const std::string ci = "[" + fixed4(r.estimate.ci_theta.lo) + ", " +
                           fixed4(r.estimate.ci_theta.hi) + "]";
    const std::string youden = r.youden ? fixed4(r.youden->value) : "-";
    const std::string cut = r.youden ? "(" + fixed4(r.youden->cutpoint.fpr) + ", " +
                                           fixed4(r.youden->cutpoint.tpr) + ")"
                                     : "-";
    std::snprintf(line, sizeof(line), "%-6s %9s %9s %21s %8s %8s %17s %8s %9s\n",
                  std::string(method_name(mr.method)).c_str(),
                  fixed4(r.estimate.theta_hat).c_str(), fixed4(r.estimate.se_theta).c_str(),
                  ci.c_str(), fixed4(r.tau_hat).c_str(), youden.c_str(), cut.c_str(),
                  fixed4(r.wald_z).c_str(), fixed4(r.wald_p).c_str());
    out << line;
    if (r.estimate.clamped) {
      out << "       (clamped to the family boundary theta=1)\n";
    }
    for (const auto& w : r.estimate.warnings) out << "       warning: " << w << "\n";
  }
  return out.str();
}

std::string to_table(const DiagnoseResult& result) {
  std::ostringstream out;
  out << "Groups: m=" << result.m << " negative, n=" << result.n << " positive\n";
  if (result.transform) {
    out << "Transform: yeo-johnson lambda=" << fixed4(result.transform->lambda) << "\n";
  }
  out << "Stochastic dominance satisfied at " << fixed4(100.0 * result.dominance.fraction_satisfied)
      << "% of pooled values; max violation " << fixed4(result.dominance.max_violation) << "\n";
  out << "log(-log ECDF) difference: sd " << fixed4(result.constancy.sd) << " over "
      << result.constancy.points
      << " shared interior knots (small sd supports a constant-exponent fit)\n";
  out << "Series points: negative " << result.negative_series.points.size() << ", positive "
      << result.positive_series.points.size() << "\n";
  return out.str();
}

std::string to_table(const SimulationReport& report, const StudyConfig& config) {
  std::ostringstream out;
  char line[200];
  std::snprintf(line, sizeof(line), "%7s %5s %5s %-6s %9s %9s %9s %9s %9s %9s %9s\n",
                "theta", "m", "n", "method", "avg", "sd", "rmse", "coverage", "avg_tau",
                "avg_J", "failures");
  out << line;
  double prev_theta = -1.0;
  int prev_m = -1, prev_n = -1;
  for (const auto& c : report.rows) {
    const bool new_cell = c.theta != prev_theta || c.m != prev_m || c.n != prev_n;
    if (new_cell && prev_m != -1) out << "\n";
    prev_theta = c.theta;
    prev_m = c.m;
    prev_n = c.n;
    std::snprintf(line, sizeof(line), "%7s %5d %5d %-6s %9s %9s %9s %9s %9s %9s %9lld\n",
                  fixed4(c.theta).c_str(), c.m, c.n,
                  std::string(method_name(c.method)).c_str(), fixed4(c.avg_theta).c_str(),
                  fixed4(c.sd_theta).c_str(), fixed4(c.rmse_theta).c_str(),
                  fixed4(c.coverage).c_str(), fixed4(c.avg_tau).c_str(),
                  fixed4(c.avg_youden).c_str(), static_cast<long long>(c.failures));
    out << line;
  }
  out << "\nreplications=" << config.replications << " seed=" << config.seed
      << " elapsed=" << fixed4(report.elapsed_seconds) << "s\n";
  return out.str();
}

}  // namespace resroc

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "resroc/comparators.hpp"
#include "resroc/empirical.hpp"
#include "resroc/estimators.hpp"
#include "resroc/simulation.hpp"

namespace resroc {

// All JSON documents carry this top-level schema_version.
inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { json, csv };
enum class Transform { none, yeo_johnson };

// CSV ingestion. Input must start with a "score,label" header; labels are
// 0 (negative) or 1 (positive). Throws MalformedRowError /
// NonBinaryLabelError with 1-based line numbers, EmptyGroupError when a
// group ends up empty.
struct ParsedScores {
  TwoSampleData data;
  std::int64_t cross_group_tie_pairs = 0;
};
ParsedScores parse_scores(std::istream& in);
ParsedScores parse_scores_file(const std::string& path);
// Two-file variant: plain one-score-per-line files (or score,label CSVs
// whose labels are ignored) for each group.
ParsedScores parse_group_files(const std::string& negative_path,
                               const std::string& positive_path);

struct EstimateOptions {
  double alpha = 0.05;
  std::vector<Method> methods{Method::pl, Method::mw, Method::rojo};
  bool enforce_family = false;
  Transform transform = Transform::none;
};

struct TransformInfo {
  double lambda = 1.0;
  double loglik = 0.0;
  bool boundary = false;
};

struct MethodResult {
  Method method = Method::pl;
  std::optional<InferenceReport> report;
  std::string error;  // nonempty iff report is absent
};

struct EstimateResult {
  std::size_t m = 0;
  std::size_t n = 0;
  std::int64_t tie_pairs = 0;
  double alpha = 0.05;
  bool enforce_family = false;
  std::optional<TransformInfo> transform;
  DominanceReport dominance;
  std::vector<MethodResult> methods;

  bool any_error() const;
};

// One inference report per selected method; estimator errors are captured
// per method instead of aborting the others. When enforce_family is set,
// estimates below 1 are clamped and their derived quantities rebuilt at the
// boundary.
EstimateResult run_estimate(const TwoSampleData& data, const EstimateOptions& options);

struct DiagnoseResult {
  std::size_t m = 0;
  std::size_t n = 0;
  DominanceReport dominance;
  DiagnosticSeries negative_series;
  DiagnosticSeries positive_series;
  LogLogConstancy constancy;
  std::optional<TransformInfo> transform;
};

// Model-checking bundle: dominance report, both log(-log ECDF) series, and
// the constancy score of their difference. Propagates
// DegenerateSeriesError when a series has fewer than two usable points.
DiagnoseResult run_diagnose(const TwoSampleData& data,
                            Transform transform = Transform::none);

struct RocPointsOptions {
  double alpha = 0.05;
  std::vector<Method> methods{Method::pl, Method::mw, Method::rojo};
  Transform transform = Transform::none;
};

struct RocPointsResult {
  std::vector<double> grid;  // 0, 0.001, ..., 1
  struct Column {
    std::string model;  // resilience_pl, resilience_mw, resilience_rojo,
                        // empirical, binormal, lehmann
    std::vector<double> values;
  };
  std::vector<Column> columns;
  struct FailedModel {
    std::string model;
    std::string error;
  };
  std::vector<FailedModel> failed;

  bool any_error() const { return !failed.empty(); }
};

// Curve values for every selected model on the 1001-point grid; models that
// fail to fit are reported in failed without aborting the rest.
RocPointsResult run_roc_points(const TwoSampleData& data, const RocPointsOptions& options);

// Serializers. JSON carries full-precision numbers (shortest round-trip
// representation) and parses back to bit-identical doubles; CSV likewise
// prints shortest round-trip decimals. Tables round to 4 decimals for
// reading, and are the only place wall-clock time appears, keeping the
// machine formats byte-identical across reruns.
std::string to_json(const EstimateResult& result);
std::string to_csv(const EstimateResult& result);
std::string to_table(const EstimateResult& result);

std::string to_json(const DiagnoseResult& result);
std::string to_csv(const DiagnoseResult& result);
std::string to_table(const DiagnoseResult& result);

std::string to_json(const RocPointsResult& result);
std::string to_csv(const RocPointsResult& result);

std::string to_json(const SimulationReport& report, const StudyConfig& config);
std::string to_csv(const SimulationReport& report, const StudyConfig& config);
std::string to_table(const SimulationReport& report, const StudyConfig& config);

// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

}  // namespace resroc

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "resroc/estimators.hpp"
#include "resroc/rng.hpp"

namespace resroc {

// Generalized exponential distribution F(t) = (1 - exp(-lambda t))^theta on
// t > 0. Within this family the two-group ROC curve is exactly the
// resilience curve with parameter theta_y / theta_x.
struct GedParams {
  double lambda = 1.0;
  double theta = 1.0;
};

double ged_cdf(const GedParams& params, double t);
// Inverse CDF: -log1p(-u^(1/theta)) / lambda; round-trips ged_cdf to 1e-12.
double ged_quantile(const GedParams& params, double u);
std::vector<double> ged_sample(const GedParams& params, std::size_t size,
                               RngStream& stream);

// Seed every study shares unless the caller overrides it.
inline constexpr std::uint64_t kDefaultStudySeed = 7;

struct StudyConfig {
  std::vector<double> theta_values{2.0, 4.0, 6.0};
  std::vector<std::pair<int, int>> size_pairs{{60, 60}, {60, 80}, {60, 100}};
  int replications = 10000;
  double alpha = 0.05;
  std::uint64_t seed = kDefaultStudySeed;
  std::vector<Method> methods{Method::pl, Method::mw, Method::rojo};
  // Worker threads; 0 means one per hardware thread. The report is
  // bit-identical for every value.
  int threads = 0;
};

struct CellStats {
  double theta = 0.0;
  int m = 0;
  int n = 0;
  Method method = Method::pl;
  std::int64_t reps_used = 0;   // replications contributing to the moments
  std::int64_t failures = 0;    // replications where this method threw
  double avg_theta = 0.0;
  double sd_theta = 0.0;    // (R-1) divisor
  double rmse_theta = 0.0;  // R divisor
  double coverage = 0.0;    // fraction of CIs containing the true theta
  // Curve summaries implied by avg_theta, not averages of per-replication
  // values (the AUC estimate is unbiased, so its own average would hide the
  // bias these columns are meant to show).
  double avg_tau = 0.0;
  double avg_youden = 0.0;        // zero when avg_theta <= 1
  std::int64_t youden_count = 0;  // replications with theta_hat > 1
};

struct SimulationReport {
  std::vector<CellStats> rows;  // cell-major, methods in config order
  double elapsed_seconds = 0.0;
};

// Monte Carlo study: for each (theta, (m,n)) cell and replication, draw
// X ~ GED(1, 1) and Y ~ GED(1, theta), run each method, and aggregate.
// Replications that throw are excluded from the moments and counted.
// Streams are derived per (cell, replication), and reduction is ordered, so
// the report depends only on the config, never on thread count.
SimulationReport run_study(const StudyConfig& config);

}  // namespace resroc

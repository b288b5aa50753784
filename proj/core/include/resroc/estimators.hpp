#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resroc/empirical.hpp"
#include "resroc/model.hpp"

namespace resroc {

enum class Method { pl, mw, rojo };
std::string_view method_name(Method method);

// Cumulative group counts at the ordered distinct values of the pooled
// sample: at entry p, x_le = #{x <= w_p}, y_le = #{y <= w_p}. Observations
// tied at w_p share the entry; count records how many, so likelihood sums
// weight each entry by its multiplicity.
struct CombinedCounts {
  struct Entry {
    std::int64_t x_le = 0;
    std::int64_t y_le = 0;
    std::int64_t count = 1;
  };
  std::vector<Entry> entries;
  std::int64_t m = 0;
  std::int64_t n = 0;
};
CombinedCounts combined_counts(const TwoSampleData& data);

// Partial-likelihood score  n/theta - sum_p count_p * y_p / (x_p + y_p theta).
// When the data admit a root it is positive below and negative above it;
// away from the root the score is not globally monotone.
double pl_score(double theta, const CombinedCounts& counts);

// Observed information  n/theta^2 - sum_p count_p * y_p^2 / (x_p + y_p theta)^2,
// the negative derivative of pl_score. Must be positive at the root.
double pl_information(double theta, const CombinedCounts& counts);

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct ThetaEstimate {
  double theta_hat = 0.0;
  Method method = Method::pl;
  // Standard error of theta_hat itself (already divided by sqrt(m+n)).
  double se_theta = 0.0;
  ConfidenceInterval ci_theta;
  double alpha = 0.05;
  bool clamped = false;
  std::vector<std::string> warnings;
};

struct YoudenSummary {
  double value = 0.0;
  ConfidenceInterval ci;
  RocPoint cutpoint;
};

struct InferenceReport {
  ThetaEstimate estimate;
  double tau_hat = 0.0;
  ConfidenceInterval ci_tau;
  // Present only when theta_hat > 1; the Youden functional and its
  // maximizer are undefined below the chance diagonal.
  std::optional<YoudenSummary> youden;
  double wald_z = 0.0;  // (theta_hat - 1) / se_theta, null of a chance classifier
  double wald_p = 1.0;
};

// Midrank Mann-Whitney AUC: (#{x < y} + 0.5 #{x = y}) / (m n), counted in
// O((m+n) log(m+n)) by a merge over the sorted groups. tie_count is the
// number of cross-group tied pairs.
struct MwAuc {
  double value = 0.0;
  std::int64_t tie_count = 0;
};
MwAuc mw_auc(const TwoSampleData& data);

// Order-restricted AUC estimate: integral of the restricted negative-group
// CDF against the restricted positive-group CDF, with the integrand
// evaluated right-continuously at each jump. Accumulated in integer
// rationals, so it equals mw_auc bit-for-bit on stochastically ordered,
// cross-group-untied data.
double rojo_auc(const TwoSampleData& data);

// Maximum partial-likelihood estimate with observed-information standard
// error. Throws NoFiniteRootError when the score has no root in the search
// bracket (near-perfect separation in either direction) and
// DegenerateDataError when the pooled sample is a single tied value.
InferenceReport pl_estimate(const TwoSampleData& data, double alpha);

// Ratio estimate theta = tau/(1-tau) from the Mann-Whitney AUC, with
// standard errors from the asymptotic variance formulas evaluated at the
// estimate. Throws InfiniteThetaError at tau = 1, DegenerateTauError at 0.
InferenceReport mw_estimate(const TwoSampleData& data, double alpha);

// Same construction from the order-restricted AUC.
InferenceReport rojo_estimate(const TwoSampleData& data, double alpha);

// Family restriction: estimates below 1 are reported with a warning, and
// pulled up to exactly 1 (CI truncated to match) when enforce is set.
ThetaEstimate clamp_to_family(ThetaEstimate est, bool enforce);

}  // namespace resroc

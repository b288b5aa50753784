#include "resroc/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "resroc/comparators.hpp"
#include "resroc/errors.hpp"

namespace resroc {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::pl:
      return "pl";
    case Method::mw:
      return "mw";
    case Method::rojo:
      return "rojo";
  }
  throw std::invalid_argument("unknown method");
}

CombinedCounts combined_counts(const TwoSampleData& data) {
  validate(data);
  std::vector<double> xs = data.x;
  std::vector<double> ys = data.y;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  CombinedCounts out;
  out.m = static_cast<std::int64_t>(xs.size());
  out.n = static_cast<std::int64_t>(ys.size());
  out.entries.reserve(xs.size() + ys.size());

  std::size_t i = 0, j = 0;
  while (i < xs.size() || j < ys.size()) {
    double v;
    if (j == ys.size() || (i < xs.size() && xs[i] <= ys[j])) {
      v = xs[i];
    } else {
      v = ys[j];
    }
    const std::size_t i0 = i, j0 = j;
    while (i < xs.size() && xs[i] == v) ++i;
    while (j < ys.size() && ys[j] == v) ++j;
    CombinedCounts::Entry e;
    e.x_le = static_cast<std::int64_t>(i);
    e.y_le = static_cast<std::int64_t>(j);
    e.count = static_cast<std::int64_t>((i - i0) + (j - j0));
    out.entries.push_back(e);
  }
  return out;
}

double pl_score(double theta, const CombinedCounts& counts) {
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");
  double sum = 0.0;
  for (const auto& e : counts.entries) {
    const double y = static_cast<double>(e.y_le);
    const double x = static_cast<double>(e.x_le);
    sum += static_cast<double>(e.count) * y / (x + y * theta);
  }
  return static_cast<double>(counts.n) / theta - sum;
}

double pl_information(double theta, const CombinedCounts& counts) {
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");
  double sum = 0.0;
  for (const auto& e : counts.entries) {
    const double y = static_cast<double>(e.y_le);
    const double x = static_cast<double>(e.x_le);
    const double denom = x + y * theta;
    sum += static_cast<double>(e.count) * y * y / (denom * denom);
  }
  return static_cast<double>(counts.n) / (theta * theta) - sum;
}

namespace {

std::vector<std::string> tie_warnings(std::int64_t tie_pairs) {
  std::vector<std::string> warnings;
  if (tie_pairs > 0) {
    warnings.push_back(std::to_string(tie_pairs) +
                       " cross-group tied pair(s); ties carry half credit in rank "
                       "statistics and share partial-likelihood risk sets");
  }
  return warnings;
}

// Everything downstream of (theta_hat, se_theta, tau_hat, se_tau) is common
// to the three methods.
InferenceReport finish_report(Method method, double theta_hat, double se_theta,
                              double tau_hat, double se_tau, double alpha,
                              std::vector<std::string> warnings) {
  const double z = normal_quantile(1.0 - alpha / 2.0);

  InferenceReport report;
  report.estimate.theta_hat = theta_hat;
  report.estimate.method = method;
  report.estimate.se_theta = se_theta;
  report.estimate.ci_theta = {theta_hat - z * se_theta, theta_hat + z * se_theta};
  report.estimate.alpha = alpha;
  report.estimate.warnings = std::move(warnings);

  report.tau_hat = tau_hat;
  report.ci_tau = {tau_hat - z * se_tau, tau_hat + z * se_tau};

  if (theta_hat > 1.0) {
    YoudenSummary youden;
    youden.value = youden_from_theta(theta_hat);
    const double slope = youden_slope(theta_hat);
    const double se_j = std::abs(slope) * se_theta;
    youden.ci = {youden.value - z * se_j, youden.value + z * se_j};
    youden.cutpoint = optimal_cutpoint(theta_hat);
    report.youden = youden;
  }

  report.wald_z = (theta_hat - 1.0) / se_theta;
  report.wald_p = 2.0 * normal_cdf(-std::abs(report.wald_z));
  return report;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
}

// Ratio-type report shared by the rank-based methods: theta = tau/(1-tau)
// with plug-in asymptotic standard errors.
InferenceReport ratio_report(Method method, double tau_hat, const TwoSampleData& data,
                             double alpha, std::vector<std::string> warnings) {
  if (tau_hat >= 1.0) {
    throw InfiniteThetaError("AUC estimate is 1 (perfect separation); theta is infinite");
  }
  if (tau_hat <= 0.0) {
    throw DegenerateTauError("AUC estimate is 0 (reversed separation)");
  }
  const double m = static_cast<double>(data.x.size());
  const double n = static_cast<double>(data.y.size());
  const double total = m + n;
  const double p_hat = m / total;
  const double theta_hat = tau_hat / (1.0 - tau_hat);
  const double se_theta = std::sqrt(sigma2_theta(theta_hat, p_hat) / total);
  const double se_tau = std::sqrt(sigma2_tau(theta_hat, p_hat) / total);
  return finish_report(method, theta_hat, se_theta, tau_hat, se_tau, alpha,
                       std::move(warnings));
}

}  // namespace

MwAuc mw_auc(const TwoSampleData& data) {
  const CombinedCounts counts = combined_counts(data);
  std::int64_t less = 0;
  std::int64_t ties = 0;
  std::int64_t prev_x = 0;
  std::int64_t prev_y = 0;
  for (const auto& e : counts.entries) {
    const std::int64_t dx = e.x_le - prev_x;
    const std::int64_t dy = e.y_le - prev_y;
    less += prev_x * dy;  // every x strictly below this value beats each new y
    ties += dx * dy;
    prev_x = e.x_le;
    prev_y = e.y_le;
  }
  MwAuc out;
  out.tie_count = ties;
  out.value = static_cast<double>(2 * less + ties) /
              static_cast<double>(2 * counts.m * counts.n);
  return out;
}

double rojo_auc(const TwoSampleData& data) {
  const CombinedCounts counts = combined_counts(data);
  const std::int64_t m = counts.m;
  const std::int64_t n = counts.n;
  const std::int64_t total = m + n;

  // All quantities are rationals over fixed denominators: the restricted
  // negative-group CDF over m*(m+n), the restricted positive-group CDF over
  // n*(m+n). Accumulating their product in 128-bit integers makes the
  // result an exact rational, so agreement with mw_auc on ordered untied
  // data is bit-for-bit after one shared division.
  unsigned __int128 acc = 0;
  std::int64_t prev_fmn_num = 0;
  for (const auto& e : counts.entries) {
    const std::int64_t upper_num =  // max(F0m, pooled) over m*(m+n)
        std::max(e.x_le * total, (e.x_le + e.y_le) * m);
    const std::int64_t lower_num =  // min(Fn, pooled) over n*(m+n)
        std::min(e.y_le * total, (e.x_le + e.y_le) * n);
    const std::int64_t jump = lower_num - prev_fmn_num;
    prev_fmn_num = lower_num;
    if (jump > 0) {
      acc += static_cast<unsigned __int128>(upper_num) *
             static_cast<unsigned __int128>(jump);
    }
  }

  const unsigned __int128 denom = static_cast<unsigned __int128>(m) * n * total * total;
  static const unsigned __int128 kExact = static_cast<unsigned __int128>(1) << 53;
  if (acc < kExact && denom < kExact) {
    return static_cast<double>(static_cast<std::uint64_t>(acc)) /
           static_cast<double>(static_cast<std::uint64_t>(denom));
  }
  const auto to_ld = [](unsigned __int128 v) {
    return static_cast<long double>(static_cast<std::uint64_t>(v >> 64)) * 1.8446744073709551616e19L +
           static_cast<long double>(static_cast<std::uint64_t>(v));
  };
  return static_cast<double>(to_ld(acc) / to_ld(denom));
}

InferenceReport pl_estimate(const TwoSampleData& data, double alpha) {
  check_alpha(alpha);
  const CombinedCounts counts = combined_counts(data);
  if (counts.entries.size() < 2) {
    throw DegenerateDataError("pooled sample is a single tied value");
  }
  const MwAuc mw = mw_auc(data);

  static const double kLo = 1e-6;
  static const double kHi = 1e6;
  double lo = kLo;
  double hi = kHi;
  double score_lo = pl_score(lo, counts);
  if (pl_score(hi, counts) > 0.0) {
    throw NoFiniteRootError(
        "likelihood score positive up to the bracket cap; groups are separated "
        "(positive scores larger) and the estimate diverges");
  }
  if (score_lo < 0.0) {
    throw NoFiniteRootError(
        "likelihood score negative over the whole bracket; groups are separated "
        "in reverse (positive scores smaller)");
  }

  // Monotone score: bisect until the bracket is tight, then polish with
  // Newton steps using the observed information.
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-13 * (1.0 + lo); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (pl_score(mid, counts) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double theta = 0.5 * (lo + hi);
  for (int iter = 0; iter < 4; ++iter) {
    const double s = pl_score(theta, counts);
    const double info = pl_information(theta, counts);
    if (info <= 0.0) break;
    const double next = theta + s / info;
    if (!(next > lo && next < hi)) break;
    if (std::abs(next - theta) < 1e-13 * (1.0 + theta)) {
      theta = next;
      break;
    }
    theta = next;
  }

  const double info = pl_information(theta, counts);
  if (!(info > 0.0)) {
    throw EstimationError("observed information is not positive at the root");
  }
  const double se_theta = 1.0 / std::sqrt(info);
  const double q = 1.0 + theta;
  const double tau_hat = theta / q;
  const double se_tau = se_theta / (q * q);  // delta method through tau(theta)
  return finish_report(Method::pl, theta, se_theta, tau_hat, se_tau, alpha,
                       tie_warnings(mw.tie_count));
}

InferenceReport mw_estimate(const TwoSampleData& data, double alpha) {
  check_alpha(alpha);
  const MwAuc tau = mw_auc(data);
  return ratio_report(Method::mw, tau.value, data, alpha, tie_warnings(tau.tie_count));
}

InferenceReport rojo_estimate(const TwoSampleData& data, double alpha) {
  check_alpha(alpha);
  const double tau = rojo_auc(data);
  const MwAuc mw = mw_auc(data);
  return ratio_report(Method::rojo, tau, data, alpha, tie_warnings(mw.tie_count));
}

ThetaEstimate clamp_to_family(ThetaEstimate est, bool enforce) {
  if (est.theta_hat >= 1.0) return est;
  if (!enforce) {
    est.warnings.push_back(
        "theta estimate below 1 (curve under the chance diagonal); rerun with the "
        "family clamp to restrict it");
    return est;
  }
  est.warnings.push_back("theta estimate " + std::to_string(est.theta_hat) +
                         " below 1; clamped to the family boundary");
  est.theta_hat = 1.0;
  est.clamped = true;
  est.ci_theta.lo = std::max(est.ci_theta.lo, 1.0);
  est.ci_theta.hi = std::max(est.ci_theta.hi, 1.0);
  return est;
}

}  // namespace resroc

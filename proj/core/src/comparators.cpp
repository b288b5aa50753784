#include "resroc/comparators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "resroc/errors.hpp"
#include "resroc/estimators.hpp"

namespace resroc {

// ==================== normal distribution ====================

double normal_pdf(double z) {
  static const double kInvSqrt2Pi = 0.3989422804014326779;
  return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double normal_cdf(double z) {
  // erfc keeps full relative precision in the left tail, where
  // 1 - 0.5*erfc(z/sqrt(2)) would cancel.
  static const double kInvSqrt2 = 0.7071067811865475244;
  return 0.5 * std::erfc(-z * kInvSqrt2);
}

namespace {

// Rational approximation of the normal quantile (Acklam's coefficients),
// good to ~1e-9 on its own; callers polish it.
double quantile_seed(double p) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  static const double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile requires p in (0, 1)");
  }
  // Solve in the lower half only; the reflection keeps q(p) = -q(1-p) exact
  // and the Newton residual in the better-conditioned tail.
  if (p > 0.5) return -normal_quantile(1.0 - p);
  double x = quantile_seed(p);
  for (int i = 0; i < 2; ++i) {
    const double err = normal_cdf(x) - p;
    const double dens = normal_pdf(x);
    if (dens <= 0.0) break;
    x -= err / dens;
  }
  return x;
}

// ==================== binormal model ====================

namespace {

struct Moments {
  double mean = 0.0;
  double sd = 0.0;
};

Moments sample_moments(const std::vector<double>& v, const char* label) {
  if (v.size() < 2) {
    throw std::invalid_argument(std::string(label) + " group needs at least 2 values");
  }
  double mean = 0.0;
  for (double s : v) mean += s;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double s : v) ss += (s - mean) * (s - mean);
  const double sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
  if (sd == 0.0) {
    throw ZeroVarianceError(std::string(label) + " group is constant");
  }
  return {mean, sd};
}

}  // namespace

BinormalFit binormal_fit(const TwoSampleData& data) {
  validate(data);
  const Moments neg = sample_moments(data.x, "negative");
  const Moments pos = sample_moments(data.y, "positive");
  BinormalFit fit;
  fit.mu0 = neg.mean;
  fit.sigma0 = neg.sd;
  fit.mu1 = pos.mean;
  fit.sigma1 = pos.sd;
  fit.a = (fit.mu1 - fit.mu0) / fit.sigma1;
  fit.b = fit.sigma0 / fit.sigma1;
  return fit;
}

double binormal_roc(const BinormalFit& fit, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0, 1]");
  if (t == 0.0) return 0.0;
  if (t == 1.0) return 1.0;
  return normal_cdf(fit.a + fit.b * normal_quantile(t));
}

double binormal_auc(const BinormalFit& fit) {
  return normal_cdf((fit.mu1 - fit.mu0) / std::hypot(fit.sigma0, fit.sigma1));
}

// ==================== Lehmann model ====================

LehmannGamma lehmann_estimate(const TwoSampleData& data) {
  const MwAuc tau = mw_auc(data);
  if (tau.value >= 1.0) throw InfiniteThetaError("AUC estimate is 1; gamma degenerates to 0");
  if (tau.value <= 0.0) throw DegenerateTauError("AUC estimate is 0");

  LehmannGamma out;
  out.gamma = (1.0 - tau.value) / tau.value;
  static const double kEdge = 1e-12;
  if (out.gamma >= 1.0) {
    out.gamma = 1.0 - kEdge;
    out.clamped = true;
    out.warnings.push_back(
        "gamma estimate at or above 1 (AUC <= 0.5); clamped just below 1");
  } else if (out.gamma <= 0.0) {
    // Unreachable given the tau guards, kept for arithmetic safety.
    out.gamma = kEdge;
    out.clamped = true;
    out.warnings.push_back("gamma estimate at or below 0; clamped just above 0");
  }
  if (tau.tie_count > 0) {
    out.warnings.push_back("cross-group ties present; AUC uses midrank credit");
  }
  return out;
}

double lehmann_roc(double gamma, double t) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0, 1]");
  if (t == 0.0) return 0.0;
  return std::exp(gamma * std::log(t));
}

double lehmann_auc(double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  return 1.0 / (1.0 + gamma);
}

std::optional<double> resilience_vs_lehmann_crossing(double theta, double gamma) {
  if (!(theta > 1.0)) throw std::invalid_argument("theta must exceed 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0, 1)");

  const auto diff = [&](double t) { return lehmann_roc(gamma, t) - roc_value(theta, t); };

  static const int kGrid = 10000;
  double prev_t = 1.0 / kGrid;
  double prev_d = diff(prev_t);
  for (int i = 2; i < kGrid; ++i) {
    const double t = static_cast<double>(i) / kGrid;
    const double d = diff(t);
    if (prev_d == 0.0) return prev_t;
    if ((prev_d < 0.0) != (d < 0.0)) {
      double lo = prev_t, hi = t;
      double dlo = prev_d;
      while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        const double dm = diff(mid);
        if (dm == 0.0) return mid;
        if ((dm < 0.0) == (dlo < 0.0)) {
          lo = mid;
          dlo = dm;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    prev_t = t;
    prev_d = d;
  }
  return std::nullopt;
}

// ==================== Yeo-Johnson transform ====================

double yeo_johnson(double y, double lambda) {
  if (!std::isfinite(y) || !std::isfinite(lambda)) {
    throw std::invalid_argument("yeo_johnson requires finite inputs");
  }
  if (y >= 0.0) {
    if (lambda == 0.0) return std::log1p(y);
    // expm1(lambda log1p(y)) / lambda is stable for lambda near 0.
    return std::expm1(lambda * std::log1p(y)) / lambda;
  }
  const double two_ml = 2.0 - lambda;
  if (two_ml == 0.0) return -std::log1p(-y);
  return -std::expm1(two_ml * std::log1p(-y)) / two_ml;
}

std::vector<double> yeo_johnson_apply(const std::vector<double>& sample, double lambda) {
  std::vector<double> out;
  out.reserve(sample.size());
  for (double y : sample) out.push_back(yeo_johnson(y, lambda));
  return out;
}

namespace {

// Profile normal log-likelihood of the transformed sample, including the
// transform's Jacobian term.
double yj_profile_loglik(const std::vector<double>& sample, double lambda,
                         double jacobian_sum) {
  const double n = static_cast<double>(sample.size());
  double mean = 0.0;
  std::vector<double> z;
  z.reserve(sample.size());
  for (double y : sample) {
    z.push_back(yeo_johnson(y, lambda));
    mean += z.back();
  }
  mean /= n;
  double ss = 0.0;
  for (double v : z) ss += (v - mean) * (v - mean);
  const double var_mle = ss / n;
  if (var_mle <= 0.0) return -std::numeric_limits<double>::infinity();
  static const double kLog2Pi = 1.8378770664093454836;
  return -0.5 * n * (kLog2Pi + 1.0 + std::log(var_mle)) + (lambda - 1.0) * jacobian_sum;
}

}  // namespace

YeoJohnsonLambda yeo_johnson_fit(const std::vector<double>& sample) {
  if (sample.size() < 2) {
    throw std::invalid_argument("yeo_johnson_fit needs at least 2 values");
  }
  for (double y : sample) {
    if (!std::isfinite(y)) throw std::invalid_argument("non-finite value in sample");
  }
  const bool constant =
      std::all_of(sample.begin(), sample.end(), [&](double v) { return v == sample[0]; });
  if (constant) {
    throw ZeroVarianceError("sample is constant; transform likelihood is degenerate");
  }

  double jacobian_sum = 0.0;
  for (double y : sample) {
    const double term = std::log1p(std::abs(y));
    jacobian_sum += (y < 0.0) ? -term : term;
  }

  static const double kLo = -3.0;
  static const double kHi = 3.0;
  const auto objective = [&](double lam) {
    return yj_profile_loglik(sample, lam, jacobian_sum);
  };

  // Coarse scan to bracket the optimum.
  static const int kScan = 60;
  double best_lambda = kLo;
  double best_value = objective(kLo);
  for (int i = 1; i <= kScan; ++i) {
    const double lam = kLo + (kHi - kLo) * static_cast<double>(i) / kScan;
    const double v = objective(lam);
    if (v > best_value) {
      best_value = v;
      best_lambda = lam;
    }
  }
  const double step = (kHi - kLo) / kScan;
  double lo = std::max(kLo, best_lambda - step);
  double hi = std::min(kHi, best_lambda + step);

  // Golden-section refinement.
  static const double kGolden = 0.6180339887498948482;
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > 1e-5) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = objective(x1);
    }
  }

  YeoJohnsonLambda out;
  out.lambda = 0.5 * (lo + hi);
  out.loglik = objective(out.lambda);
  out.boundary = (out.lambda <= kLo + 1e-4) || (out.lambda >= kHi - 1e-4);
  return out;
}

}  // namespace resroc

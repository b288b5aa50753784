#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resroc/empirical.hpp"

namespace resroc {

// Standard normal distribution. The CDF wraps the C library's erfc; the
// quantile starts from a rational approximation and polishes with two
// Newton steps, giving ~1e-15 relative accuracy away from the endpoints.
double normal_pdf(double z);
double normal_cdf(double z);
double normal_quantile(double p);

// Two-normal ROC model fitted by group moments (sample sd, n-1 divisor):
// R(t) = Phi(a + b Phi^{-1}(t)) with a = (mu1-mu0)/sigma1, b = sigma0/sigma1.
struct BinormalFit {
  double mu0 = 0.0;
  double sigma0 = 1.0;
  double mu1 = 0.0;
  double sigma1 = 1.0;
  double a = 0.0;
  double b = 1.0;
};
BinormalFit binormal_fit(const TwoSampleData& data);
double binormal_roc(const BinormalFit& fit, double t);
double binormal_auc(const BinormalFit& fit);

// Proportional-hazards ROC alternative R(t) = t^gamma with gamma in (0,1);
// AUC = 1/(1+gamma). The moment estimate gamma = (1-tau)/tau from the
// Mann-Whitney AUC is clamped into (0,1) with a warning when outside.
struct LehmannGamma {
  double gamma = 0.5;
  bool clamped = false;
  std::vector<std::string> warnings;
};
LehmannGamma lehmann_estimate(const TwoSampleData& data);
double lehmann_roc(double gamma, double t);
double lehmann_auc(double gamma);

// Interior solution of t^gamma = 1 - (1-t)^theta, located by a sign scan
// over a 10^4-point grid refined by bisection to 1e-8. Returns nothing when
// no grid interval brackets a sign change (including crossings narrower
// than the grid).
std::optional<double> resilience_vs_lehmann_crossing(double theta, double gamma);

// Power transform defined for all reals, strictly increasing in y:
//   y >= 0:  ((1+y)^lambda - 1) / lambda        (log1p(y) at lambda = 0)
//   y <  0:  -((1-y)^(2-lambda) - 1) / (2-lambda)  (-log1p(-y) at lambda = 2)
double yeo_johnson(double y, double lambda);
std::vector<double> yeo_johnson_apply(const std::vector<double>& sample, double lambda);

// Profile normal log-likelihood maximizer over lambda in [-3, 3]: coarse
// grid scan, then golden-section to 1e-5. boundary flags an optimum within
// 1e-4 of the range ends. Throws ZeroVarianceError for a constant sample.
struct YeoJohnsonLambda {
  double lambda = 1.0;
  double loglik = 0.0;
  bool boundary = false;
};
YeoJohnsonLambda yeo_johnson_fit(const std::vector<double>& sample);

}  // namespace resroc

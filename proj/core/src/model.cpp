#include "resroc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace resroc {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_theta(double theta) {
  require(std::isfinite(theta) && theta > 0.0, "theta must be finite and positive");
}

// (1/theta)^(1/(theta-1)), the false-positive complement at the Youden
// maximizer. Continuous at theta = 1 with limit exp(-1).
double youden_base(double theta) {
  if (std::abs(theta - 1.0) < 1e-8) return std::exp(-1.0);
  return std::exp(-std::log(theta) / (theta - 1.0));
}

}  // namespace

double roc_value(double theta, double t) {
  require_theta(theta);
  require(t >= 0.0 && t <= 1.0, "t must lie in [0, 1]");
  // -expm1(theta * log1p(-t)) keeps precision for small t; at t = 1 the
  // log diverges, so short-circuit the endpoint.
  if (t == 1.0) return 1.0;
  return -std::expm1(theta * std::log1p(-t));
}

double auc_from_theta(double theta) {
  require_theta(theta);
  return theta / (1.0 + theta);
}

double theta_from_auc(double tau) {
  require(std::isfinite(tau) && tau > 0.0 && tau < 1.0, "tau must lie in (0, 1)");
  return tau / (1.0 - tau);
}

double youden_from_theta(double theta) {
  require_theta(theta);
  require(theta >= 1.0, "Youden index defined for theta >= 1");
  if (std::abs(theta - 1.0) < 1e-8) return 0.0;
  const double b = youden_base(theta);
  // J = b - b^theta = b (1 - b^(theta-1)) = b (1 - 1/theta).
  return b * (1.0 - 1.0 / theta);
}

double youden_slope(double theta) {
  require_theta(theta);
  require(theta >= 1.0, "Youden slope defined for theta >= 1");
  if (std::abs(theta - 1.0) < 1e-8) return std::exp(-1.0);
  const double b = youden_base(theta);
  const double u = theta - 1.0;
  const double db = b * (std::log(theta) - u / theta) / (u * u);
  return db * (1.0 - 1.0 / theta) + b / (theta * theta);
}

RocPoint optimal_cutpoint(double theta) {
  require_theta(theta);
  require(theta > 1.0, "cutpoint defined for theta > 1");
  const double b = youden_base(theta);
  return {1.0 - b, 1.0 - b / theta};
}

SummaryIndices summary_indices(double theta) {
  return {auc_from_theta(theta), youden_from_theta(theta), optimal_cutpoint(theta)};
}

double sigma2_tau10(double theta) {
  require_theta(theta);
  const double q = 1.0 + theta;
  return theta / ((2.0 + theta) * q * q);
}

double sigma2_tau01(double theta) {
  require_theta(theta);
  const double q = 1.0 + theta;
  return theta * theta / ((1.0 + 2.0 * theta) * q * q);
}

double sigma2_tau(double theta, double p) {
  require(std::isfinite(p) && p > 0.0 && p < 1.0, "p must lie in (0, 1)");
  return sigma2_tau10(theta) / p + sigma2_tau01(theta) / (1.0 - p);
}

double sigma2_theta(double theta, double p) {
  require_theta(theta);
  require(std::isfinite(p) && p > 0.0 && p < 1.0, "p must lie in (0, 1)");
  const double q = 1.0 + theta;
  return theta * q * q / ((2.0 + theta) * p) +
         theta * theta * q * q / ((1.0 + 2.0 * theta) * (1.0 - p));
}

}  // namespace resroc

#pragma once

// Closed forms for the one-parameter ROC family
//
//   R(t) = 1 - (1 - t)^theta,   theta > 0,
//
// induced by score distributions whose survival functions satisfy
// 1 - F1 = (1 - F0)^(1/theta) on a shared support. theta = 1 is the chance
// diagonal; theta > 1 means the positive group is stochastically larger.

namespace resroc {

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
};

struct SummaryIndices {
  double auc = 0.0;
  double youden = 0.0;
  RocPoint cutpoint;
};

// R(t) for t in [0, 1]. Throws std::invalid_argument outside the domain or
// for theta <= 0.
double roc_value(double theta, double t);

// AUC = theta / (1 + theta).
double auc_from_theta(double theta);

// Inverse of the above: theta = tau / (1 - tau) for tau in (0, 1).
double theta_from_auc(double tau);

// Youden index J = max_t [ R(t) - t ] for theta >= 1:
//   J = (1/theta)^(1/(theta-1)) - (1/theta)^(theta/(theta-1)),
// continuously extended to J = 0 at theta = 1.
double youden_from_theta(double theta);

// dJ/dtheta, the sensitivity used for delta-method intervals on J.
// Defined for theta >= 1; the limit at 1 is exp(-1).
double youden_slope(double theta);

// Argmax point of R(t) - t for theta > 1: t* = 1 - b, R(t*) = 1 - b/theta
// with b = (1/theta)^(1/(theta-1)).
RocPoint optimal_cutpoint(double theta);

// auc, youden and cutpoint bundled, for theta > 1.
SummaryIndices summary_indices(double theta);

// Asymptotic variance pieces for the sampled ROC functional, per unit of
// total sample size N = m + n with negative fraction p = m / N:
//
//   sigma2_tau10 = theta / ((2 + theta) (1 + theta)^2)     (negative-sample part)
//   sigma2_tau01 = theta^2 / ((1 + 2 theta) (1 + theta)^2) (positive-sample part)
//
// sqrt(N) (tau_hat - tau) -> N(0, sigma2_tau(theta, p)) and likewise for the
// ratio parameter with sigma2_theta = (1 + theta)^4 sigma2_tau.
double sigma2_tau10(double theta);
double sigma2_tau01(double theta);
double sigma2_tau(double theta, double p);
double sigma2_theta(double theta, double p);

}  // namespace resroc

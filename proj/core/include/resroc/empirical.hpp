#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "resroc/model.hpp"

namespace resroc {

// Negative-group scores in x, positive-group scores in y.
struct TwoSampleData {
  std::vector<double> x;
  std::vector<double> y;
};

// Throws std::invalid_argument if either group is empty or any score is
// non-finite.
void validate(const TwoSampleData& data);

// Right-continuous step function: value is values[i] on [knots[i],
// knots[i+1]) and 0 before the first knot. Knots must be strictly
// increasing.
class StepFunction {
 public:
  StepFunction() = default;
  StepFunction(std::vector<double> knots, std::vector<double> values);

  double operator()(double t) const;

  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return knots_.size(); }

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
};

// Empirical CDF of one sample.
StepFunction ecdf(const std::vector<double>& sample);

// ECDF of the pooled sample, i.e. the (m/N, n/N) convex combination of the
// two group ECDFs.
StepFunction pooled_ecdf(const TwoSampleData& data);

// Order-restricted ECDF pair: f0mn = max(F0m, Pmn) and fmn = min(Fn, Pmn),
// where Pmn is the pooled ECDF. By construction f0mn >= pmn >= fmn
// everywhere, so the pair is always correctly ordered even when the raw
// ECDFs cross.
struct RestrictedEcdfPair {
  StepFunction f0mn;
  StepFunction fmn;
  StepFunction pmn;
};
RestrictedEcdfPair rojo_pair(const TwoSampleData& data);

// Empirical ROC staircase from (1,1) down to (0,0): one point per distinct
// combined score plus both endpoints, fpr = 1 - F0m(c), tpr = 1 - Fn(c).
std::vector<RocPoint> empirical_roc(const TwoSampleData& data);

// 1 - Fn(F0m^{-1}(1 - t)) with the generalized inverse
// F0m^{-1}(u) = inf{ x : F0m(x) >= u }; anchored to 0 at t = 0.
double empirical_roc_value(const StepFunction& f0, const StepFunction& fn, double t);

enum class Group { negative, positive };

// Points (score, log(-log F(score))) over knots where 0 < F < 1. Under the
// family both groups give parallel series, offset by log theta.
struct DiagnosticSeries {
  Group group;
  std::vector<std::pair<double, double>> points;
};
DiagnosticSeries loglog_series(const StepFunction& f, Group group);

// Fraction of combined distinct scores where F0m >= Fn, and the largest
// Fn - F0m excess. fraction_satisfied == 1 means the stochastic ordering
// holds in the sample.
struct DominanceReport {
  double fraction_satisfied = 0.0;
  double max_violation = 0.0;
};
DominanceReport dominance_check(const TwoSampleData& data);

// Sample SD of log(-log Fn) - log(-log F0m) across combined distinct scores
// where both ECDFs are strictly inside (0, 1). Small values support a
// constant ratio of log-survival exponents. Throws DegenerateSeriesError
// when fewer than two such points exist.
struct LogLogConstancy {
  double sd = 0.0;
  std::size_t points = 0;
};
LogLogConstancy loglog_constancy(const TwoSampleData& data);

}  // namespace resroc

#include "resroc/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "resroc/errors.hpp"

namespace resroc {

namespace {

// Distinct sorted values of the pooled sample together with cumulative
// per-group counts: at entry k, cx[k] = #{x <= v[k]}, cy[k] = #{y <= v[k]}.
struct PooledCounts {
  std::vector<double> values;
  std::vector<std::int64_t> cx;
  std::vector<std::int64_t> cy;
};

PooledCounts pooled_counts(const TwoSampleData& data) {
  std::vector<double> xs = data.x;
  std::vector<double> ys = data.y;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  PooledCounts out;
  out.values.reserve(xs.size() + ys.size());
  out.cx.reserve(xs.size() + ys.size());
  out.cy.reserve(xs.size() + ys.size());

  std::size_t i = 0, j = 0;
  while (i < xs.size() || j < ys.size()) {
    double v;
    if (j == ys.size() || (i < xs.size() && xs[i] <= ys[j])) {
      v = xs[i];
    } else {
      v = ys[j];
    }
    while (i < xs.size() && xs[i] == v) ++i;
    while (j < ys.size() && ys[j] == v) ++j;
    out.values.push_back(v);
    out.cx.push_back(static_cast<std::int64_t>(i));
    out.cy.push_back(static_cast<std::int64_t>(j));
  }
  return out;
}

}  // namespace

void validate(const TwoSampleData& data) {
  if (data.x.empty()) throw std::invalid_argument("negative group is empty");
  if (data.y.empty()) throw std::invalid_argument("positive group is empty");
  for (double v : data.x) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite score in negative group");
  }
  for (double v : data.y) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite score in positive group");
  }
}

StepFunction::StepFunction(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.size() != values_.size()) {
    throw std::invalid_argument("knots and values must have equal length");
  }
  if (knots_.empty()) throw std::invalid_argument("step function needs at least one knot");
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i - 1] < knots_[i])) {
      throw std::invalid_argument("knots must be strictly increasing");
    }
  }
}

double StepFunction::operator()(double t) const {
  // First knot strictly greater than t; the value in force at t is the one
  // attached to the previous knot.
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  if (it == knots_.begin()) return 0.0;
  return values_[static_cast<std::size_t>(it - knots_.begin()) - 1];
}

StepFunction ecdf(const std::vector<double>& sample) {
  if (sample.empty()) throw std::invalid_argument("empty sample");
  std::vector<double> sorted = sample;
  std::sort(sorted.begin(), sorted.end());
  const double denom = static_cast<double>(sorted.size());

  std::vector<double> knots;
  std::vector<double> values;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const double v = sorted[i];
    while (i < sorted.size() && sorted[i] == v) ++i;
    knots.push_back(v);
    values.push_back(static_cast<double>(i) / denom);
  }
  return StepFunction(std::move(knots), std::move(values));
}

StepFunction pooled_ecdf(const TwoSampleData& data) {
  validate(data);
  PooledCounts pc = pooled_counts(data);
  const double denom = static_cast<double>(data.x.size() + data.y.size());
  std::vector<double> values(pc.values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = static_cast<double>(pc.cx[k] + pc.cy[k]) / denom;
  }
  return StepFunction(std::move(pc.values), std::move(values));
}

RestrictedEcdfPair rojo_pair(const TwoSampleData& data) {
  validate(data);
  PooledCounts pc = pooled_counts(data);
  const double m = static_cast<double>(data.x.size());
  const double n = static_cast<double>(data.y.size());
  const double total = m + n;

  const std::size_t k = pc.values.size();
  std::vector<double> pooled(k), lower(k), upper(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double f0 = static_cast<double>(pc.cx[i]) / m;
    const double fn = static_cast<double>(pc.cy[i]) / n;
    const double p = static_cast<double>(pc.cx[i] + pc.cy[i]) / total;
    pooled[i] = p;
    upper[i] = std::max(f0, p);
    lower[i] = std::min(fn, p);
  }
  RestrictedEcdfPair out;
  out.f0mn = StepFunction(pc.values, std::move(upper));
  out.fmn = StepFunction(pc.values, std::move(lower));
  out.pmn = StepFunction(std::move(pc.values), std::move(pooled));
  return out;
}

std::vector<RocPoint> empirical_roc(const TwoSampleData& data) {
  validate(data);
  PooledCounts pc = pooled_counts(data);
  const double m = static_cast<double>(data.x.size());
  const double n = static_cast<double>(data.y.size());

  std::vector<RocPoint> points;
  points.reserve(pc.values.size() + 2);
  points.push_back({1.0, 1.0});
  for (std::size_t k = 0; k < pc.values.size(); ++k) {
    points.push_back({1.0 - static_cast<double>(pc.cx[k]) / m,
                      1.0 - static_cast<double>(pc.cy[k]) / n});
  }
  if (points.back().fpr != 0.0 || points.back().tpr != 0.0) {
    points.push_back({0.0, 0.0});
  }
  return points;
}

double empirical_roc_value(const StepFunction& f0, const StepFunction& fn, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0, 1]");
  if (t == 0.0) return 0.0;
  // Generalized inverse: smallest knot where f0 reaches 1 - t.
  const double target = 1.0 - t;
  const auto& vals = f0.values();
  auto it = std::lower_bound(vals.begin(), vals.end(), target);
  if (it == vals.end()) return 1.0;  // f0 never reaches the target level
  const double cut = f0.knots()[static_cast<std::size_t>(it - vals.begin())];
  return 1.0 - fn(cut);
}

DiagnosticSeries loglog_series(const StepFunction& f, Group group) {
  DiagnosticSeries out;
  out.group = group;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v = f.values()[i];
    if (v <= 0.0 || v >= 1.0) continue;
    out.points.emplace_back(f.knots()[i], std::log(-std::log(v)));
  }
  if (out.points.size() < 2) {
    throw DegenerateSeriesError("fewer than two knots with 0 < F < 1");
  }
  return out;
}

DominanceReport dominance_check(const TwoSampleData& data) {
  validate(data);
  PooledCounts pc = pooled_counts(data);
  const double m = static_cast<double>(data.x.size());
  const double n = static_cast<double>(data.y.size());

  std::size_t satisfied = 0;
  double max_violation = 0.0;
  for (std::size_t k = 0; k < pc.values.size(); ++k) {
    const double f0 = static_cast<double>(pc.cx[k]) / m;
    const double fn = static_cast<double>(pc.cy[k]) / n;
    if (f0 >= fn) {
      ++satisfied;
    } else {
      max_violation = std::max(max_violation, fn - f0);
    }
  }
  return {static_cast<double>(satisfied) / static_cast<double>(pc.values.size()),
          max_violation};
}

LogLogConstancy loglog_constancy(const TwoSampleData& data) {
  validate(data);
  PooledCounts pc = pooled_counts(data);
  const double m = static_cast<double>(data.x.size());
  const double n = static_cast<double>(data.y.size());

  std::vector<double> diffs;
  for (std::size_t k = 0; k < pc.values.size(); ++k) {
    const double f0 = static_cast<double>(pc.cx[k]) / m;
    const double fn = static_cast<double>(pc.cy[k]) / n;
    if (f0 <= 0.0 || f0 >= 1.0 || fn <= 0.0 || fn >= 1.0) continue;
    diffs.push_back(std::log(-std::log(fn)) - std::log(-std::log(f0)));
  }
  if (diffs.size() < 2) {
    throw DegenerateSeriesError("fewer than two knots where both ECDFs are interior");
  }
  double mean = 0.0;
  for (double d : diffs) mean += d;
  mean /= static_cast<double>(diffs.size());
  double ss = 0.0;
  for (double d : diffs) ss += (d - mean) * (d - mean);
  const double sd = std::sqrt(ss / static_cast<double>(diffs.size() - 1));
  return {sd, diffs.size()};
}

}  // namespace resroc

#include <doctest.h>

#include <resroc/empirical.hpp>
#include <resroc/errors.hpp>
#include <resroc/estimators.hpp>
#include <resroc/rng.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace resroc;

namespace {

TwoSampleData random_integer_data(std::uint64_t rep, std::size_t max_size, int levels) {
  auto rng = rng_stream(777, 3, rep);
  auto draw_size = [&] {
    return 1 + static_cast<std::size_t>(rng.next_uniform() * max_size);
  };
  TwoSampleData data;
  data.x.resize(draw_size());
  data.y.resize(draw_size());
  for (auto& v : data.x) v = std::floor(rng.next_uniform() * levels);
  for (auto& v : data.y)
    v = std::floor(rng.next_uniform() * levels) + (rng.next_uniform() < 0.4 ? 1.0 : 0.0);
  return data;
}

double trapezoid_area(const std::vector<RocPoint>& pts) {
  double area = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    area += (pts[i - 1].fpr - pts[i].fpr) * (pts[i - 1].tpr + pts[i].tpr) / 2.0;
  return area;
}

}  // namespace

TEST_SUITE("empirical") {

TEST_CASE("step function is right continuous and zero before the first knot") {
  StepFunction f({5.0}, {1.0});
  CHECK(f(4.999999) == 0.0);
  CHECK(f(5.0) == 1.0);
  CHECK(f(6.0) == 1.0);

  StepFunction g({1.0, 2.0, 3.0}, {0.25, 0.5, 1.0});
  CHECK(g(0.0) == 0.0);
  CHECK(g(1.0) == 0.25);
  CHECK(g(2.5) == 0.5);
  CHECK(g(3.0) == 1.0);

  CHECK_THROWS_AS(StepFunction({2.0, 1.0}, {0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction({1.0, 1.0}, {0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction({1.0}, {0.5, 1.0}), std::invalid_argument);
}

TEST_CASE("ecdf collapses ties into one knot") {
  auto f = ecdf({1.0, 1.0, 2.0});
  REQUIRE(f.size() == 2);
  CHECK(f.knots()[0] == 1.0);
  CHECK(f(1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(f(2.0) == 1.0);
  CHECK(f(0.5) == 0.0);
  CHECK_THROWS_AS(ecdf({}), std::invalid_argument);
}

TEST_CASE("pooled ecdf is the sample-size weighted combination") {
  TwoSampleData data{{1.0, 3.0, 3.0}, {2.0, 4.0}};
  auto p = pooled_ecdf(data);
  auto f0 = ecdf(data.x);
  auto fn = ecdf(data.y);
  double m = 3, n = 2;
  for (double t : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0}) {
    CHECK(std::abs(p(t) - (m * f0(t) + n * fn(t)) / (m + n)) < 1e-15);
  }
  CHECK(p(4.0) == 1.0);
}

TEST_CASE("rojo pair on the interleaved fixture") {
  TwoSampleData data{{1.0, 3.0}, {2.0, 4.0}};
  auto pair = rojo_pair(data);
  CHECK(pair.f0mn(1.0) == 0.5);
  CHECK(pair.fmn(1.0) == 0.0);
  CHECK(pair.f0mn(1.5) == 0.5);
  CHECK(pair.fmn(1.5) == 0.0);
  CHECK(pair.pmn(1.0) == 0.25);

  TwoSampleData reversed{{2.0, 4.0}, {1.0, 3.0}};
  auto rp = rojo_pair(reversed);
  // Raw ECDFs cross, so both coordinates are pulled to the pooled value.
  CHECK(rp.f0mn(1.0) == 0.25);
  CHECK(rp.fmn(1.0) == 0.25);
}

TEST_CASE("rojo pair ordering holds on random tied data") {
  for (std::uint64_t rep = 0; rep < 200; ++rep) {
    auto data = random_integer_data(rep, 25, 6);
    auto pair = rojo_pair(data);
    for (double k : pair.pmn.knots()) {
      CHECK(pair.f0mn(k) >= pair.pmn(k));
      CHECK(pair.pmn(k) >= pair.fmn(k));
    }
    CHECK(pair.f0mn(pair.pmn.knots().back()) == 1.0);
    CHECK(pair.fmn(pair.pmn.knots().back()) == 1.0);
  }
}

TEST_CASE("rojo pair reduces to the raw ecdfs when the groups are ordered") {
  TwoSampleData data{{1.0, 2.0, 3.0}, {2.5, 3.5, 4.0}};
  auto pair = rojo_pair(data);
  auto f0 = ecdf(data.x);
  auto fn = ecdf(data.y);
  for (double k : pair.pmn.knots()) {
    CHECK(pair.f0mn(k) == f0(k));
    CHECK(pair.fmn(k) == fn(k));
  }
}

TEST_CASE("empirical roc staircase on fixtures") {
  TwoSampleData data{{1.0, 3.0}, {2.0, 4.0}};
  auto pts = empirical_roc(data);
  REQUIRE(pts.size() == 5);
  CHECK(pts.front().fpr == 1.0);
  CHECK(pts.front().tpr == 1.0);
  CHECK(pts[1].fpr == 0.5);
  CHECK(pts[1].tpr == 1.0);
  CHECK(pts[2].fpr == 0.5);
  CHECK(pts[2].tpr == 0.5);
  CHECK(pts[3].fpr == 0.0);
  CHECK(pts[3].tpr == 0.5);
  CHECK(pts.back().fpr == 0.0);
  CHECK(pts.back().tpr == 0.0);

  TwoSampleData separated{{1.0, 2.0}, {3.0, 4.0}};
  auto sp = empirical_roc(separated);
  bool hits_corner = false;
  for (const auto& p : sp) hits_corner = hits_corner || (p.fpr == 0.0 && p.tpr == 1.0);
  CHECK(hits_corner);

  TwoSampleData equal{{1.0, 2.0, 3.0, 4.0}, {1.0, 2.0, 3.0, 4.0}};
  for (const auto& p : empirical_roc(equal)) CHECK(p.fpr == p.tpr);
}

TEST_CASE("empirical roc is a monotone staircase") {
  for (std::uint64_t rep = 0; rep < 50; ++rep) {
    auto data = random_integer_data(rep + 500, 20, 5);
    auto pts = empirical_roc(data);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      CHECK(pts[i].fpr <= pts[i - 1].fpr);
      CHECK(pts[i].tpr <= pts[i - 1].tpr);
    }
  }
}

TEST_CASE("trapezoid area under the staircase equals the rank statistic") {
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    auto data = random_integer_data(rep + 1000, 30, 8);
    double area = trapezoid_area(empirical_roc(data));
    CHECK(std::abs(area - mw_auc(data).value) < 1e-12);
  }
}

TEST_CASE("empirical roc evaluator matches the staircase envelope") {
  TwoSampleData data{{1.0, 3.0}, {2.0, 4.0}};
  auto f0 = ecdf(data.x);
  auto fn = ecdf(data.y);
  CHECK(empirical_roc_value(f0, fn, 0.0) == 0.0);
  CHECK(empirical_roc_value(f0, fn, 1.0) == 1.0);
  CHECK(empirical_roc_value(f0, fn, 0.25) == 0.5);
  CHECK(empirical_roc_value(f0, fn, 0.5) == 1.0);

  auto rdata = random_integer_data(4242, 25, 6);
  auto rf0 = ecdf(rdata.x);
  auto rfn = ecdf(rdata.y);
  double prev = 0.0;
  for (int i = 0; i <= 100; ++i) {
    double v = empirical_roc_value(rf0, rfn, i / 100.0);
    CHECK(v >= prev);
    CHECK(v <= 1.0);
    prev = v;
  }
}

TEST_CASE("loglog series skips boundary knots") {
  auto series = loglog_series(ecdf({1.0, 2.0, 3.0, 4.0}), Group::negative);
  REQUIRE(series.points.size() == 3);
  CHECK(series.group == Group::negative);
  CHECK(series.points[0].first == 1.0);
  CHECK(std::abs(series.points[0].second - std::log(-std::log(0.25))) < 1e-15);

  StepFunction at_e({0.0, 1.0, 2.0}, {std::exp(-1.0), 0.5, 1.0});
  auto se = loglog_series(at_e, Group::positive);
  REQUIRE(se.points.size() == 2);
  CHECK(std::abs(se.points[0].second) < 1e-15);

  CHECK_THROWS_AS(loglog_series(ecdf({7.0}), Group::negative), DegenerateSeriesError);
  CHECK_THROWS_AS(loglog_series(ecdf({1.0, 1.0}), Group::negative), DegenerateSeriesError);
}

TEST_CASE("loglog series of a power-transformed cdf shifts by log of the power") {
  std::vector<double> knots, base, powered;
  for (int i = 1; i <= 9; ++i) {
    knots.push_back(i);
    base.push_back(i / 10.0);
    powered.push_back(std::pow(i / 10.0, 3.0));
  }
  auto sa = loglog_series(StepFunction(knots, base), Group::negative);
  auto sb = loglog_series(StepFunction(knots, powered), Group::positive);
  REQUIRE(sa.points.size() == sb.points.size());
  for (std::size_t i = 0; i < sa.points.size(); ++i)
    CHECK(std::abs((sb.points[i].second - sa.points[i].second) - std::log(3.0)) < 1e-12);
}

TEST_CASE("dominance check reports ordering and worst violation") {
  auto ok = dominance_check({{1.0, 3.0}, {2.0, 4.0}});
  CHECK(ok.fraction_satisfied == 1.0);
  CHECK(ok.max_violation == 0.0);

  auto bad = dominance_check({{2.0, 4.0}, {1.0, 3.0}});
  CHECK(bad.fraction_satisfied == 0.5);
  CHECK(bad.max_violation == 0.5);

  auto equal = dominance_check({{1.0, 2.0}, {1.0, 2.0}});
  CHECK(equal.fraction_satisfied == 1.0);
}

TEST_CASE("loglog constancy is exactly zero for a sampled power relation") {
  // F0 puts mass 1/10 on each of 1..10; Fn(k) = (k/10)^2 exactly.
  TwoSampleData data;
  for (int k = 1; k <= 10; ++k)
    for (int c = 0; c < 10; ++c) data.x.push_back(k);
  for (int k = 1; k <= 10; ++k)
    for (int c = 0; c < 2 * k - 1; ++c) data.y.push_back(k);
  REQUIRE(data.y.size() == 100);
  auto con = loglog_constancy(data);
  CHECK(con.points == 9);
  CHECK(con.sd < 1e-12);

  TwoSampleData identical{{1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}};
  auto czero = loglog_constancy(identical);
  CHECK(czero.sd == 0.0);
  CHECK(czero.points == 2);

  CHECK_THROWS_AS(loglog_constancy({{1.0, 2.0}, {1.0, 2.0}}), DegenerateSeriesError);
}

}  // TEST_SUITE

#include <doctest.h>

#include <resroc/comparators.hpp>
#include <resroc/errors.hpp>
#include <resroc/estimators.hpp>
#include <resroc/model.hpp>
#include <resroc/rng.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

using namespace resroc;

namespace {

const TwoSampleData kFixture{{1.0, 3.0}, {2.0, 4.0}};
const TwoSampleData kReversed{{2.0, 4.0}, {1.0, 3.0}};
const double kFixtureRoot = 2.5615528128088303;  // (1 + sqrt(17)) / 2

TwoSampleData random_tied_data(std::uint64_t rep, std::size_t max_size, int levels) {
  auto rng = rng_stream(99, 5, rep);
  TwoSampleData data;
  data.x.resize(1 + static_cast<std::size_t>(rng.next_uniform() * max_size));
  data.y.resize(1 + static_cast<std::size_t>(rng.next_uniform() * max_size));
  for (auto& v : data.x) v = std::floor(rng.next_uniform() * levels);
  for (auto& v : data.y)
    v = std::floor(rng.next_uniform() * levels) + (rng.next_uniform() < 0.4 ? 1.0 : 0.0);
  return data;
}

MwAuc brute_force_mw(const TwoSampleData& data) {
  std::int64_t less = 0, ties = 0;
  for (double x : data.x) {
    for (double y : data.y) {
      if (x < y) ++less;
      if (x == y) ++ties;
    }
  }
  const std::int64_t mn = static_cast<std::int64_t>(data.x.size() * data.y.size());
  return {static_cast<double>(2 * less + ties) / static_cast<double>(2 * mn), ties};
}

// Direct floating-point evaluation of the restricted-pair integral, one jump
// of the lower CDF at a time.
double brute_force_rojo(const TwoSampleData& data) {
  auto pair = rojo_pair(data);
  double acc = 0.0;
  double prev_lower = 0.0;
  for (std::size_t k = 0; k < pair.pmn.size(); ++k) {
    const double knot = pair.pmn.knots()[k];
    const double lower = pair.fmn(knot);
    acc += pair.f0mn(knot) * (lower - prev_lower);
    prev_lower = lower;
  }
  return acc;
}

TwoSampleData duplicated(const TwoSampleData& data) {
  TwoSampleData out;
  for (double v : data.x) { out.x.push_back(v); out.x.push_back(v); }
  for (double v : data.y) { out.y.push_back(v); out.y.push_back(v); }
  return out;
}

}  // namespace

TEST_SUITE("estimators") {

TEST_CASE("combined counts on fixtures") {
  auto cc = combined_counts(kFixture);
  REQUIRE(cc.entries.size() == 4);
  CHECK(cc.m == 2);
  CHECK(cc.n == 2);
  std::int64_t want[4][2] = {{1, 0}, {1, 1}, {2, 1}, {2, 2}};
  for (int i = 0; i < 4; ++i) {
    CHECK(cc.entries[i].x_le == want[i][0]);
    CHECK(cc.entries[i].y_le == want[i][1]);
    CHECK(cc.entries[i].count == 1);
  }

  auto tied = combined_counts({{1.0}, {1.0}});
  REQUIRE(tied.entries.size() == 1);
  CHECK(tied.entries[0].x_le == 1);
  CHECK(tied.entries[0].y_le == 1);
  CHECK(tied.entries[0].count == 2);
}

TEST_CASE("combined counts invariants on random data") {
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    auto data = random_tied_data(rep, 30, 6);
    auto cc = combined_counts(data);
    std::int64_t total = 0;
    std::int64_t px = 0, py = 0;
    for (const auto& e : cc.entries) {
      CHECK(e.x_le >= px);
      CHECK(e.y_le >= py);
      CHECK(e.count == (e.x_le - px) + (e.y_le - py));
      px = e.x_le;
      py = e.y_le;
      total += e.count;
    }
    CHECK(px == cc.m);
    CHECK(py == cc.n);
    CHECK(total == cc.m + cc.n);
  }
}

TEST_CASE("score vanishes at the analytic root and changes sign across it") {
  auto cc = combined_counts(kFixture);
  CHECK(std::abs(pl_score(kFixtureRoot, cc)) < 1e-12);

  // Positive below the root, negative above: the sign structure bisection
  // relies on. The score is only locally monotone (it climbs back toward
  // zero from below as theta grows), so no global decrease is asserted.
  for (double theta = 0.05; theta < 50.0; theta *= 1.3) {
    if (theta < kFixtureRoot) {
      CHECK(pl_score(theta, cc) > 0.0);
    } else {
      CHECK(pl_score(theta, cc) < 0.0);
    }
  }
  CHECK(pl_information(kFixtureRoot, cc) > 0.0);

  // One observation per group, positive above negative: no finite root.
  auto sep = combined_counts({{1.0}, {2.0}});
  for (double theta : {0.01, 1.0, 100.0, 1e5}) {
    CHECK(std::abs(pl_score(theta, sep) - (1.0 / theta - 1.0 / (1.0 + theta))) < 1e-15);
    CHECK(pl_score(theta, sep) > 0.0);
  }
}

TEST_CASE("information is the negative score derivative") {
  auto cc = combined_counts(kFixture);
  const double h = 1e-6;
  for (double theta : {0.5, 1.0, kFixtureRoot, 5.0}) {
    double fd = -(pl_score(theta + h, cc) - pl_score(theta - h, cc)) / (2 * h);
    CHECK(std::abs(pl_information(theta, cc) - fd) / std::abs(fd) < 1e-6);
  }
  CHECK(std::abs(pl_information(kFixtureRoot, cc) - 0.099076133623179472) < 1e-12);
  CHECK(std::abs(pl_information(3.0, cc) - 0.057222222222222222) < 1e-14);

  for (std::uint64_t rep = 0; rep < 5; ++rep) {
    auto data = random_tied_data(rep + 50, 40, 10);
    auto rcc = combined_counts(data);
    for (double theta : {0.7, 1.3, 2.9}) {
      double fd = -(pl_score(theta + h, rcc) - pl_score(theta - h, rcc)) / (2 * h);
      CHECK(std::abs(pl_information(theta, rcc) - fd) / std::abs(fd) < 1e-6);
    }
  }
}

TEST_CASE("partial likelihood estimate on the fixture") {
  auto report = pl_estimate(kFixture, 0.05);
  const auto& est = report.estimate;
  CHECK(est.method == Method::pl);
  CHECK(std::abs(est.theta_hat - kFixtureRoot) < 1e-8);

  auto cc = combined_counts(kFixture);
  CHECK(std::abs(est.se_theta - 1.0 / std::sqrt(pl_information(est.theta_hat, cc))) < 1e-12);

  const double z = normal_quantile(0.975);
  CHECK(std::abs(est.ci_theta.lo - (est.theta_hat - z * est.se_theta)) < 1e-12);
  CHECK(std::abs(est.ci_theta.hi - (est.theta_hat + z * est.se_theta)) < 1e-12);
  CHECK(est.alpha == 0.05);
  CHECK_FALSE(est.clamped);

  CHECK(std::abs(report.tau_hat - auc_from_theta(est.theta_hat)) < 1e-15);
  const double tau_half = z * est.se_theta / ((1 + est.theta_hat) * (1 + est.theta_hat));
  CHECK(std::abs((report.ci_tau.hi - report.ci_tau.lo) / 2 - tau_half) < 1e-12);

  REQUIRE(report.youden.has_value());
  CHECK(std::abs(report.youden->value - youden_from_theta(est.theta_hat)) < 1e-15);
  CHECK(std::abs(report.youden->cutpoint.fpr - optimal_cutpoint(est.theta_hat).fpr) < 1e-15);
  const double j_half = z * std::abs(youden_slope(est.theta_hat)) * est.se_theta;
  CHECK(std::abs((report.youden->ci.hi - report.youden->ci.lo) / 2 - j_half) < 1e-12);

  CHECK(std::abs(report.wald_z - (est.theta_hat - 1.0) / est.se_theta) < 1e-12);
  CHECK(std::abs(report.wald_p - 2.0 * normal_cdf(-std::abs(report.wald_z))) < 1e-15);
}

TEST_CASE("partial likelihood failure modes") {
  CHECK_THROWS_AS(pl_estimate({{1.0}, {2.0}}, 0.05), NoFiniteRootError);
  CHECK_THROWS_AS(pl_estimate({{1.0, 2.0}, {3.0, 4.0}}, 0.05), NoFiniteRootError);
  CHECK_THROWS_AS(pl_estimate({{2.0}, {1.0}}, 0.05), NoFiniteRootError);
  CHECK_THROWS_AS(pl_estimate({{5.0, 5.0}, {5.0, 5.0}}, 0.05), DegenerateDataError);
}

TEST_CASE("identical groups estimate the chance diagonal") {
  auto report = pl_estimate({{1.0, 2.0}, {1.0, 2.0}}, 0.05);
  CHECK(std::abs(report.estimate.theta_hat - 1.0) < 1e-9);
  CHECK(report.wald_p > 0.999999);
  CHECK_FALSE(report.youden.has_value());
}

TEST_CASE("rank statistic fixtures") {
  CHECK(mw_auc(kFixture).value == 0.75);
  CHECK(mw_auc(kFixture).tie_count == 0);
  CHECK(mw_auc({{1.0, 2.0}, {3.0, 4.0}}).value == 1.0);
  auto tied = mw_auc({{5.0}, {5.0}});
  CHECK(tied.value == 0.5);
  CHECK(tied.tie_count == 1);
  auto equal = mw_auc({{1.0, 2.0}, {1.0, 2.0}});
  CHECK(equal.value == 0.5);
  CHECK(equal.tie_count == 2);
}

TEST_CASE("rank statistic equals the quadratic-time count exactly") {
  for (std::uint64_t rep = 0; rep < 1000; ++rep) {
    auto data = random_tied_data(rep + 2000, 30, 8);
    auto fast = mw_auc(data);
    auto slow = brute_force_mw(data);
    CHECK(fast.value == slow.value);
    CHECK(fast.tie_count == slow.tie_count);
  }
}

TEST_CASE("restricted auc fixtures") {
  CHECK(rojo_auc(kFixture) == 0.75);
  CHECK(rojo_auc(kReversed) == 0.625);
  CHECK(rojo_auc({{1.0, 2.0}, {1.0, 2.0}}) == 0.75);
}

TEST_CASE("restricted auc matches a direct evaluation of the integral") {
  for (std::uint64_t rep = 0; rep < 300; ++rep) {
    auto data = random_tied_data(rep + 4000, 25, 6);
    CHECK(std::abs(rojo_auc(data) - brute_force_rojo(data)) < 1e-12);
  }
}

TEST_CASE("restricted auc collapses to the rank statistic under ordering") {
  std::size_t qualifying = 0;
  for (std::uint64_t rep = 0; rep < 200; ++rep) {
    auto rng = rng_stream(1234, 6, rep);
    TwoSampleData data;
    data.x.resize(15 + static_cast<std::size_t>(rng.next_uniform() * 15));
    data.y.resize(15 + static_cast<std::size_t>(rng.next_uniform() * 15));
    for (auto& v : data.x) v = rng.next_uniform();
    for (auto& v : data.y) v = std::cbrt(rng.next_uniform());
    if (dominance_check(data).fraction_satisfied < 1.0) continue;
    auto mw = mw_auc(data);
    if (mw.tie_count != 0) continue;
    ++qualifying;
    CHECK(rojo_auc(data) == mw.value);
  }
  CHECK(qualifying >= 40);
}

TEST_CASE("ratio estimates from the rank statistic") {
  auto report = mw_estimate(kFixture, 0.05);
  CHECK(report.tau_hat == 0.75);
  CHECK(report.estimate.theta_hat == 3.0);
  CHECK(report.estimate.method == Method::mw);
  const double n_total = 4.0;
  const double want_se = std::sqrt(sigma2_theta(3.0, 0.5) / n_total);
  CHECK(std::abs(report.estimate.se_theta - want_se) < 1e-15);
  REQUIRE(report.youden.has_value());
  CHECK(std::abs(report.youden->value - youden_from_theta(3.0)) < 1e-15);

  CHECK_THROWS_AS(mw_estimate({{1.0, 2.0}, {3.0, 4.0}}, 0.05), InfiniteThetaError);
  CHECK_THROWS_AS(mw_estimate({{3.0, 4.0}, {1.0, 2.0}}, 0.05), DegenerateTauError);

  auto rojo = rojo_estimate(kFixture, 0.05);
  CHECK(rojo.estimate.theta_hat == 3.0);
  CHECK(rojo.estimate.method == Method::rojo);
}

TEST_CASE("tie warnings surface on the estimate") {
  auto tied = mw_estimate({{1.0, 2.0}, {2.0, 3.0}}, 0.05);
  CHECK_FALSE(tied.estimate.warnings.empty());
  auto clean = mw_estimate(kFixture, 0.05);
  CHECK(clean.estimate.warnings.empty());
}

TEST_CASE("reversed data stays unclamped above one but clamps below") {
  auto rojo = rojo_estimate(kReversed, 0.05);
  CHECK(std::abs(rojo.tau_hat - 0.625) < 1e-15);
  CHECK(std::abs(rojo.estimate.theta_hat - 5.0 / 3.0) < 1e-15);
  CHECK_FALSE(rojo.estimate.clamped);
  auto kept = clamp_to_family(rojo.estimate, true);
  CHECK(kept.theta_hat == rojo.estimate.theta_hat);
  CHECK_FALSE(kept.clamped);
  CHECK(kept.warnings.empty());

  auto mw = mw_estimate(kReversed, 0.05);
  CHECK(std::abs(mw.tau_hat - 0.25) < 1e-15);
  CHECK(std::abs(mw.estimate.theta_hat - 1.0 / 3.0) < 1e-15);

  auto warned = clamp_to_family(mw.estimate, false);
  CHECK(warned.theta_hat == mw.estimate.theta_hat);
  CHECK_FALSE(warned.clamped);
  CHECK_FALSE(warned.warnings.empty());

  auto clamped = clamp_to_family(mw.estimate, true);
  CHECK(clamped.theta_hat == 1.0);
  CHECK(clamped.clamped);
  CHECK(clamped.ci_theta.lo >= 1.0);
  CHECK(clamped.ci_theta.hi >= 1.0);
  CHECK_FALSE(clamped.warnings.empty());
}

TEST_CASE("wald test is exactly null at a balanced split") {
  auto report = mw_estimate({{1.0, 4.0}, {2.0, 3.0}}, 0.05);
  CHECK(report.tau_hat == 0.5);
  CHECK(report.estimate.theta_hat == 1.0);
  CHECK(report.wald_z == 0.0);
  CHECK(report.wald_p == 1.0);
  CHECK_FALSE(report.youden.has_value());
}

TEST_CASE("duplicating every observation shrinks the CI by sqrt two") {
  auto rng = rng_stream(31, 7, 0);
  TwoSampleData data;
  data.x.resize(40);
  data.y.resize(40);
  for (auto& v : data.x) v = rng.next_uniform();
  for (auto& v : data.y) v = std::sqrt(rng.next_uniform());
  auto doubled = duplicated(data);

  for (auto estimator : {mw_estimate, rojo_estimate}) {
    auto small = estimator(data, 0.05);
    auto big = estimator(doubled, 0.05);
    CHECK(big.estimate.theta_hat == small.estimate.theta_hat);
    double w1 = small.estimate.ci_theta.hi - small.estimate.ci_theta.lo;
    double w2 = big.estimate.ci_theta.hi - big.estimate.ci_theta.lo;
    CHECK(std::abs(w1 / w2 - std::sqrt(2.0)) < 1e-12);
  }
}

TEST_CASE("estimates depend only on ranks") {
  auto rng = rng_stream(32, 7, 1);
  TwoSampleData data;
  data.x.resize(60);
  data.y.resize(60);
  for (auto& v : data.x) v = -std::log(rng.next_uniform());
  for (auto& v : data.y) v = -std::log(rng.next_uniform()) * 1.7;

  auto shift = data, affine = data, power = data;
  for (auto* g : {&shift.x, &shift.y})
    for (auto& v : *g) v += 6.85;
  for (auto* g : {&affine.x, &affine.y})
    for (auto& v : *g) v = 3.0 * v + 1.0;
  for (auto* g : {&power.x, &power.y})
    for (auto& v : *g) v = yeo_johnson(v, 0.5);

  for (auto estimator : {pl_estimate, mw_estimate, rojo_estimate}) {
    auto base = estimator(data, 0.05);
    for (const auto& variant : {shift, affine, power}) {
      auto alt = estimator(variant, 0.05);
      CHECK(alt.estimate.theta_hat == base.estimate.theta_hat);
      CHECK(alt.estimate.se_theta == base.estimate.se_theta);
      CHECK(alt.tau_hat == base.tau_hat);
    }
  }
}

TEST_CASE("ratio links tau and theta in every report") {
  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    auto data = random_tied_data(rep + 6000, 25, 9);
    auto mw = mw_auc(data);
    if (mw.value <= 0.0 || mw.value >= 1.0) continue;
    auto report = mw_estimate(data, 0.05);
    double theta = report.estimate.theta_hat;
    CHECK(std::abs(theta - report.tau_hat / (1 - report.tau_hat)) <= 1e-15 * (1 + theta));
  }
  auto pl = pl_estimate(kFixture, 0.05);
  double t = pl.estimate.theta_hat;
  CHECK(std::abs(pl.tau_hat - t / (1 + t)) < 1e-15);
}

TEST_CASE("method names") {
  CHECK(method_name(Method::pl) == "pl");
  CHECK(method_name(Method::mw) == "mw");
  CHECK(method_name(Method::rojo) == "rojo");
}

}  // TEST_SUITE

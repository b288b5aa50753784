#include <benchmark/benchmark.h>

#include <resroc/estimators.hpp>
#include <resroc/rng.hpp>
#include <resroc/simulation.hpp>

namespace {

resroc::TwoSampleData make_data(std::size_t m, std::size_t n, double theta) {
  auto rng = resroc::rng_stream(4242, 0, 0);
  resroc::TwoSampleData data;
  data.x = resroc::ged_sample({1.0, 1.0}, m, rng);
  data.y = resroc::ged_sample({1.0, theta}, n, rng);
  return data;
}

void bm_mw_auc(benchmark::State& state) {
  auto data = make_data(static_cast<std::size_t>(state.range(0)),
                        static_cast<std::size_t>(state.range(0)), 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(resroc::mw_auc(data).value);
  }
}
BENCHMARK(bm_mw_auc)->Arg(60)->Arg(500)->Arg(5000);

void bm_rojo_auc(benchmark::State& state) {
  auto data = make_data(static_cast<std::size_t>(state.range(0)),
                        static_cast<std::size_t>(state.range(0)), 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(resroc::rojo_auc(data));
  }
}
BENCHMARK(bm_rojo_auc)->Arg(60)->Arg(500)->Arg(5000);

void bm_pl_estimate(benchmark::State& state) {
  auto data = make_data(static_cast<std::size_t>(state.range(0)),
                        static_cast<std::size_t>(state.range(0)), 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(resroc::pl_estimate(data, 0.05).estimate.theta_hat);
  }
}
BENCHMARK(bm_pl_estimate)->Arg(60)->Arg(500);

void bm_ged_sample(benchmark::State& state) {
  auto rng = resroc::rng_stream(4242, 1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        resroc::ged_sample({1.0, 2.0}, static_cast<std::size_t>(state.range(0)), rng));
  }
}
BENCHMARK(bm_ged_sample)->Arg(60)->Arg(1000);

void bm_run_study(benchmark::State& state) {
  resroc::StudyConfig config;
  config.theta_values = {2.0};
  config.size_pairs = {{60, 60}};
  config.replications = static_cast<int>(state.range(0));
  config.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(resroc::run_study(config).rows.front().avg_theta);
  }
}
BENCHMARK(bm_run_study)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

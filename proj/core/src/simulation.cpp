#include "resroc/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "resroc/errors.hpp"

namespace resroc {

double ged_cdf(const GedParams& params, double t) {
  if (!(params.lambda > 0.0 && params.theta > 0.0)) {
    throw std::invalid_argument("GED parameters must be positive");
  }
  if (t <= 0.0) return 0.0;
  // (1 - exp(-lambda t))^theta via expm1 for small lambda*t.
  return std::pow(-std::expm1(-params.lambda * t), params.theta);
}

double ged_quantile(const GedParams& params, double u) {
  if (!(params.lambda > 0.0 && params.theta > 0.0)) {
    throw std::invalid_argument("GED parameters must be positive");
  }
  if (!(u > 0.0 && u < 1.0)) throw std::invalid_argument("u must lie in (0, 1)");
  return -std::log1p(-std::pow(u, 1.0 / params.theta)) / params.lambda;
}

std::vector<double> ged_sample(const GedParams& params, std::size_t size,
                               RngStream& stream) {
  if (size == 0) throw std::invalid_argument("sample size must be positive");
  std::vector<double> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    out.push_back(ged_quantile(params, stream.next_uniform()));
  }
  return out;
}

namespace {

struct MethodRep {
  double theta = 0.0;
  bool has_youden = false;
  bool covered = false;
  bool failed = false;
};

void validate_config(const StudyConfig& config) {
  if (config.theta_values.empty()) throw std::invalid_argument("no theta values");
  for (double th : config.theta_values) {
    if (!(th > 0.0)) throw std::invalid_argument("theta values must be positive");
  }
  if (config.size_pairs.empty()) throw std::invalid_argument("no size pairs");
  for (const auto& [m, n] : config.size_pairs) {
    if (m < 2 || n < 2) throw std::invalid_argument("group sizes must be at least 2");
  }
  if (config.replications < 1) throw std::invalid_argument("replications must be >= 1");
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (config.methods.empty()) throw std::invalid_argument("no methods selected");
  if (config.threads < 0) throw std::invalid_argument("threads must be >= 0");
}

InferenceReport run_method(Method method, const TwoSampleData& data, double alpha) {
  switch (method) {
    case Method::pl:
      return pl_estimate(data, alpha);
    case Method::mw:
      return mw_estimate(data, alpha);
    case Method::rojo:
      return rojo_estimate(data, alpha);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace

SimulationReport run_study(const StudyConfig& config) {
  validate_config(config);
  const auto start = std::chrono::steady_clock::now();

  unsigned worker_count = config.threads > 0
                              ? static_cast<unsigned>(config.threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t reps = static_cast<std::size_t>(config.replications);
  worker_count = static_cast<unsigned>(
      std::min<std::size_t>(worker_count, reps));

  const std::size_t n_methods = config.methods.size();
  SimulationReport report;

  std::uint32_t cell_index = 0;
  for (double theta_true : config.theta_values) {
    for (const auto& [m, n] : config.size_pairs) {
      // Slot-per-replication results; workers never share slots, and the
      // reduction below walks them in replication order.
      std::vector<MethodRep> slots(reps * n_methods);

      auto run_range = [&, m = m, n = n](std::size_t first, std::size_t last) {
        const GedParams negative{1.0, 1.0};
        const GedParams positive{1.0, theta_true};
        for (std::size_t r = first; r < last; ++r) {
          RngStream stream =
              rng_stream(config.seed, cell_index, static_cast<std::uint32_t>(r));
          TwoSampleData data;
          data.x = ged_sample(negative, static_cast<std::size_t>(m), stream);
          data.y = ged_sample(positive, static_cast<std::size_t>(n), stream);
          for (std::size_t k = 0; k < n_methods; ++k) {
            MethodRep& slot = slots[r * n_methods + k];
            try {
              const InferenceReport rep = run_method(config.methods[k], data, config.alpha);
              slot.theta = rep.estimate.theta_hat;
              slot.has_youden = rep.youden.has_value();
              slot.covered = rep.estimate.ci_theta.lo <= theta_true &&
                             theta_true <= rep.estimate.ci_theta.hi;
            } catch (const EstimationError&) {
              slot.failed = true;
            }
          }
        }
      };

      if (worker_count <= 1) {
        run_range(0, reps);
      } else {
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        const std::size_t chunk = (reps + worker_count - 1) / worker_count;
        for (unsigned w = 0; w < worker_count; ++w) {
          const std::size_t first = w * chunk;
          const std::size_t last = std::min(reps, first + chunk);
          if (first >= last) break;
          workers.emplace_back(run_range, first, last);
        }
        for (auto& t : workers) t.join();
      }

      for (std::size_t k = 0; k < n_methods; ++k) {
        CellStats cell;
        cell.theta = theta_true;
        cell.m = m;
        cell.n = n;
        cell.method = config.methods[k];

        double sum_theta = 0.0;
        std::int64_t used = 0, covered = 0, with_youden = 0;
        for (std::size_t r = 0; r < reps; ++r) {
          const MethodRep& slot = slots[r * n_methods + k];
          if (slot.failed) {
            ++cell.failures;
            continue;
          }
          ++used;
          sum_theta += slot.theta;
          if (slot.has_youden) ++with_youden;
          if (slot.covered) ++covered;
        }
        cell.reps_used = used;
        if (used > 0) {
          cell.avg_theta = sum_theta / static_cast<double>(used);
          cell.avg_tau = auc_from_theta(cell.avg_theta);
          if (cell.avg_theta > 1.0) cell.avg_youden = youden_from_theta(cell.avg_theta);
          cell.coverage = static_cast<double>(covered) / static_cast<double>(used);
          double ss_centered = 0.0, ss_true = 0.0;
          for (std::size_t r = 0; r < reps; ++r) {
            const MethodRep& slot = slots[r * n_methods + k];
            if (slot.failed) continue;
            ss_centered += (slot.theta - cell.avg_theta) * (slot.theta - cell.avg_theta);
            ss_true += (slot.theta - theta_true) * (slot.theta - theta_true);
          }
          cell.sd_theta =
              used > 1 ? std::sqrt(ss_centered / static_cast<double>(used - 1)) : 0.0;
          cell.rmse_theta = std::sqrt(ss_true / static_cast<double>(used));
        }
        cell.youden_count = with_youden;
        report.rows.push_back(cell);
      }
      ++cell_index;
    }
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace resroc

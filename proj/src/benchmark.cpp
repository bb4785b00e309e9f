#include "phs/benchmark.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "phs/errors.hpp"
#include "phs/gibbs_gaussian.hpp"
#include "phs/gibbs_logistic.hpp"
#include "phs/summary.hpp"

namespace phs {

MetricsReport run_replication(const SimSpec& spec, const SamplerConfig& config,
                              double selection_level) {
  const SimData sim = generate(spec);

  SamplerConfig cfg = config;
  cfg.seed = mix_seed(spec.seed, 0x9);

  const PosteriorDraws draws = spec.family == Family::gaussian
                                   ? run_chain(sim.train, cfg)
                                   : run_chain_logistic(sim.train, cfg);

  const Coefficients estimate =
      draws.posterior_mean(sim.train.p(), sim.train.q());

  MetricsReport report = selection_metrics(
      select_variables(draws.beta, selection_level), sim.truth.support());
  const auto [est_beta, est_theta] = estimation_errors(estimate, sim.truth);
  report.est_beta = est_beta;
  report.est_theta = est_theta;
  report.pred = prediction_error(estimate, sim.test);
  return report;
}

namespace {

MetricsReport combine(const std::vector<MetricsReport>& reps, bool want_sd) {
  const double n = static_cast<double>(reps.size());
  auto moment = [&](auto field) {
    double sum = 0.0;
    for (const auto& r : reps) sum += field(r);
    const double mean = sum / n;
    if (!want_sd) return mean;
    if (reps.size() < 2) return 0.0;
    double ss = 0.0;
    for (const auto& r : reps) {
      const double d = field(r) - mean;
      ss += d * d;
    }
    return std::sqrt(ss / (n - 1.0));
  };
  MetricsReport out;
  out.est_beta = moment([](const MetricsReport& r) { return r.est_beta; });
  out.est_theta = moment([](const MetricsReport& r) { return r.est_theta; });
  out.pred = moment([](const MetricsReport& r) { return r.pred; });
  out.accuracy = moment([](const MetricsReport& r) { return r.accuracy; });
  out.fdr = moment([](const MetricsReport& r) { return r.fdr; });
  out.fpr = moment([](const MetricsReport& r) { return r.fpr; });
  return out;
}

}  // namespace

MetricsReport BenchmarkResult::mean() const {
  if (replications.empty()) throw DomainError("BenchmarkResult: empty");
  return combine(replications, false);
}

MetricsReport BenchmarkResult::sd() const {
  if (replications.empty()) throw DomainError("BenchmarkResult: empty");
  return combine(replications, true);
}

int resolve_thread_count(int requested, int n_tasks) {
  int limit = requested;
  if (limit <= 0) {
    if (const char* env = std::getenv("HSP_THREADS")) {
      limit = std::atoi(env);
    }
  }
  if (limit <= 0) {
    limit = static_cast<int>(std::thread::hardware_concurrency());
    if (limit <= 0) limit = 1;
  }
  return std::max(1, std::min(limit, n_tasks));
}

BenchmarkResult run_benchmark(const SimSpec& spec, const SamplerConfig& config,
                              int n_reps, double selection_level,
                              int n_threads) {
  if (n_reps < 1) throw ConfigError("run_benchmark: need n_reps >= 1");
  BenchmarkResult result;
  result.replications.resize(n_reps);

  const int workers = resolve_thread_count(n_threads, n_reps);
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&] {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= n_reps) return;
      try {
        SimSpec rep_spec = spec;
        rep_spec.seed = mix_seed(spec.seed, static_cast<std::uint64_t>(r));
        result.replications[r] =
            run_replication(rep_spec, config, selection_level);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return result;
}

}  // namespace phs

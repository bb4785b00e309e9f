#pragma once

#include <vector>

#include "phs/metrics.hpp"
#include "phs/model.hpp"
#include "phs/simgen.hpp"

namespace phs {

// One simulate-fit-score cycle. The replication owns seeds derived from
// spec.seed so independent replications are reproducible in isolation.
MetricsReport run_replication(const SimSpec& spec, const SamplerConfig& config,
                              double selection_level = 0.95);

struct BenchmarkResult {
  std::vector<MetricsReport> replications;
  MetricsReport mean() const;
  MetricsReport sd() const;  // sample sd, 0 for a single replication
};

// n_threads = 0 means min(HSP_THREADS or hardware concurrency, n_reps).
BenchmarkResult run_benchmark(const SimSpec& spec, const SamplerConfig& config,
                              int n_reps, double selection_level = 0.95,
                              int n_threads = 0);

int resolve_thread_count(int requested, int n_tasks);

}  // namespace phs

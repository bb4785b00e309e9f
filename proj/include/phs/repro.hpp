#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phs/benchmark.hpp"
#include "phs/simgen.hpp"

namespace phs {

struct MetricBand {
  std::string metric;  // est_beta, est_theta, pred, accuracy
  double lower;
  double upper;
};

// One desk-scale reproduction of a published table row: 20 replications
// against bands of paper mean +/- 3 sd (10 replications for the heavy
// high-dimensional and logistic rows).
struct ReproCase {
  std::string name;
  std::string source_table;
  SimSpec spec;
  int reps = 20;
  std::vector<MetricBand> bands;
};

struct ReproResult {
  std::string name;
  std::string source_table;
  bool passed = false;
  MetricsReport mean;
  MetricsReport sd;
  std::vector<std::string> failures;  // one line per violated band
};

std::vector<ReproCase> default_repro_cases();

ReproResult run_repro_case(const ReproCase& c, int n_threads = 0);
std::vector<ReproResult> run_repro_suite(int n_threads = 0);

// markdown pass/fail table
std::string format_repro_report(const std::vector<ReproResult>& results);

}  // namespace phs

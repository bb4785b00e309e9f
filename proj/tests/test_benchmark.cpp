#include <doctest.h>

#include <cstdlib>

#include "phs/benchmark.hpp"
#include "phs/errors.hpp"
#include "phs/repro.hpp"

using namespace phs;

namespace {

SamplerConfig quick_config() {
  SamplerConfig c;
  c.n_iter = 400;
  c.burn_in = 100;
  return c;
}

}  // namespace

TEST_CASE("run_replication is deterministic in the spec seed") {
  SimSpec spec;
  spec.n = 80;
  spec.seed = 3;
  const MetricsReport a = run_replication(spec, quick_config());
  const MetricsReport b = run_replication(spec, quick_config());
  CHECK(a.est_beta == b.est_beta);
  CHECK(a.pred == b.pred);
  CHECK(a.tp == b.tp);

  spec.seed = 4;
  const MetricsReport c = run_replication(spec, quick_config());
  CHECK(a.est_beta != c.est_beta);
}

TEST_CASE("benchmark aggregates mean and sample sd") {
  BenchmarkResult r;
  MetricsReport a, b, c;
  a.est_beta = 1.0;
  b.est_beta = 2.0;
  c.est_beta = 3.0;
  a.pred = b.pred = c.pred = 0.5;
  r.replications = {a, b, c};
  CHECK(r.mean().est_beta == doctest::Approx(2.0));
  CHECK(r.sd().est_beta == doctest::Approx(1.0));
  CHECK(r.mean().pred == doctest::Approx(0.5));
  CHECK(r.sd().pred == doctest::Approx(0.0));

  r.replications = {a};
  CHECK(r.sd().est_beta == 0.0);  // single replication

  r.replications.clear();
  CHECK_THROWS_AS((void)r.mean(), DomainError);
}

TEST_CASE("parallel and serial benchmarks agree exactly") {
  SimSpec spec;
  spec.n = 60;
  spec.seed = 9;
  const BenchmarkResult serial =
      run_benchmark(spec, quick_config(), 4, 0.95, 1);
  const BenchmarkResult parallel =
      run_benchmark(spec, quick_config(), 4, 0.95, 3);
  REQUIRE(serial.replications.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(serial.replications[i].est_beta ==
          parallel.replications[i].est_beta);
    CHECK(serial.replications[i].pred == parallel.replications[i].pred);
  }
  CHECK_THROWS_AS((void)run_benchmark(spec, quick_config(), 0), ConfigError);
}

TEST_CASE("HSP_THREADS caps the default worker count") {
  setenv("HSP_THREADS", "2", 1);
  CHECK(resolve_thread_count(0, 100) == 2);
  CHECK(resolve_thread_count(0, 1) == 1);  // never more than tasks
  CHECK(resolve_thread_count(5, 100) == 5);  // explicit request wins
  unsetenv("HSP_THREADS");
  CHECK(resolve_thread_count(3, 2) == 2);
  CHECK(resolve_thread_count(0, 4) >= 1);
}

TEST_CASE("repro cases cover every published table") {
  const auto cases = default_repro_cases();
  CHECK(cases.size() == 12);
  bool saw_missing = false, saw_logistic = false, saw_highdim = false;
  for (const auto& c : cases) {
    CHECK(!c.bands.empty());
    CHECK(c.reps >= 10);
    if (c.spec.missing_fraction > 0.0) saw_missing = true;
    if (c.spec.family == Family::binomial) saw_logistic = true;
    if (c.spec.p > c.spec.n) saw_highdim = true;
  }
  CHECK(saw_missing);
  CHECK(saw_logistic);
  CHECK(saw_highdim);
}

TEST_CASE("repro report formats one row per case") {
  ReproResult r;
  r.name = "demo";
  r.source_table = "Table 9";
  r.passed = false;
  r.failures = {"est_beta = 9.99 outside [0.00, 1.00]"};
  const std::string md = format_repro_report({r});
  CHECK(md.find("| demo | Table 9 |") != std::string::npos);
  CHECK(md.find("FAIL") != std::string::npos);
  CHECK(md.find("9.99") != std::string::npos);
}

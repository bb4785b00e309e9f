#include "phs/repro.hpp"

#include <cstdio>

#include "phs/errors.hpp"

namespace phs {

namespace {

SimSpec spec_for(Setting setting, int n, std::uint64_t seed) {
  SimSpec s;
  s.setting = setting;
  s.n = n;
  s.seed = seed;
  return s;
}

double metric_value(const MetricsReport& r, const std::string& name) {
  if (name == "est_beta") return r.est_beta;
  if (name == "est_theta") return r.est_theta;
  if (name == "pred") return r.pred;
  if (name == "accuracy") return r.accuracy;
  if (name == "fdr") return r.fdr;
  if (name == "fpr") return r.fpr;
  throw ConfigError("unknown metric '" + name + "'");
}

std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

}  // namespace

std::vector<ReproCase> default_repro_cases() {
  std::vector<ReproCase> cases;

  // bands: published mean +/- 3 published sd, widened for 20 desk-scale
  // replications and clipped at natural bounds
  {
    ReproCase c{"SettingI-n200", "Table 2", spec_for(Setting::I, 200, 11)};
    c.bands = {{"est_beta", 0.02, 0.12},
               {"est_theta", 0.0, 0.45},
               {"pred", 0.9, 1.7},
               {"accuracy", 0.90, 1.0}};
    cases.push_back(c);
  }
  {
    ReproCase c{"SettingII-n200", "Table 2", spec_for(Setting::II, 200, 12)};
    c.bands = {{"est_beta", 0.0, 0.6}, {"pred", 0.8, 2.1}};
    cases.push_back(c);
  }
  {
    ReproCase c{"SettingIII-n200", "Table 3", spec_for(Setting::III, 200, 13)};
    c.bands = {{"est_beta", 0.0, 0.3},
               {"pred", 0.8, 2.2},
               {"accuracy", 0.90, 1.0}};
    cases.push_back(c);
  }
  {
    ReproCase c{"SettingIV-n200", "Table 3", spec_for(Setting::IV, 200, 14)};
    c.bands = {{"est_beta", 0.0, 1.1}, {"pred", 0.8, 2.1}};
    cases.push_back(c);
  }
  {
    ReproCase c{"SettingV-n200", "Table 4", spec_for(Setting::V, 200, 15)};
    c.bands = {{"est_beta", 0.0, 0.6}, {"pred", 0.8, 2.5}};
    cases.push_back(c);
  }
  {
    ReproCase c{"SettingVI-n500", "Table 4", spec_for(Setting::VI, 500, 16)};
    c.bands = {{"est_beta", 0.05, 1.0}, {"pred", 0.8, 1.8}};
    cases.push_back(c);
  }
  {
    ReproCase c{"HighDim-n100-p120", "Table 5", spec_for(Setting::I, 100, 17)};
    c.spec.p = 120;
    c.reps = 10;
    c.bands = {{"est_beta", 0.0, 1.5}, {"accuracy", 0.98, 1.0}};
    cases.push_back(c);
  }
  {
    ReproCase c{"Missing-30pct", "Table 6", spec_for(Setting::I, 200, 18)};
    c.spec.missing_fraction = 0.3;
    c.bands = {{"est_beta", 0.01, 0.11}, {"pred", 0.8, 2.0}};
    cases.push_back(c);
  }
  {
    ReproCase c{"Missing-70pct", "Table 6", spec_for(Setting::I, 200, 19)};
    c.spec.missing_fraction = 0.7;
    c.bands = {{"est_beta", 0.0, 1.1}};
    cases.push_back(c);
  }
  {
    ReproCase c{"NoInteraction-n500", "Table 7", spec_for(Setting::I, 500, 20)};
    c.spec.interactions = false;
    c.bands = {{"est_beta", 0.0, 0.06}, {"accuracy", 0.99, 1.0}};
    cases.push_back(c);
  }
  {
    ReproCase c{"LogisticI-n200", "Table 8", spec_for(Setting::I, 200, 21)};
    c.spec.family = Family::binomial;
    c.reps = 10;
    c.bands = {{"est_beta", 0.0, 3.0}};
    cases.push_back(c);
  }
  {
    ReproCase c{"LogisticI-n1000", "Table 8", spec_for(Setting::I, 1000, 22)};
    c.spec.family = Family::binomial;
    c.reps = 10;
    c.bands = {{"est_beta", 0.0, 0.6}};
    cases.push_back(c);
  }
  return cases;
}

ReproResult run_repro_case(const ReproCase& c, int n_threads) {
  const SamplerConfig config;  // paper defaults: 5000 iterations, 500 burn-in
  const BenchmarkResult bench =
      run_benchmark(c.spec, config, c.reps, 0.95, n_threads);

  ReproResult r;
  r.name = c.name;
  r.source_table = c.source_table;
  r.mean = bench.mean();
  r.sd = bench.sd();
  r.passed = true;
  for (const auto& band : c.bands) {
    const double v = metric_value(r.mean, band.metric);
    if (v < band.lower || v > band.upper) {
      r.passed = false;
      r.failures.push_back(band.metric + " = " + fmt2(v) + " outside [" +
                           fmt2(band.lower) + ", " + fmt2(band.upper) + "]");
    }
  }
  return r;
}

std::vector<ReproResult> run_repro_suite(int n_threads) {
  std::vector<ReproResult> results;
  for (const auto& c : default_repro_cases()) {
    results.push_back(run_repro_case(c, n_threads));
  }
  return results;
}

std::string format_repro_report(const std::vector<ReproResult>& results) {
  std::string md;
  md += "| Case | Source | Est(beta) | Est(theta) | Pred | Accuracy | Status |\n";
  md += "|---|---|---|---|---|---|---|\n";
  for (const auto& r : results) {
    md += "| " + r.name + " | " + r.source_table + " | " +
          fmt2(r.mean.est_beta) + " (" + fmt2(r.sd.est_beta) + ") | " +
          fmt2(r.mean.est_theta) + " (" + fmt2(r.sd.est_theta) + ") | " +
          fmt2(r.mean.pred) + " (" + fmt2(r.sd.pred) + ") | " +
          fmt2(r.mean.accuracy) + " (" + fmt2(r.sd.accuracy) + ") | " +
          (r.passed ? "pass" : "FAIL") + " |\n";
    for (const auto& f : r.failures) md += "|  |  |  |  |  |  | " + f + " |\n";
  }
  return md;
}

}  // namespace phs

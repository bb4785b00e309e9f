// Command-line front end: fit, simulate, benchmark, repro.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "phs/benchmark.hpp"
#include "phs/csv.hpp"
#include "phs/errors.hpp"
#include "phs/gibbs_gaussian.hpp"
#include "phs/gibbs_logistic.hpp"
#include "phs/metrics.hpp"
#include "phs/repro.hpp"
#include "phs/simgen.hpp"
#include "phs/summary.hpp"

namespace fs = std::filesystem;
using namespace phs;

namespace {

// exit codes: 0 ok, 2 parse, 3 dimension/domain, 4 singularity, 5 config
constexpr int kExitParse = 2;
constexpr int kExitShape = 3;
constexpr int kExitSingular = 4;
constexpr int kExitConfig = 5;

struct CommonOpts {
  int iters = 5000;
  int burnin = 500;
  int thin = 1;
  std::uint64_t seed = 1;
  bool pliable = true;
  double level = 0.95;
  std::string out_dir = ".";
};

void add_sampler_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--iters", o.iters, "Gibbs iterations");
  cmd->add_option("--burnin", o.burnin, "burn-in iterations to discard");
  cmd->add_option("--thin", o.thin, "thinning interval");
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--pliable", o.pliable,
                  "false restricts to plain horseshoe regression");
  cmd->add_option("--level", o.level, "credible level for selection");
  cmd->add_option("--out", o.out_dir, "output directory");
}

SamplerConfig sampler_config(const CommonOpts& o, bool store_imputations) {
  SamplerConfig c;
  c.n_iter = o.iters;
  c.burn_in = o.burnin;
  c.thin = o.thin;
  c.seed = o.seed;
  c.pliable = o.pliable;
  c.store_imputations = store_imputations;
  c.validate();
  return c;
}

struct SimFlags {
  std::string setting = "I";
  int n = 200, p = 10, q = 4, n_test = 50;
  double rho = 0.5, missing = 0.0;
  bool no_interactions = false;
  std::string family = "gaussian";
};

void add_sim_flags(CLI::App* cmd, SimFlags& f) {
  cmd->add_option("--setting", f.setting, "simulation setting I..VI");
  cmd->add_option("--n", f.n, "training sample size");
  cmd->add_option("--p", f.p, "number of predictors");
  cmd->add_option("--q", f.q, "number of modifiers");
  cmd->add_option("--n-test", f.n_test, "test sample size");
  cmd->add_option("--rho", f.rho, "AR(1) correlation for settings III/IV");
  cmd->add_option("--missing", f.missing, "fraction of missing responses");
  cmd->add_flag("--no-interactions", f.no_interactions,
                "generate with all interaction effects zero");
  cmd->add_option("--family", f.family, "gaussian or binomial");
}

Setting parse_setting(const std::string& s) {
  if (s == "I") return Setting::I;
  if (s == "II") return Setting::II;
  if (s == "III") return Setting::III;
  if (s == "IV") return Setting::IV;
  if (s == "V") return Setting::V;
  if (s == "VI") return Setting::VI;
  throw ConfigError("unknown setting '" + s + "' (expected I..VI)");
}

Family parse_family(const std::string& s) {
  if (s == "gaussian") return Family::gaussian;
  if (s == "binomial") return Family::binomial;
  throw ConfigError("unknown family '" + s + "'");
}

SimSpec to_spec(const SimFlags& f, std::uint64_t seed) {
  SimSpec spec;
  spec.setting = parse_setting(f.setting);
  spec.n = f.n;
  spec.p = f.p;
  spec.q = f.q;
  spec.n_test = f.n_test;
  spec.rho_x = f.rho;
  spec.missing_fraction = f.missing;
  spec.interactions = !f.no_interactions;
  spec.family = parse_family(f.family);
  spec.seed = seed;
  spec.validate();
  return spec;
}

std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::vector<std::string> parameter_names(Eigen::Index p, Eigen::Index q,
                                         bool gaussian) {
  std::vector<std::string> names;
  names.push_back("beta0");
  for (Eigen::Index t = 0; t < q; ++t)
    names.push_back("theta0_" + std::to_string(t + 1));
  for (Eigen::Index j = 0; j < p; ++j)
    names.push_back("beta_" + std::to_string(j + 1));
  for (Eigen::Index j = 0; j < p; ++j)
    for (Eigen::Index t = 0; t < q; ++t)
      names.push_back("theta_" + std::to_string(j + 1) + "_" +
                      std::to_string(t + 1));
  names.push_back("tau_sq");
  if (gaussian) names.push_back("sigma_sq");
  return names;
}

// draws as one column per named parameter, rows = stored iterations
Eigen::MatrixXd draw_matrix(const PosteriorDraws& d, Eigen::Index p,
                            Eigen::Index q) {
  const bool gaussian = d.sigma_sq.size() > 0;
  const Eigen::Index k = d.n_stored();
  Eigen::MatrixXd m(k, 1 + q + p + p * q + 1 + (gaussian ? 1 : 0));
  Eigen::Index c = 0;
  m.col(c++) = d.beta0;
  for (Eigen::Index t = 0; t < q; ++t) m.col(c++) = d.theta0.col(t);
  for (Eigen::Index j = 0; j < p; ++j) m.col(c++) = d.beta.col(j);
  for (Eigen::Index j = 0; j < p; ++j)
    for (Eigen::Index t = 0; t < q; ++t) m.col(c++) = d.Theta.col(j * q + t);
  m.col(c++) = d.tau_sq;
  if (gaussian) m.col(c++) = d.sigma_sq;
  return m;
}

struct Standardization {
  Eigen::VectorXd x_mean, x_scale, z_mean, z_scale;
};

Standardization standardize(Dataset& data) {
  Standardization s;
  auto scale_cols = [](Eigen::MatrixXd& m, Eigen::VectorXd& mean,
                       Eigen::VectorXd& scale) {
    const auto n = static_cast<double>(m.rows());
    mean = m.colwise().mean();
    scale.resize(m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      m.col(c).array() -= mean(c);
      double sd = std::sqrt(m.col(c).squaredNorm() / std::max(1.0, n - 1.0));
      if (sd <= 0.0) sd = 1.0;
      scale(c) = sd;
      m.col(c) /= sd;
    }
  };
  scale_cols(data.X, s.x_mean, s.x_scale);
  scale_cols(data.Z, s.z_mean, s.z_scale);
  return s;
}

// map each stored draw back to the raw-covariate scale
void destandardize_draws(PosteriorDraws& d, const Standardization& s) {
  const Eigen::Index p = s.x_mean.size();
  const Eigen::Index q = s.z_mean.size();
  for (Eigen::Index k = 0; k < d.n_stored(); ++k) {
    Eigen::MatrixXd theta_raw(p, q);
    for (Eigen::Index j = 0; j < p; ++j)
      for (Eigen::Index t = 0; t < q; ++t)
        theta_raw(j, t) =
            d.Theta(k, j * q + t) / (s.x_scale(j) * s.z_scale(t));

    Eigen::VectorXd beta_raw(p);
    for (Eigen::Index j = 0; j < p; ++j) {
      beta_raw(j) = d.beta(k, j) / s.x_scale(j);
      for (Eigen::Index t = 0; t < q; ++t)
        beta_raw(j) -= theta_raw(j, t) * s.z_mean(t);
    }
    Eigen::VectorXd theta0_raw(q);
    for (Eigen::Index t = 0; t < q; ++t) {
      theta0_raw(t) = d.theta0(k, t) / s.z_scale(t);
      for (Eigen::Index j = 0; j < p; ++j)
        theta0_raw(t) -= theta_raw(j, t) * s.x_mean(j);
    }
    double beta0_raw = d.beta0(k);
    for (Eigen::Index t = 0; t < q; ++t)
      beta0_raw -= d.theta0(k, t) * s.z_mean(t) / s.z_scale(t);
    for (Eigen::Index j = 0; j < p; ++j)
      beta0_raw -= d.beta(k, j) * s.x_mean(j) / s.x_scale(j);
    for (Eigen::Index j = 0; j < p; ++j)
      for (Eigen::Index t = 0; t < q; ++t)
        beta0_raw += theta_raw(j, t) * s.x_mean(j) * s.z_mean(t);

    d.beta0(k) = beta0_raw;
    d.theta0.row(k) = theta0_raw.transpose();
    d.beta.row(k) = beta_raw.transpose();
    for (Eigen::Index j = 0; j < p; ++j)
      for (Eigen::Index t = 0; t < q; ++t)
        d.Theta(k, j * q + t) = theta_raw(j, t);
  }
}

void write_metrics_csv(const std::string& path, const MetricsReport& r,
                       Eigen::Index n_missing) {
  std::vector<std::string> lines;
  lines.push_back(
      "est_beta,est_theta,pred,accuracy,fdr,fpr,tp,fp,fn,tn,n_missing");
  lines.push_back(csv::format_double(r.est_beta) + "," +
                  csv::format_double(r.est_theta) + "," +
                  csv::format_double(r.pred) + "," +
                  csv::format_double(r.accuracy) + "," +
                  csv::format_double(r.fdr) + "," +
                  csv::format_double(r.fpr) + "," + std::to_string(r.tp) +
                  "," + std::to_string(r.fp) + "," + std::to_string(r.fn) +
                  "," + std::to_string(r.tn) + "," +
                  std::to_string(n_missing));
  csv::write_lines(path, lines);
}

int cmd_fit(const CommonOpts& opts, const std::string& x_path,
            const std::string& z_path, const std::string& y_path,
            const std::string& family, bool do_standardize, bool store_draws) {
  Dataset data;
  data.X = csv::read_matrix(x_path);
  data.Z = csv::read_matrix(z_path);
  const csv::ResponseColumn yc = csv::read_response(y_path);
  data.y = yc.values;
  data.missing = yc.missing;
  data.family = parse_family(family);
  data.validate();

  Standardization st;
  if (do_standardize) st = standardize(data);

  const SamplerConfig config = sampler_config(opts, data.has_missing());
  PosteriorDraws draws = data.family == Family::gaussian
                             ? run_chain(data, config)
                             : run_chain_logistic(data, config);
  if (do_standardize) destandardize_draws(draws, st);

  const auto p = data.p();
  const auto q = data.q();
  fs::create_directories(opts.out_dir);
  const auto out = [&](const std::string& name) {
    return (fs::path(opts.out_dir) / name).string();
  };

  const Eigen::MatrixXd dm = draw_matrix(draws, p, q);
  const auto names = parameter_names(p, q, data.family == Family::gaussian);

  // summary.csv: posterior means plus run metadata
  {
    std::vector<std::string> lines;
    lines.push_back("parameter,estimate");
    for (Eigen::Index c = 0; c < dm.cols(); ++c)
      lines.push_back(names[c] + "," +
                      csv::format_double(dm.col(c).mean()));
    lines.push_back("n_imputed," + std::to_string(data.n_missing()));
    csv::write_lines(out("summary.csv"), lines);
  }

  // intervals.csv at 95% and 90%
  {
    std::vector<std::string> lines;
    lines.push_back("parameter,level,lower,upper");
    for (double level : {0.95, 0.90}) {
      for (Eigen::Index c = 0; c < dm.cols(); ++c) {
        const CredibleInterval ci = credible_interval(dm.col(c), level);
        lines.push_back(names[c] + "," + fmt2(level) + "," +
                        csv::format_double(ci.lower) + "," +
                        csv::format_double(ci.upper));
      }
    }
    csv::write_lines(out("intervals.csv"), lines);
  }

  // selection.csv over the main effects
  {
    const std::vector<bool> sel = select_variables(draws.beta, opts.level);
    std::vector<std::string> lines;
    lines.push_back("predictor,selected");
    for (Eigen::Index j = 0; j < p; ++j)
      lines.push_back("beta_" + std::to_string(j + 1) + "," +
                      (sel[j] ? "1" : "0"));
    csv::write_lines(out("selection.csv"), lines);
  }

  // acf.csv: autocorrelation of the main-effect chains
  {
    const int max_lag =
        static_cast<int>(std::min<Eigen::Index>(50, draws.n_stored() - 1));
    std::vector<std::string> lines;
    lines.push_back("parameter,lag,acf");
    for (Eigen::Index j = 0; j < p; ++j) {
      const Autocorrelation acf = autocorrelation(draws.beta.col(j), max_lag);
      if (acf.degenerate) {
        lines.push_back("beta_" + std::to_string(j + 1) + ",0,degenerate");
        continue;
      }
      for (int k = 0; k <= max_lag; ++k)
        lines.push_back("beta_" + std::to_string(j + 1) + "," +
                        std::to_string(k) + "," +
                        csv::format_double(acf.values(k)));
    }
    csv::write_lines(out("acf.csv"), lines);
  }

  if (store_draws) csv::write_matrix(out("draws.csv"), dm, names);
  std::cout << "fit complete: " << draws.n_stored() << " draws";
  if (data.n_missing() > 0)
    std::cout << ", " << data.n_missing() << " responses imputed";
  std::cout << "\n";
  return 0;
}

void write_dataset(const std::string& dir, const SimData& sim) {
  const auto out = [&](const std::string& name) {
    return (fs::path(dir) / name).string();
  };
  auto col_names = [](const std::string& stem, Eigen::Index k) {
    std::vector<std::string> names;
    for (Eigen::Index i = 0; i < k; ++i)
      names.push_back(stem + std::to_string(i + 1));
    return names;
  };
  csv::write_matrix(out("X.csv"), sim.train.X, col_names("x", sim.train.p()));
  csv::write_matrix(out("Z.csv"), sim.train.Z, col_names("z", sim.train.q()));
  {
    std::vector<std::string> lines;
    lines.push_back("y");
    for (Eigen::Index i = 0; i < sim.train.n(); ++i) {
      const bool miss = !sim.train.missing.empty() && sim.train.missing[i];
      lines.push_back(miss ? "NA" : csv::format_double(sim.train.y(i)));
    }
    csv::write_lines(out("y.csv"), lines);
  }
  csv::write_matrix(out("X_test.csv"), sim.test.X,
                    col_names("x", sim.test.p()));
  csv::write_matrix(out("Z_test.csv"), sim.test.Z,
                    col_names("z", sim.test.q()));
  csv::write_matrix(out("y_test.csv"), sim.test.y,
                    std::vector<std::string>{"y"});
  {
    std::vector<std::string> lines;
    lines.push_back("parameter,value");
    lines.push_back("beta0," + csv::format_double(sim.truth.beta0_true));
    for (Eigen::Index t = 0; t < sim.truth.theta0_true.size(); ++t)
      lines.push_back("theta0_" + std::to_string(t + 1) + "," +
                      csv::format_double(sim.truth.theta0_true(t)));
    for (Eigen::Index j = 0; j < sim.truth.beta_true.size(); ++j)
      lines.push_back("beta_" + std::to_string(j + 1) + "," +
                      csv::format_double(sim.truth.beta_true(j)));
    for (Eigen::Index j = 0; j < sim.truth.Theta_true.rows(); ++j)
      for (Eigen::Index t = 0; t < sim.truth.Theta_true.cols(); ++t)
        lines.push_back("theta_" + std::to_string(j + 1) + "_" +
                        std::to_string(t + 1) + "," +
                        csv::format_double(sim.truth.Theta_true(j, t)));
    csv::write_lines(out("truth.csv"), lines);
  }
}

int cmd_simulate(const CommonOpts& opts, const SimFlags& flags) {
  const SimSpec spec = to_spec(flags, opts.seed);
  const SimData sim = generate(spec);
  fs::create_directories(opts.out_dir);
  write_dataset(opts.out_dir, sim);

  const MetricsReport report =
      run_replication(spec, sampler_config(opts, false), opts.level);
  write_metrics_csv((fs::path(opts.out_dir) / "metrics.csv").string(), report,
                    sim.train.n_missing());
  std::cout << "simulate complete: Est(beta)=" << fmt2(report.est_beta)
            << " Pred=" << fmt2(report.pred)
            << " accuracy=" << fmt2(report.accuracy) << "\n";
  return 0;
}

int cmd_benchmark(const CommonOpts& opts, const SimFlags& flags, int reps,
                  int threads) {
  if (reps < 1) throw ConfigError("benchmark: need --reps >= 1");
  const SimSpec spec = to_spec(flags, opts.seed);
  const BenchmarkResult bench = run_benchmark(
      spec, sampler_config(opts, false), reps, opts.level, threads);
  const MetricsReport mean = bench.mean();
  const MetricsReport sd = bench.sd();

  fs::create_directories(opts.out_dir);
  std::vector<std::string> lines;
  lines.push_back("metric,mean,sd,formatted");
  auto row = [&](const std::string& name, double m, double s) {
    lines.push_back(name + "," + csv::format_double(m) + "," +
                    csv::format_double(s) + "," + fmt2(m) + " (" + fmt2(s) +
                    ")");
  };
  row("est_beta", mean.est_beta, sd.est_beta);
  row("est_theta", mean.est_theta, sd.est_theta);
  row("pred", mean.pred, sd.pred);
  row("accuracy", mean.accuracy, sd.accuracy);
  row("fdr", mean.fdr, sd.fdr);
  row("fpr", mean.fpr, sd.fpr);
  csv::write_lines((fs::path(opts.out_dir) / "aggregate.csv").string(), lines);

  for (const auto& line : lines) std::cout << line << "\n";
  return 0;
}

int cmd_repro(const std::string& out_dir, int threads) {
  const auto results = run_repro_suite(threads);
  const std::string report = format_repro_report(results);
  fs::create_directories(out_dir);
  csv::write_lines((fs::path(out_dir) / "repro_report.md").string(), {report});
  std::cout << report;
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian pliable regression with a shared horseshoe prior"};
  app.require_subcommand(1);
  app.set_config("--config", "", "declarative config file; flags override");

  CommonOpts fit_opts, sim_opts, bench_opts;
  SimFlags sim_flags, bench_flags;
  std::string x_path, z_path, y_path, fit_family = "gaussian";
  bool do_standardize = false, store_draws = false;
  int reps = 20, threads = 0;
  std::string repro_out = ".";

  auto* fit = app.add_subcommand("fit", "fit a model to CSV data");
  fit->add_option("--x", x_path, "predictor matrix CSV")->required();
  fit->add_option("--z", z_path, "modifier matrix CSV")->required();
  fit->add_option("--y", y_path, "response CSV (NA = missing)")->required();
  fit->add_option("--family", fit_family, "gaussian or binomial");
  fit->add_flag("--standardize", do_standardize,
                "column-standardize X and Z; summaries are back-transformed");
  fit->add_flag("--store-draws", store_draws, "also write draws.csv");
  add_sampler_flags(fit, fit_opts);

  auto* sim = app.add_subcommand("simulate",
                                 "generate one dataset, fit it, score truth");
  add_sim_flags(sim, sim_flags);
  add_sampler_flags(sim, sim_opts);

  auto* bench = app.add_subcommand(
      "benchmark", "replicate simulate/fit cycles and aggregate");
  bench->add_option("--reps", reps, "number of replications");
  bench->add_option("--threads", threads,
                    "worker threads (0 = HSP_THREADS or hardware)");
  add_sim_flags(bench, bench_flags);
  add_sampler_flags(bench, bench_opts);

  auto* repro =
      app.add_subcommand("repro", "run the desk-scale reproduction suite");
  repro->add_option("--out", repro_out, "output directory");
  repro->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
    if (fit->parsed())
      return cmd_fit(fit_opts, x_path, z_path, y_path, fit_family,
                     do_standardize, store_draws);
    if (sim->parsed()) return cmd_simulate(sim_opts, sim_flags);
    if (bench->parsed())
      return cmd_benchmark(bench_opts, bench_flags, reps, threads);
    if (repro->parsed()) return cmd_repro(repro_out, threads);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SingularityError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitSingular;
  } catch (const ShapeError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitShape;
  } catch (const DomainError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitShape;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

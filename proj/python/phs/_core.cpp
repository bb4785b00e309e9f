#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phs/benchmark.hpp"
#include "phs/gibbs_gaussian.hpp"
#include "phs/gibbs_logistic.hpp"
#include "phs/metrics.hpp"
#include "phs/simgen.hpp"
#include "phs/summary.hpp"

namespace py = pybind11;
using namespace phs;

namespace {

Setting parse_setting(const std::string& s) {
  if (s == "I") return Setting::I;
  if (s == "II") return Setting::II;
  if (s == "III") return Setting::III;
  if (s == "IV") return Setting::IV;
  if (s == "V") return Setting::V;
  if (s == "VI") return Setting::VI;
  throw py::value_error("unknown setting '" + s + "'");
}

Dataset make_dataset(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Z,
                     const Eigen::VectorXd& y,
                     const std::vector<bool>& missing, const std::string& family) {
  Dataset d;
  d.X = X;
  d.Z = Z;
  d.y = y;
  d.missing = missing;
  d.family = family == "binomial" ? Family::binomial : Family::gaussian;
  d.validate();
  return d;
}

py::dict draws_to_dict(const PosteriorDraws& draws) {
  py::dict out;
  out["beta0"] = draws.beta0;
  out["theta0"] = draws.theta0;
  out["beta"] = draws.beta;
  out["Theta"] = draws.Theta;
  out["lambda_sq"] = draws.lambda_sq;
  out["tau_sq"] = draws.tau_sq;
  if (draws.sigma_sq.size() > 0) out["sigma_sq"] = draws.sigma_sq;
  if (draws.y_imputed.size() > 0) {
    out["y_imputed"] = draws.y_imputed;
    out["imputed_indices"] = draws.imputed_indices;
  }
  return out;
}

SamplerConfig make_config(int n_iter, int burn_in, std::uint64_t seed, int thin,
                          bool pliable, bool store_imputations) {
  SamplerConfig c;
  c.n_iter = n_iter;
  c.burn_in = burn_in;
  c.seed = seed;
  c.thin = thin;
  c.pliable = pliable;
  c.store_imputations = store_imputations;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gibbs samplers for pliable regression under a shared horseshoe prior";

  m.def(
      "fit_gaussian",
      [](const Eigen::MatrixXd& X, const Eigen::MatrixXd& Z,
         const Eigen::VectorXd& y, const std::vector<bool>& missing,
         int n_iter, int burn_in, std::uint64_t seed, int thin, bool pliable,
         bool store_imputations) {
        const Dataset data = make_dataset(X, Z, y, missing, "gaussian");
        return draws_to_dict(
            run_chain(data, make_config(n_iter, burn_in, seed, thin, pliable,
                                        store_imputations)));
      },
      py::arg("X"), py::arg("Z"), py::arg("y"),
      py::arg("missing") = std::vector<bool>{}, py::arg("n_iter") = 5000,
      py::arg("burn_in") = 500, py::arg("seed") = 1, py::arg("thin") = 1,
      py::arg("pliable") = true, py::arg("store_imputations") = false);

  m.def(
      "fit_logistic",
      [](const Eigen::MatrixXd& X, const Eigen::MatrixXd& Z,
         const Eigen::VectorXd& y, int n_iter, int burn_in, std::uint64_t seed,
         int thin, bool pliable) {
        const Dataset data = make_dataset(X, Z, y, {}, "binomial");
        return draws_to_dict(run_chain_logistic(
            data, make_config(n_iter, burn_in, seed, thin, pliable, false)));
      },
      py::arg("X"), py::arg("Z"), py::arg("y"), py::arg("n_iter") = 5000,
      py::arg("burn_in") = 500, py::arg("seed") = 1, py::arg("thin") = 1,
      py::arg("pliable") = true);

  m.def(
      "simulate",
      [](const std::string& setting, int n, int p, int q, double rho_x,
         double missing_fraction, bool interactions, const std::string& family,
         int n_test, std::uint64_t seed) {
        SimSpec spec;
        spec.setting = parse_setting(setting);
        spec.n = n;
        spec.p = p;
        spec.q = q;
        spec.rho_x = rho_x;
        spec.missing_fraction = missing_fraction;
        spec.interactions = interactions;
        spec.family =
            family == "binomial" ? Family::binomial : Family::gaussian;
        spec.n_test = n_test;
        spec.seed = seed;
        const SimData sim = generate(spec);
        py::dict out;
        out["X"] = sim.train.X;
        out["Z"] = sim.train.Z;
        out["y"] = sim.train.y;
        out["missing"] = sim.train.missing;
        out["X_test"] = sim.test.X;
        out["Z_test"] = sim.test.Z;
        out["y_test"] = sim.test.y;
        out["beta0_true"] = sim.truth.beta0_true;
        out["theta0_true"] = sim.truth.theta0_true;
        out["beta_true"] = sim.truth.beta_true;
        out["Theta_true"] = sim.truth.Theta_true;
        return out;
      },
      py::arg("setting") = "I", py::arg("n") = 200, py::arg("p") = 10,
      py::arg("q") = 4, py::arg("rho_x") = 0.5,
      py::arg("missing_fraction") = 0.0, py::arg("interactions") = true,
      py::arg("family") = "gaussian", py::arg("n_test") = 50,
      py::arg("seed") = 1);

  m.def(
      "select_variables",
      [](const Eigen::MatrixXd& beta_draws, double level) {
        return select_variables(beta_draws, level);
      },
      py::arg("beta_draws"), py::arg("level") = 0.95);

  m.def(
      "credible_interval",
      [](const Eigen::VectorXd& draws, double level) {
        const CredibleInterval ci = credible_interval(draws, level);
        return py::make_tuple(ci.lower, ci.upper);
      },
      py::arg("draws"), py::arg("level") = 0.95);

  m.def("sample_polya_gamma_1", [](double z, std::uint64_t seed, int n) {
    RngStream rng(seed);
    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) out(i) = sample_polya_gamma_1(z, rng);
    return out;
  }, py::arg("z"), py::arg("seed") = 1, py::arg("n") = 1);
}

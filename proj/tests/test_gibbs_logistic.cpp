#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "phs/errors.hpp"
#include "phs/gibbs_logistic.hpp"
#include "phs/model.hpp"
#include "phs/simgen.hpp"

using namespace phs;

namespace {

Dataset binary_dataset(Eigen::Index n, Eigen::Index p, Eigen::Index q,
                       std::uint64_t seed) {
  RngStream rng(seed);
  Dataset d;
  d.family = Family::binomial;
  d.X.resize(n, p);
  d.Z.resize(n, q);
  d.y.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) d.X(i, j) = rng.normal();
    for (Eigen::Index t = 0; t < q; ++t) d.Z(i, t) = rng.normal();
    d.y(i) = rng.uniform() < 0.5 ? 0.0 : 1.0;
  }
  return d;
}

}  // namespace

TEST_CASE("update_omega draws PG(1, eta_i) per observation") {
  const Dataset d = binary_dataset(4, 1, 1, 5);
  RngStream init(1);
  LogisticState base = init_logistic_state(d, init);
  PGWorkspace ws;
  ws.kappa = d.y.array() - 0.5;
  ws.eta.resize(4);
  ws.eta << 0.0, 1.0, -2.0, 4.0;

  RngStream rng(9);
  const int n = 40000;
  Eigen::Vector4d sum = Eigen::Vector4d::Zero();
  for (int i = 0; i < n; ++i) {
    LogisticState s = base;
    logistic::update_omega(s, d, ws, rng);
    sum += s.omega;
  }
  for (int i = 0; i < 4; ++i) {
    const double z = ws.eta(i);
    const double want =
        z == 0.0 ? 0.25 : std::tanh(z / 2.0) / (2.0 * z);
    CHECK(sum(i) / n == doctest::Approx(want).epsilon(0.015));
  }
}

TEST_CASE("update_block matches its conjugate conditional") {
  const Dataset d = binary_dataset(50, 2, 1, 15);
  RngStream init(1);
  LogisticState base = init_logistic_state(d, init);
  base.omega.setConstant(0.3);
  base.lambda_sq.setConstant(0.8);
  base.tau_sq = 1.4;
  const Hyperparameters hyper;

  for (const Eigen::Index j : {Eigen::Index{0}, Eigen::Index{2}}) {
    const Eigen::MatrixXd W = block_design(d, j);
    const double prior_prec =
        j == 0 ? 1.0 / hyper.sigma0_sq
               : 1.0 / (base.tau_sq * base.lambda_sq(j - 1));
    Eigen::MatrixXd prec = W.transpose() * base.omega.asDiagonal() * W;
    prec.diagonal().array() += prior_prec;
    const Eigen::MatrixXd cov = prec.inverse();
    const Eigen::VectorXd kappa = d.y.array() - 0.5;
    const Eigen::VectorXd mu = cov * (W.transpose() * kappa);

    RngStream rng(19 + static_cast<std::uint64_t>(j));
    const int n = 100000;
    Eigen::Vector2d sum = Eigen::Vector2d::Zero();
    Eigen::Matrix2d outer = Eigen::Matrix2d::Zero();
    for (int i = 0; i < n; ++i) {
      LogisticState s = base;
      PGWorkspace ws;
      ws.kappa = kappa;
      ws.eta = Eigen::VectorXd::Zero(d.n());  // all blocks start at zero
      logistic::update_block(s, d, ws, j, hyper, true, rng);
      const Eigen::Vector2d g = s.gamma[j];
      sum += g;
      outer += g * g.transpose();
      if (i == 0) {
        // eta is maintained incrementally
        const Eigen::VectorXd fresh = linear_predictor(s, d);
        CHECK((ws.eta - fresh).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
    const Eigen::Vector2d mean = sum / n;
    const Eigen::Matrix2d cov_hat = outer / n - mean * mean.transpose();
    for (int a = 0; a < 2; ++a) {
      CHECK(std::fabs(mean(a) - mu(a)) < 0.01 * std::sqrt(cov(a, a)) + 1e-3);
      for (int b = 0; b < 2; ++b)
        CHECK(std::fabs(cov_hat(a, b) - cov(a, b)) <
              0.03 * std::sqrt(cov(a, a) * cov(b, b)));
    }
  }
}

TEST_CASE("pliable = false only moves the main-effect entry") {
  const Dataset d = binary_dataset(30, 2, 3, 25);
  RngStream init(1);
  LogisticState s = init_logistic_state(d, init);
  PGWorkspace ws;
  ws.kappa = d.y.array() - 0.5;
  ws.eta = Eigen::VectorXd::Zero(d.n());
  RngStream rng(29);
  const Hyperparameters hyper;
  logistic::update_block(s, d, ws, 1, hyper, false, rng);
  CHECK(s.gamma[1](0) != 0.0);
  CHECK(s.gamma[1].tail(3).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("logistic scale updates mirror the shared horseshoe") {
  const Dataset d = binary_dataset(20, 2, 2, 35);
  RngStream init(1);
  LogisticState base = init_logistic_state(d, init);
  base.gamma[1] << 1.0, 0.5, -0.5;
  base.gamma[2] << -2.0, 0.2, 0.1;
  base.nu.setConstant(0.9);
  base.xi = 1.2;
  base.tau_sq = 1.5;

  const double dval = 3.0;  // 1 + q
  const double g2 = base.gamma[1].squaredNorm();
  const double shape = (dval + 1.0) / 2.0;
  const double rate = 1.0 / base.nu(0) + g2 / (2.0 * base.tau_sq);

  RngStream rng(39);
  const int n = 100000;
  double inv_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    LogisticState s = base;
    logistic::update_scales(s, true, rng);
    inv_sum += 1.0 / s.lambda_sq(0);
  }
  CHECK(inv_sum / n == doctest::Approx(shape / rate).epsilon(0.01));
}

TEST_CASE("run_chain_logistic is deterministic and drift-bounded") {
  SimSpec spec;
  spec.n = 80;
  spec.p = 4;
  spec.family = Family::binomial;
  spec.seed = 5;
  const SimData sim = generate(spec);
  SamplerConfig config;
  config.n_iter = 400;
  config.burn_in = 100;
  config.seed = 11;

  const PosteriorDraws a = run_chain_logistic(sim.train, config);
  const PosteriorDraws b = run_chain_logistic(sim.train, config);
  CHECK(a.beta == b.beta);
  CHECK(a.tau_sq == b.tau_sq);
  CHECK(a.sigma_sq.size() == 0);  // no noise variance in the logistic chain
  CHECK(a.max_refresh_drift <= 1e-8);

  config.seed = 12;
  const PosteriorDraws c = run_chain_logistic(sim.train, config);
  CHECK(a.beta != c.beta);
}

TEST_CASE("run_chain_logistic separates a strong signal") {
  SimSpec spec;
  spec.n = 400;
  spec.family = Family::binomial;
  spec.seed = 31;
  const SimData sim = generate(spec);
  SamplerConfig config;
  config.n_iter = 1200;
  config.burn_in = 400;

  const PosteriorDraws draws = run_chain_logistic(sim.train, config);
  const Coefficients est = draws.posterior_mean(sim.train.p(), sim.train.q());
  // signs of the four active main effects (2, -2, 2, 2)
  CHECK(est.beta(0) > 0.3);
  CHECK(est.beta(1) < -0.3);
  CHECK(est.beta(2) > 0.3);
  CHECK(est.beta(3) > 0.3);
  // null coefficients shrink hard
  for (Eigen::Index j = 4; j < sim.train.p(); ++j)
    CHECK(std::fabs(est.beta(j)) < 0.3);
}

TEST_CASE("run_chain_logistic rejects the wrong family") {
  Dataset d = binary_dataset(20, 2, 1, 45);
  d.family = Family::gaussian;
  SamplerConfig config;
  config.n_iter = 10;
  config.burn_in = 1;
  CHECK_THROWS_AS((void)run_chain_logistic(d, config), DomainError);
}

#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "phs/errors.hpp"
#include "phs/model.hpp"

using namespace phs;

namespace {

Dataset random_dataset(Eigen::Index n, Eigen::Index p, Eigen::Index q,
                       std::uint64_t seed) {
  RngStream rng(seed);
  Dataset d;
  d.X.resize(n, p);
  d.Z.resize(n, q);
  d.y.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) d.X(i, j) = rng.normal();
    for (Eigen::Index t = 0; t < q; ++t) d.Z(i, t) = rng.normal();
    d.y(i) = rng.normal();
  }
  return d;
}

}  // namespace

TEST_CASE("linear predictor reproduces a hand-computed value") {
  Dataset d;
  d.X = Eigen::MatrixXd::Constant(1, 1, 2.0);
  d.Z = Eigen::MatrixXd::Constant(1, 1, 1.0);
  d.y = Eigen::VectorXd::Zero(1);
  Coefficients c;
  c.beta0 = 2.0;
  c.theta0 = Eigen::VectorXd::Constant(1, 0.5);
  c.beta = Eigen::VectorXd::Constant(1, 3.0);
  c.Theta = Eigen::MatrixXd::Constant(1, 1, 0.5);
  // 2 + 1*0.5 + 2*(3 + 1*0.5) = 9.5
  CHECK(linear_predictor(c, d)(0) == doctest::Approx(9.5));
}

TEST_CASE("linear predictor agrees with the double-loop oracle") {
  const Dataset d = random_dataset(30, 5, 3, 11);
  RngStream rng(12);
  Coefficients c;
  c.beta0 = rng.normal();
  c.theta0.resize(3);
  c.beta.resize(5);
  c.Theta.resize(5, 3);
  for (Eigen::Index t = 0; t < 3; ++t) c.theta0(t) = rng.normal();
  for (Eigen::Index j = 0; j < 5; ++j) {
    c.beta(j) = rng.normal();
    for (Eigen::Index t = 0; t < 3; ++t) c.Theta(j, t) = rng.normal();
  }

  const Eigen::VectorXd eta = linear_predictor(c, d);
  for (Eigen::Index i = 0; i < d.n(); ++i) {
    double want = c.beta0;
    for (Eigen::Index t = 0; t < 3; ++t) want += d.Z(i, t) * c.theta0(t);
    for (Eigen::Index j = 0; j < 5; ++j) {
      double slope = c.beta(j);
      for (Eigen::Index t = 0; t < 3; ++t) slope += d.Z(i, t) * c.Theta(j, t);
      want += d.X(i, j) * slope;
    }
    CHECK(eta(i) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("the three linear_predictor overloads agree") {
  const Dataset d = random_dataset(20, 4, 2, 21);
  RngStream rng(22);
  GaussianState gs;
  gs.beta0 = rng.normal();
  gs.theta0 = Eigen::Vector2d(rng.normal(), rng.normal());
  gs.beta.resize(4);
  gs.Theta.resize(4, 2);
  for (Eigen::Index j = 0; j < 4; ++j) {
    gs.beta(j) = rng.normal();
    gs.Theta(j, 0) = rng.normal();
    gs.Theta(j, 1) = rng.normal();
  }
  LogisticState ls;
  ls.gamma.resize(5);
  ls.gamma[0].resize(3);
  ls.gamma[0] << gs.beta0, gs.theta0;
  for (Eigen::Index j = 0; j < 4; ++j) {
    ls.gamma[j + 1].resize(3);
    ls.gamma[j + 1] << gs.beta(j), gs.Theta.row(j).transpose();
  }
  const Eigen::VectorXd a = linear_predictor(gs, d);
  const Eigen::VectorXd b = linear_predictor(ls, d);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("block_design builds [1 Z] and [x_j x_j.*Z]") {
  Dataset d;
  d.X.resize(2, 2);
  d.X << 1.0, 3.0, 2.0, 4.0;
  d.Z.resize(2, 2);
  d.Z << 5.0, 6.0, 7.0, 8.0;
  d.y = Eigen::VectorXd::Zero(2);

  const Eigen::MatrixXd W0 = block_design(d, 0);
  CHECK(W0(0, 0) == 1.0);
  CHECK(W0(1, 0) == 1.0);
  CHECK(W0(0, 1) == 5.0);
  CHECK(W0(1, 2) == 8.0);

  const Eigen::MatrixXd W2 = block_design(d, 2);  // x_2 = (3, 4)
  CHECK(W2(0, 0) == 3.0);
  CHECK(W2(1, 0) == 4.0);
  CHECK(W2(0, 1) == 3.0 * 5.0);
  CHECK(W2(1, 2) == 4.0 * 8.0);

  CHECK_THROWS_AS((void)block_design(d, 3), ShapeError);
  CHECK_THROWS_AS((void)block_design(d, -1), ShapeError);
}

TEST_CASE("dataset validation catches malformed input") {
  Dataset d = random_dataset(10, 2, 2, 31);
  CHECK_NOTHROW(d.validate());

  Dataset bad_rows = d;
  bad_rows.y.resize(9);
  CHECK_THROWS_AS(bad_rows.validate(), ShapeError);

  Dataset bad_mask = d;
  bad_mask.missing.assign(9, false);
  CHECK_THROWS_AS(bad_mask.validate(), ShapeError);

  Dataset bad_y = d;
  bad_y.y(3) = std::nan("");
  CHECK_THROWS_AS(bad_y.validate(), DomainError);

  Dataset bad_binom = d;
  bad_binom.family = Family::binomial;
  CHECK_THROWS_AS(bad_binom.validate(), DomainError);  // y not 0/1

  Dataset binom_missing = d;
  binom_missing.family = Family::binomial;
  binom_missing.y.setZero();
  binom_missing.missing.assign(10, false);
  binom_missing.missing[0] = true;
  CHECK_THROWS_AS(binom_missing.validate(), DomainError);
}

TEST_CASE("sampler config validation") {
  SamplerConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.n_stored() == 4500);

  SamplerConfig thin = c;
  thin.thin = 9;
  CHECK(thin.n_stored() == 500);

  SamplerConfig bad = c;
  bad.burn_in = c.n_iter;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.thin = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("gaussian init fills missing with the observed mean") {
  Dataset d;
  d.X = Eigen::MatrixXd::Ones(5, 1);
  d.Z = Eigen::MatrixXd::Zero(5, 0);
  d.y.resize(5);
  d.y << 1.0, 2.0, 3.0, 4.0, 0.0;
  d.missing = {false, false, false, false, true};

  RngStream rng(1);
  const GaussianState s = init_gaussian_state(d, rng);
  CHECK(s.y_completed(4) == doctest::Approx(2.5));
  CHECK(s.y_completed(1) == 2.0);
  // sample variance of {1,2,3,4}
  CHECK(s.sigma_sq == doctest::Approx(5.0 / 3.0));
  CHECK(s.beta.size() == 1);
  CHECK(s.beta(0) == 0.0);
  CHECK(s.lambda_sq(0) == 1.0);

  Dataset all_missing = d;
  all_missing.missing.assign(5, true);
  CHECK_THROWS_AS((void)init_gaussian_state(all_missing, rng), DomainError);
}

TEST_CASE("logistic init starts blocks at zero with omega = 1/4") {
  Dataset d = random_dataset(8, 3, 2, 41);
  d.family = Family::binomial;
  for (Eigen::Index i = 0; i < 8; ++i) d.y(i) = i % 2;
  RngStream rng(1);
  const LogisticState s = init_logistic_state(d, rng);
  CHECK(s.gamma.size() == 4);
  CHECK(s.gamma[0].size() == 3);
  CHECK(s.gamma[2].cwiseAbs().maxCoeff() == 0.0);
  CHECK(s.omega(5) == 0.25);

  Dataset gaussian = d;
  gaussian.family = Family::gaussian;
  CHECK_THROWS_AS((void)init_logistic_state(gaussian, rng), DomainError);
}

#include <doctest.h>

#include <Eigen/Dense>

#include "phs/errors.hpp"
#include "phs/metrics.hpp"

using namespace phs;

namespace {

SimTruth default_truth() {
  SimSpec spec;  // p = 10, q = 4
  return make_truth(spec);
}

}  // namespace

TEST_CASE("estimation errors are squared norms") {
  const SimTruth truth = default_truth();
  Coefficients est;
  est.beta0 = truth.beta0_true;
  est.theta0 = truth.theta0_true;
  est.beta = truth.beta_true;
  est.Theta = truth.Theta_true;

  auto [eb, et] = estimation_errors(est, truth);
  CHECK(eb == 0.0);
  CHECK(et == 0.0);

  est.beta(0) += 0.3;
  est.beta(5) -= 0.4;
  est.Theta(1, 2) += 2.0;
  std::tie(eb, et) = estimation_errors(est, truth);
  CHECK(eb == doctest::Approx(0.09 + 0.16));
  CHECK(et == doctest::Approx(4.0));

  est.beta.resize(3);
  CHECK_THROWS_AS((void)estimation_errors(est, truth), ShapeError);
}

TEST_CASE("gaussian prediction error is a plain test MSE") {
  Dataset test;
  test.X = Eigen::MatrixXd::Ones(2, 1);
  test.Z = Eigen::MatrixXd::Zero(2, 0);
  test.y.resize(2);
  test.y << 3.0, 5.0;

  Coefficients est;
  est.beta0 = 1.0;
  est.theta0.resize(0);
  est.beta = Eigen::VectorXd::Constant(1, 2.0);
  est.Theta.resize(1, 0);
  // eta = (3, 3): errors 0 and 2 -> MSE 2
  CHECK(prediction_error(est, test) == doctest::Approx(2.0));
}

TEST_CASE("binomial prediction error counts misclassifications at 0.5") {
  Dataset test;
  test.family = Family::binomial;
  test.X.resize(4, 1);
  test.X << 2.0, -2.0, 2.0, -2.0;
  test.Z = Eigen::MatrixXd::Zero(4, 0);
  test.y.resize(4);
  test.y << 1.0, 0.0, 0.0, 1.0;  // second pair misclassified

  Coefficients est;
  est.beta0 = 0.0;
  est.theta0.resize(0);
  est.beta = Eigen::VectorXd::Constant(1, 1.0);
  est.Theta.resize(1, 0);
  CHECK(prediction_error(est, test) == doctest::Approx(0.5));
}

TEST_CASE("selecting everything on the default truth") {
  const SimTruth truth = default_truth();
  const std::vector<bool> all(10, true);
  const MetricsReport r = selection_metrics(all, truth.support());
  CHECK(r.tp == 4);
  CHECK(r.fp == 6);
  CHECK(r.fn == 0);
  CHECK(r.tn == 0);
  CHECK(r.accuracy == doctest::Approx(0.4));
  CHECK(r.fdr == doctest::Approx(0.6));
  CHECK(r.fpr == doctest::Approx(1.0));
}

TEST_CASE("selecting nothing gives fdr 0 by convention") {
  const SimTruth truth = default_truth();
  const std::vector<bool> none(10, false);
  const MetricsReport r = selection_metrics(none, truth.support());
  CHECK(r.tp == 0);
  CHECK(r.fp == 0);
  CHECK(r.fn == 4);
  CHECK(r.tn == 6);
  CHECK(r.accuracy == doctest::Approx(0.6));
  CHECK(r.fdr == 0.0);
  CHECK(r.fpr == 0.0);
}

TEST_CASE("perfect selection") {
  const SimTruth truth = default_truth();
  const MetricsReport r = selection_metrics(truth.support(), truth.support());
  CHECK(r.tp == 4);
  CHECK(r.tn == 6);
  CHECK(r.accuracy == 1.0);
  CHECK(r.fdr == 0.0);
  CHECK(r.fpr == 0.0);

  CHECK_THROWS_AS((void)selection_metrics({true}, truth.support()),
                  ShapeError);
}

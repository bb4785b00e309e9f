#pragma once

#include <Eigen/Dense>
#include <vector>

#include "phs/gibbs_gaussian.hpp"

namespace phs {

struct CredibleInterval {
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.95;
};

// type-7 quantile: linear interpolation of order statistics
double empirical_quantile(const Eigen::VectorXd& draws, double prob);

double posterior_mean(const Eigen::VectorXd& draws);

// equal-tailed interval at quantiles (1-level)/2 and 1-(1-level)/2
CredibleInterval credible_interval(const Eigen::VectorXd& draws, double level);

// coefficient j selected iff the level-CI for beta_j excludes 0; a
// zero-variance chain is never selected
std::vector<bool> select_variables(const Eigen::MatrixXd& beta_draws,
                                   double level = 0.95);

// Sample ACF at lags 0..max_lag, acf(0) = 1. A zero-variance chain is
// flagged degenerate and carries no values.
struct Autocorrelation {
  Eigen::VectorXd values;
  bool degenerate = false;
};
Autocorrelation autocorrelation(const Eigen::VectorXd& draws, int max_lag);

}  // namespace phs

#pragma once

#include <vector>

#include "phs/model.hpp"
#include "phs/simgen.hpp"

namespace phs {

struct MetricsReport {
  double est_beta = 0.0;
  double est_theta = 0.0;
  double pred = 0.0;
  double accuracy = 0.0;
  double fdr = 0.0;
  double fpr = 0.0;
  int tp = 0, fp = 0, fn = 0, tn = 0;
};

// Est(beta) = ||beta_hat - beta||_2^2, Est(theta) = ||Theta_hat - Theta||_F^2
std::pair<double, double> estimation_errors(const Coefficients& estimate,
                                            const SimTruth& truth);

// Gaussian: test MSE with the full pliable predictor; binomial:
// misclassification rate at threshold 0.5 on the fitted probability.
double prediction_error(const Coefficients& estimate, const Dataset& test);

// Counts over the p main effects; fdr = 0 when nothing is selected.
MetricsReport selection_metrics(const std::vector<bool>& selected,
                                const std::vector<bool>& truth_support);

}  // namespace phs

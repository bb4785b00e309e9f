#include "phs/metrics.hpp"

#include <cmath>

#include "phs/errors.hpp"

namespace phs {

std::pair<double, double> estimation_errors(const Coefficients& estimate,
                                            const SimTruth& truth) {
  if (estimate.beta.size() != truth.beta_true.size() ||
      estimate.Theta.rows() != truth.Theta_true.rows() ||
      estimate.Theta.cols() != truth.Theta_true.cols()) {
    throw ShapeError("estimation_errors: estimate/truth dimension mismatch");
  }
  const double est_beta = (estimate.beta - truth.beta_true).squaredNorm();
  const double est_theta = (estimate.Theta - truth.Theta_true).squaredNorm();
  return {est_beta, est_theta};
}

double prediction_error(const Coefficients& estimate, const Dataset& test) {
  const Eigen::VectorXd eta = linear_predictor(estimate, test);
  const auto n = test.n();
  if (test.family == Family::gaussian) {
    return (test.y - eta).squaredNorm() / static_cast<double>(n);
  }
  // misclassification at 0.5 on the fitted probability
  int wrong = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double prob = 1.0 / (1.0 + std::exp(-eta(i)));
    const double label = prob > 0.5 ? 1.0 : 0.0;
    if (label != test.y(i)) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(n);
}

MetricsReport selection_metrics(const std::vector<bool>& selected,
                                const std::vector<bool>& truth_support) {
  if (selected.size() != truth_support.size()) {
    throw ShapeError("selection_metrics: length mismatch");
  }
  MetricsReport r;
  for (std::size_t j = 0; j < selected.size(); ++j) {
    if (truth_support[j]) {
      selected[j] ? ++r.tp : ++r.fn;
    } else {
      selected[j] ? ++r.fp : ++r.tn;
    }
  }
  const double total = static_cast<double>(r.tp + r.fp + r.fn + r.tn);
  r.accuracy = total > 0 ? (r.tp + r.tn) / total : 0.0;
  r.fdr = (r.tp + r.fp) > 0 ? static_cast<double>(r.fp) / (r.tp + r.fp) : 0.0;
  r.fpr = (r.fp + r.tn) > 0 ? static_cast<double>(r.fp) / (r.fp + r.tn) : 0.0;
  return r;
}

}  // namespace phs

#include "phs/summary.hpp"

#include <algorithm>
#include <cmath>

#include "phs/errors.hpp"

namespace phs {

double empirical_quantile(const Eigen::VectorXd& draws, double prob) {
  if (draws.size() == 0) throw DomainError("empirical_quantile: empty chain");
  if (prob < 0.0 || prob > 1.0) {
    throw DomainError("empirical_quantile: prob outside [0, 1]");
  }
  std::vector<double> sorted(draws.data(), draws.data() + draws.size());
  std::sort(sorted.begin(), sorted.end());
  const double h = (static_cast<double>(sorted.size()) - 1.0) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - std::floor(h)) * (sorted[hi] - sorted[lo]);
}

double posterior_mean(const Eigen::VectorXd& draws) {
  if (draws.size() == 0) throw DomainError("posterior_mean: empty chain");
  return draws.mean();
}

CredibleInterval credible_interval(const Eigen::VectorXd& draws,
                                   double level) {
  if (level <= 0.0 || level >= 1.0) {
    throw DomainError("credible_interval: level outside (0, 1)");
  }
  const double alpha = (1.0 - level) / 2.0;
  return {empirical_quantile(draws, alpha),
          empirical_quantile(draws, 1.0 - alpha), level};
}

std::vector<bool> select_variables(const Eigen::MatrixXd& beta_draws,
                                   double level) {
  if (level <= 0.0 || level >= 1.0) {
    throw DomainError("select_variables: level outside (0, 1)");
  }
  std::vector<bool> selected(beta_draws.cols(), false);
  for (Eigen::Index j = 0; j < beta_draws.cols(); ++j) {
    const Eigen::VectorXd col = beta_draws.col(j);
    if (col.maxCoeff() == col.minCoeff()) continue;  // degenerate chain
    const CredibleInterval ci = credible_interval(col, level);
    selected[j] = ci.lower > 0.0 || ci.upper < 0.0;
  }
  return selected;
}

Autocorrelation autocorrelation(const Eigen::VectorXd& draws, int max_lag) {
  const auto n = draws.size();
  if (n == 0) throw DomainError("autocorrelation: empty chain");
  if (max_lag < 0 || max_lag >= n) {
    throw DomainError("autocorrelation: max_lag outside [0, n)");
  }
  const double mean = draws.mean();
  const Eigen::VectorXd centered = draws.array() - mean;
  const double c0 = centered.squaredNorm() / static_cast<double>(n);

  Autocorrelation out;
  if (c0 == 0.0) {
    out.degenerate = true;
    return out;
  }
  out.values.resize(max_lag + 1);
  for (int k = 0; k <= max_lag; ++k) {
    const double ck =
        centered.head(n - k).dot(centered.tail(n - k)) / static_cast<double>(n);
    out.values(k) = ck / c0;
  }
  return out;
}

}  // namespace phs

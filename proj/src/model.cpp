#include "phs/model.hpp"

#include <cmath>
#include <string>

#include "phs/errors.hpp"

namespace phs {

bool Dataset::has_missing() const {
  for (bool m : missing)
    if (m) return true;
  return false;
}

Eigen::Index Dataset::n_missing() const {
  Eigen::Index k = 0;
  for (bool m : missing)
    if (m) ++k;
  return k;
}

void Dataset::validate() const {
  const auto nn = n();
  if (nn < 1 || p() < 1 || q() < 0) {
    throw ShapeError("Dataset: need n >= 1, p >= 1, q >= 0");
  }
  if (Z.rows() != nn || y.size() != nn) {
    throw ShapeError("Dataset: X, Z, y row counts differ");
  }
  if (!missing.empty() && static_cast<Eigen::Index>(missing.size()) != nn) {
    throw ShapeError("Dataset: missing mask length != n");
  }
  for (Eigen::Index i = 0; i < nn; ++i) {
    const bool miss = !missing.empty() && missing[i];
    if (miss) continue;
    if (!std::isfinite(y(i))) {
      throw DomainError("Dataset: non-finite observed y at row " +
                        std::to_string(i));
    }
    if (family == Family::binomial && y(i) != 0.0 && y(i) != 1.0) {
      throw DomainError("Dataset: binomial y must be 0/1 at row " +
                        std::to_string(i));
    }
  }
  if (family == Family::binomial && has_missing()) {
    throw DomainError("Dataset: missing responses unsupported for binomial");
  }
}

void SamplerConfig::validate() const {
  if (n_iter < 1 || burn_in < 0 || burn_in >= n_iter || thin < 1) {
    throw ConfigError("SamplerConfig: need 0 <= burn_in < n_iter, thin >= 1");
  }
  if (n_stored() < 1) {
    throw ConfigError("SamplerConfig: no draws stored after burn-in/thinning");
  }
}

Eigen::VectorXd linear_predictor(const Coefficients& coef,
                                 const Dataset& data) {
  if (coef.beta.size() != data.p() || coef.theta0.size() != data.q() ||
      coef.Theta.rows() != data.p() || coef.Theta.cols() != data.q()) {
    throw ShapeError("linear_predictor: coefficient/data dimension mismatch");
  }
  // X beta + rowsum((Z Theta') (.) X) + beta0 + Z theta0
  Eigen::VectorXd eta = data.X * coef.beta;
  if (data.q() > 0) {
    eta += ((data.Z * coef.Theta.transpose()).cwiseProduct(data.X))
               .rowwise()
               .sum();
    eta += data.Z * coef.theta0;
  }
  eta.array() += coef.beta0;
  return eta;
}

Eigen::VectorXd linear_predictor(const GaussianState& state,
                                 const Dataset& data) {
  Coefficients coef{state.beta0, state.theta0, state.beta, state.Theta};
  return linear_predictor(coef, data);
}

Eigen::VectorXd linear_predictor(const LogisticState& state,
                                 const Dataset& data) {
  const auto p = data.p();
  const auto q = data.q();
  if (static_cast<Eigen::Index>(state.gamma.size()) != p + 1) {
    throw ShapeError("linear_predictor: block count != p + 1");
  }
  GaussianState unpacked;
  unpacked.beta0 = state.gamma[0](0);
  unpacked.theta0 = state.gamma[0].tail(q);
  unpacked.beta.resize(p);
  unpacked.Theta.resize(p, q);
  for (Eigen::Index j = 0; j < p; ++j) {
    if (state.gamma[j + 1].size() != 1 + q) {
      throw ShapeError("linear_predictor: block " + std::to_string(j + 1) +
                       " has wrong dimension");
    }
    unpacked.beta(j) = state.gamma[j + 1](0);
    unpacked.Theta.row(j) = state.gamma[j + 1].tail(q).transpose();
  }
  return linear_predictor(unpacked, data);
}

Eigen::MatrixXd block_design(const Dataset& data, Eigen::Index j) {
  if (j < 0 || j > data.p()) {
    throw ShapeError("block_design: index out of range");
  }
  const auto n = data.n();
  const auto q = data.q();
  Eigen::MatrixXd W(n, 1 + q);
  if (j == 0) {
    W.col(0).setOnes();
    if (q > 0) W.rightCols(q) = data.Z;
  } else {
    const Eigen::VectorXd xj = data.X.col(j - 1);
    W.col(0) = xj;
    if (q > 0) W.rightCols(q) = xj.asDiagonal() * data.Z;
  }
  return W;
}

namespace {

// mean and variance of the observed entries; throws if all are missing
std::pair<double, double> observed_moments(const Dataset& data) {
  double sum = 0.0;
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    if (!data.missing.empty() && data.missing[i]) continue;
    sum += data.y(i);
    ++k;
  }
  if (k == 0) throw DomainError("init_state: all responses missing");
  const double mean = sum / static_cast<double>(k);
  double ss = 0.0;
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    if (!data.missing.empty() && data.missing[i]) continue;
    const double d = data.y(i) - mean;
    ss += d * d;
  }
  const double var = k > 1 ? ss / static_cast<double>(k - 1) : 1.0;
  return {mean, var};
}

}  // namespace

GaussianState init_gaussian_state(const Dataset& data, RngStream& rng) {
  data.validate();
  (void)rng;
  const auto [y_mean, y_var] = observed_moments(data);
  GaussianState s;
  s.theta0 = Eigen::VectorXd::Zero(data.q());
  s.beta = Eigen::VectorXd::Zero(data.p());
  s.Theta = Eigen::MatrixXd::Zero(data.p(), data.q());
  s.lambda_sq = Eigen::VectorXd::Ones(data.p());
  s.nu = Eigen::VectorXd::Ones(data.p());
  s.sigma_sq = std::max(y_var, 1e-6);
  s.y_completed = data.y;
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    if (!data.missing.empty() && data.missing[i]) s.y_completed(i) = y_mean;
  }
  return s;
}

LogisticState init_logistic_state(const Dataset& data, RngStream& rng) {
  data.validate();
  (void)rng;
  if (data.family != Family::binomial) {
    throw DomainError("init_logistic_state: family must be binomial");
  }
  LogisticState s;
  s.gamma.assign(data.p() + 1, Eigen::VectorXd::Zero(1 + data.q()));
  s.omega = Eigen::VectorXd::Constant(data.n(), 0.25);
  s.lambda_sq = Eigen::VectorXd::Ones(data.p());
  s.nu = Eigen::VectorXd::Ones(data.p());
  return s;
}

}  // namespace phs

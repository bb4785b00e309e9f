#include "phs/simgen.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "phs/errors.hpp"

namespace phs {

void SimSpec::validate() const {
  if (n < 1 || p < 1 || q < 0 || n_test < 1) {
    throw ConfigError("SimSpec: need n, p, n_test >= 1 and q >= 0");
  }
  if (rho_x < 0.0 || rho_x >= 1.0) {
    throw ConfigError("SimSpec: rho_x must lie in [0, 1)");
  }
  if (missing_fraction < 0.0 || missing_fraction >= 1.0) {
    throw ConfigError("SimSpec: missing_fraction must lie in [0, 1)");
  }
  if (family == Family::binomial && missing_fraction > 0.0) {
    throw ConfigError("SimSpec: missing responses unsupported for binomial");
  }
}

std::vector<bool> SimTruth::support() const {
  std::vector<bool> s(beta_true.size());
  for (Eigen::Index j = 0; j < beta_true.size(); ++j)
    s[j] = beta_true(j) != 0.0;
  return s;
}

Eigen::MatrixXd ar1_covariance(int p, double rho) {
  Eigen::MatrixXd sigma(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) sigma(i, j) = std::pow(rho, std::abs(i - j));
  return sigma;
}

SimTruth make_truth(const SimSpec& spec) {
  SimTruth t;
  t.beta0_true = 1.0;
  t.theta0_true = Eigen::VectorXd::Constant(spec.q, -0.5);
  t.beta_true = Eigen::VectorXd::Zero(spec.p);
  const double active[] = {2.0, -2.0, 2.0, 2.0};
  for (int j = 0; j < std::min(spec.p, 4); ++j) t.beta_true(j) = active[j];
  t.Theta_true = Eigen::MatrixXd::Zero(spec.p, spec.q);
  if (spec.interactions) {
    if (spec.p >= 1) t.Theta_true.row(0).setConstant(1.0);
    if (spec.p >= 2) t.Theta_true.row(1).setConstant(-2.0);
    if (spec.p >= 3)
      for (int tcol = 0; tcol < spec.q; ++tcol)
        t.Theta_true(2, tcol) = tcol + 1.0;
  } else {
    t.theta0_true.setZero();
  }
  return t;
}

namespace {

bool x_is_binary(Setting s) { return s == Setting::V || s == Setting::VI; }
bool x_is_correlated(Setting s) {
  return s == Setting::III || s == Setting::IV;
}
bool z_is_binary(Setting s) {
  return s == Setting::II || s == Setting::IV || s == Setting::VI;
}

Dataset draw_dataset(const SimSpec& spec, const SimTruth& truth, int n,
                     const Eigen::MatrixXd* chol_sigma, RngStream& rng) {
  Dataset d;
  d.family = spec.family;
  d.X.resize(n, spec.p);
  if (x_is_binary(spec.setting)) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < spec.p; ++j)
        d.X(i, j) = rng.uniform() < 0.5 ? 1.0 : 0.0;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < spec.p; ++j) d.X(i, j) = rng.normal();
    if (chol_sigma) d.X = d.X * chol_sigma->transpose();
  }

  d.Z.resize(n, spec.q);
  if (z_is_binary(spec.setting)) {
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < spec.q; ++t)
        d.Z(i, t) = rng.uniform() < 0.5 ? 1.0 : 0.0;
  } else {
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < spec.q; ++t) d.Z(i, t) = rng.normal();
  }

  const Eigen::VectorXd eta = linear_predictor(truth.as_coefficients(), d);
  d.y.resize(n);
  if (spec.family == Family::gaussian) {
    for (int i = 0; i < n; ++i) d.y(i) = eta(i) + rng.normal();
  } else {
    for (int i = 0; i < n; ++i) {
      const double prob = 1.0 / (1.0 + std::exp(-eta(i)));
      d.y(i) = rng.uniform() < prob ? 1.0 : 0.0;
    }
  }
  return d;
}

}  // namespace

SimData generate(const SimSpec& spec) {
  spec.validate();
  const SimTruth truth = make_truth(spec);

  Eigen::MatrixXd chol;
  const Eigen::MatrixXd* cholp = nullptr;
  if (x_is_correlated(spec.setting) && spec.rho_x > 0.0) {
    chol = ar1_covariance(spec.p, spec.rho_x).llt().matrixL();
    cholp = &chol;
  }

  RngStream base(spec.seed);
  RngStream train_rng = base.substream(0);
  RngStream test_rng = base.substream(1);
  RngStream mask_rng = base.substream(2);

  SimData out;
  out.truth = truth;
  out.train = draw_dataset(spec, truth, spec.n, cholp, train_rng);
  out.test = draw_dataset(spec, truth, spec.n_test, cholp, test_rng);

  const int n_miss =
      static_cast<int>(std::lround(spec.missing_fraction * spec.n));
  if (n_miss > 0) {
    // partial Fisher-Yates: first n_miss entries of a shuffled index vector
    std::vector<int> idx(spec.n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < n_miss; ++i) {
      const int j =
          i + static_cast<int>(mask_rng.uniform() * (spec.n - i));
      std::swap(idx[i], idx[j]);
    }
    out.train.missing.assign(spec.n, false);
    for (int i = 0; i < n_miss; ++i) out.train.missing[idx[i]] = true;
  }
  return out;
}

}  // namespace phs

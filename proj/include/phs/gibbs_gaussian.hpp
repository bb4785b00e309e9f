#pragma once

#include <Eigen/Dense>
#include <vector>

#include "phs/model.hpp"
#include "phs/rng.hpp"
#include "phs/samplers.hpp"

namespace phs {

// Stored post-burn-in draws. Theta rows are flattened row-major by predictor:
// column j*q + t holds theta_{j,t}.
struct PosteriorDraws {
  Eigen::VectorXd beta0;      // k
  Eigen::MatrixXd theta0;     // k x q
  Eigen::MatrixXd beta;       // k x p
  Eigen::MatrixXd Theta;      // k x p*q
  Eigen::MatrixXd lambda_sq;  // k x p
  Eigen::VectorXd tau_sq;     // k
  Eigen::VectorXd sigma_sq;   // k; empty for the logistic chain

  // imputed responses, only when store_imputations was set
  Eigen::MatrixXd y_imputed;               // k x |imputed_indices|
  std::vector<Eigen::Index> imputed_indices;

  // max relative residual/eta drift seen at the periodic refresh checks
  double max_refresh_drift = 0.0;

  Eigen::Index n_stored() const { return beta0.size(); }
  Coefficients posterior_mean(Eigen::Index p, Eigen::Index q) const;
};

// Single Gibbs updates, exposed for the conjugate-oracle tests. residual is
// maintained as y_completed - eta(state) and updated incrementally.
namespace gaussian {

void update_beta_j(GaussianState& state, const Dataset& data,
                   Eigen::VectorXd& residual, Eigen::Index j, RngStream& rng);
void update_theta_j(GaussianState& state, const Dataset& data,
                    Eigen::VectorXd& residual, Eigen::Index j, RngStream& rng);
void update_local_scales(GaussianState& state, bool pliable, RngStream& rng);
void update_global_scale(GaussianState& state, bool pliable, RngStream& rng);
void update_intercepts(GaussianState& state, const Dataset& data,
                       Eigen::VectorXd& residual, bool pliable,
                       const Hyperparameters& hyper, RngStream& rng);
void update_sigma2(GaussianState& state, const Dataset& data,
                   const Eigen::VectorXd& residual,
                   const Hyperparameters& hyper, RngStream& rng);
void impute_missing(GaussianState& state, const Dataset& data,
                    Eigen::VectorXd& residual, RngStream& rng);

}  // namespace gaussian

PosteriorDraws run_chain(const Dataset& data, const SamplerConfig& config,
                         const Hyperparameters& hyper = {});

}  // namespace phs

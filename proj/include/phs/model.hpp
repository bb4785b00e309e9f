#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "phs/rng.hpp"

namespace phs {

enum class Family { gaussian, binomial };

// Observed data: predictors X (n x p), modifiers Z (n x q), response y.
// missing[i] marks y(i) as unobserved (Gaussian family only).
struct Dataset {
  Eigen::MatrixXd X;
  Eigen::MatrixXd Z;
  Eigen::VectorXd y;
  std::vector<bool> missing;  // empty means fully observed
  Family family = Family::gaussian;

  Eigen::Index n() const { return X.rows(); }
  Eigen::Index p() const { return X.cols(); }
  Eigen::Index q() const { return Z.cols(); }
  bool has_missing() const;
  Eigen::Index n_missing() const;

  // throws ShapeError / DomainError on inconsistent or invalid content
  void validate() const;
};

struct Hyperparameters {
  double sigma0_sq = 1.0;
  double a0 = 1e-2;
  double b0 = 1e-2;
};

struct SamplerConfig {
  int n_iter = 5000;
  int burn_in = 500;
  std::uint64_t seed = 1;
  int thin = 1;
  bool pliable = true;  // false forces Theta = 0, theta0 = 0
  bool store_imputations = false;

  int n_stored() const { return (n_iter - burn_in) / thin; }
  void validate() const;
};

// Full parameter state for the Gaussian sampler. Theta is stored with row j
// holding theta_j so a (beta_j, theta_j) block is contiguous.
struct GaussianState {
  double beta0 = 0.0;
  Eigen::VectorXd theta0;     // q
  Eigen::VectorXd beta;       // p
  Eigen::MatrixXd Theta;      // p x q
  Eigen::VectorXd lambda_sq;  // p
  Eigen::VectorXd nu;         // p
  double tau_sq = 1.0;
  double xi = 1.0;
  double sigma_sq = 1.0;
  Eigen::VectorXd y_completed;  // n; observed y where present
};

// Block coefficients for the logistic sampler: gamma[0] = (beta0, theta0),
// gamma[j] = (beta_j, theta_j) for j = 1..p, each of dimension 1+q.
struct LogisticState {
  std::vector<Eigen::VectorXd> gamma;  // p+1 blocks of size 1+q
  Eigen::VectorXd omega;               // n, positive PG latents
  Eigen::VectorXd lambda_sq;           // p
  Eigen::VectorXd nu;                  // p
  double tau_sq = 1.0;
  double xi = 1.0;
};

// Coefficient tuple (beta0, theta0, beta, Theta); also the shape of a
// posterior-mean point estimate.
struct Coefficients {
  double beta0 = 0.0;
  Eigen::VectorXd theta0;  // q
  Eigen::VectorXd beta;    // p
  Eigen::MatrixXd Theta;   // p x q
};

// eta_i = beta0 + z_i' theta0 + sum_j x_ij (beta_j + z_i' theta_j)
Eigen::VectorXd linear_predictor(const Coefficients& coef, const Dataset& data);
Eigen::VectorXd linear_predictor(const GaussianState& state,
                                 const Dataset& data);
Eigen::VectorXd linear_predictor(const LogisticState& state,
                                 const Dataset& data);

// W_0 = [1 Z]; W_j = [x_j  x_j (.) Z] for j >= 1
Eigen::MatrixXd block_design(const Dataset& data, Eigen::Index j);

GaussianState init_gaussian_state(const Dataset& data, RngStream& rng);
LogisticState init_logistic_state(const Dataset& data, RngStream& rng);

}  // namespace phs

#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "phs/model.hpp"
#include "phs/rng.hpp"

namespace phs {

// Simulation settings: which generative law X and Z follow.
//   I   both continuous          Z ~ N(0,1),   X ~ N(0, I)
//   II  binary Z, continuous X   Z ~ Ber(.5),  X ~ N(0, I)
//   III continuous, correlated   Z ~ N(0,1),   X ~ N(0, AR1(rho))
//   IV  binary Z, correlated X   Z ~ Ber(.5),  X ~ N(0, AR1(rho))
//   V   continuous Z, binary X   Z ~ N(0,1),   X ~ Ber(.5)
//   VI  both binary              Z ~ Ber(.5),  X ~ Ber(.5)
enum class Setting { I, II, III, IV, V, VI };

struct SimSpec {
  Setting setting = Setting::I;
  int n = 200;
  int p = 10;
  int q = 4;
  double rho_x = 0.5;
  double missing_fraction = 0.0;
  bool interactions = true;
  Family family = Family::gaussian;
  int n_test = 50;
  std::uint64_t seed = 1;

  void validate() const;
};

// Generating parameters scored against by the metrics module.
struct SimTruth {
  double beta0_true = 1.0;
  Eigen::VectorXd theta0_true;  // q
  Eigen::VectorXd beta_true;    // p
  Eigen::MatrixXd Theta_true;   // p x q

  Coefficients as_coefficients() const {
    return {beta0_true, theta0_true, beta_true, Theta_true};
  }
  std::vector<bool> support() const;  // beta_true(j) != 0
};

struct SimData {
  Dataset train;
  Dataset test;
  SimTruth truth;
};

// (Sigma)_{ij} = rho^{|i-j|}
Eigen::MatrixXd ar1_covariance(int p, double rho);

SimTruth make_truth(const SimSpec& spec);

// Deterministic in spec.seed; train, test, and the missing mask use disjoint
// substreams. |mask| = round(missing_fraction * n) exactly.
SimData generate(const SimSpec& spec);

}  // namespace phs

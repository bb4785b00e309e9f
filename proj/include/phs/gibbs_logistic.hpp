#pragma once

#include <Eigen/Dense>

#include "phs/gibbs_gaussian.hpp"
#include "phs/model.hpp"
#include "phs/rng.hpp"

namespace phs {

// Scratch for the Polya-Gamma chain: kappa = y - 1/2 and the maintained
// linear predictor.
struct PGWorkspace {
  Eigen::VectorXd kappa;
  Eigen::VectorXd eta;
};

namespace logistic {

void update_omega(LogisticState& state, const Dataset& data, PGWorkspace& ws,
                  RngStream& rng);
// block j = 0 is the intercept block with prior precision 1/sigma0_sq;
// pliable = false restricts every block to its leading (main-effect) entry
void update_block(LogisticState& state, const Dataset& data, PGWorkspace& ws,
                  Eigen::Index j, const Hyperparameters& hyper, bool pliable,
                  RngStream& rng);
void update_scales(LogisticState& state, bool pliable, RngStream& rng);

}  // namespace logistic

PosteriorDraws run_chain_logistic(const Dataset& data,
                                  const SamplerConfig& config,
                                  const Hyperparameters& hyper = {});

}  // namespace phs

#pragma once

#include <Eigen/Dense>

#include "phs/rng.hpp"

namespace phs {

// Inverse-gamma in shape/rate form: density proportional to
// x^{-(a+1)} exp(-b/x). The rate b is the additive second argument of every
// IG conditional in the sampler; mean is b/(a-1) for a > 1.
struct InverseGammaParams {
  double shape;
  double rate;
};

double sample_inverse_gamma(const InverseGammaParams& params, RngStream& rng);

// N(P^{-1} h, P^{-1}) specified by its precision matrix and linear term.
struct PrecisionGaussian {
  Eigen::MatrixXd precision;
  Eigen::VectorXd linear;
};

// Draw via Cholesky of the precision; never forms the inverse. Near-singular
// precisions get a ridge eps*trace(P)/d at 1e-8 then 1e-6 before failing.
// block_index only annotates the error message.
Eigen::VectorXd sample_precision_gaussian(const PrecisionGaussian& g,
                                          RngStream& rng, int block_index = -1);

// Exact draw from PG(1, z) by the Devroye-style alternating-series rejection
// sampler. E[omega] = tanh(z/2)/(2z), = 1/4 at z = 0.
double sample_polya_gamma_1(double z, RngStream& rng);

}  // namespace phs

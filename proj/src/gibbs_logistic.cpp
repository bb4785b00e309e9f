#include "phs/gibbs_logistic.hpp"

#include <cmath>
#include <string>

#include "phs/errors.hpp"
#include "phs/samplers.hpp"

namespace phs {
namespace logistic {

void update_omega(LogisticState& state, const Dataset& data, PGWorkspace& ws,
                  RngStream& rng) {
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    state.omega(i) = sample_polya_gamma_1(ws.eta(i), rng);
  }
}

void update_block(LogisticState& state, const Dataset& data, PGWorkspace& ws,
                  Eigen::Index j, const Hyperparameters& hyper, bool pliable,
                  RngStream& rng) {
  const Eigen::MatrixXd Wj_full = block_design(data, j);
  const Eigen::Index d = pliable ? Wj_full.cols() : 1;
  const Eigen::MatrixXd Wj = Wj_full.leftCols(d);
  const Eigen::VectorXd old = state.gamma[j].head(d);

  const double prior_prec =
      j == 0 ? 1.0 / hyper.sigma0_sq
             : 1.0 / (state.tau_sq * state.lambda_sq(j - 1));

  const Eigen::VectorXd eta_minus_j = ws.eta - Wj * old;
  PrecisionGaussian g;
  g.precision = Wj.transpose() * state.omega.asDiagonal() * Wj;
  g.precision.diagonal().array() += prior_prec;
  g.linear =
      Wj.transpose() * (ws.kappa - state.omega.cwiseProduct(eta_minus_j));

  const Eigen::VectorXd draw =
      sample_precision_gaussian(g, rng, static_cast<int>(j));
  state.gamma[j].head(d) = draw;
  ws.eta = eta_minus_j + Wj * draw;
}

void update_scales(LogisticState& state, bool pliable, RngStream& rng) {
  const auto p = state.lambda_sq.size();
  const double d =
      pliable ? static_cast<double>(state.gamma[0].size()) : 1.0;
  double sum = 0.0;
  for (Eigen::Index j = 0; j < p; ++j) {
    const double g2 = pliable ? state.gamma[j + 1].squaredNorm()
                              : state.gamma[j + 1](0) * state.gamma[j + 1](0);
    state.lambda_sq(j) = sample_inverse_gamma(
        {(d + 1.0) / 2.0, 1.0 / state.nu(j) + g2 / (2.0 * state.tau_sq)}, rng);
    state.nu(j) =
        sample_inverse_gamma({0.5, 1.0 + 1.0 / state.lambda_sq(j)}, rng);
    sum += g2 / state.lambda_sq(j);
  }
  state.tau_sq = sample_inverse_gamma(
      {(static_cast<double>(p) * d + 1.0) / 2.0, 1.0 / state.xi + 0.5 * sum},
      rng);
  state.xi = sample_inverse_gamma({0.5, 1.0 + 1.0 / state.tau_sq}, rng);
}

}  // namespace logistic

PosteriorDraws run_chain_logistic(const Dataset& data,
                                  const SamplerConfig& config,
                                  const Hyperparameters& hyper) {
  data.validate();
  config.validate();
  if (data.family != Family::binomial) {
    throw DomainError("run_chain_logistic: family must be binomial");
  }

  const auto p = data.p();
  const auto q = data.q();
  RngStream rng(config.seed);
  LogisticState state = init_logistic_state(data, rng);

  PGWorkspace ws;
  ws.kappa = data.y.array() - 0.5;
  ws.eta = linear_predictor(state, data);

  const Eigen::Index keep = config.n_stored();
  PosteriorDraws out;
  out.beta0.resize(keep);
  out.theta0.resize(keep, q);
  out.beta.resize(keep, p);
  out.Theta.resize(keep, p * q);
  out.lambda_sq.resize(keep, p);
  out.tau_sq.resize(keep);

  Eigen::Index k = 0;
  for (int iter = 1; iter <= config.n_iter; ++iter) {
    try {
      logistic::update_omega(state, data, ws, rng);
      for (Eigen::Index j = 0; j <= p; ++j) {
        logistic::update_block(state, data, ws, j, hyper, config.pliable, rng);
      }
      logistic::update_scales(state, config.pliable, rng);
    } catch (const SingularityError& e) {
      throw SingularityError(std::string(e.what()) + " at iteration " +
                                 std::to_string(iter),
                             e.block_index);
    }

    if (iter % 100 == 0) {
      const Eigen::VectorXd fresh = linear_predictor(state, data);
      const double scale = 1.0 + fresh.cwiseAbs().maxCoeff();
      const double drift = (ws.eta - fresh).cwiseAbs().maxCoeff() / scale;
      out.max_refresh_drift = std::max(out.max_refresh_drift, drift);
      ws.eta = fresh;
    }

    if (iter > config.burn_in && (iter - config.burn_in) % config.thin == 0 &&
        k < keep) {
      out.beta0(k) = state.gamma[0](0);
      out.theta0.row(k) = state.gamma[0].tail(q).transpose();
      for (Eigen::Index j = 0; j < p; ++j) {
        out.beta(k, j) = state.gamma[j + 1](0);
        for (Eigen::Index t = 0; t < q; ++t)
          out.Theta(k, j * q + t) = state.gamma[j + 1](1 + t);
      }
      out.lambda_sq.row(k) = state.lambda_sq.transpose();
      out.tau_sq(k) = state.tau_sq;
      ++k;
    }
  }
  return out;
}

}  // namespace phs

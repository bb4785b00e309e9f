#include "phs/gibbs_gaussian.hpp"

#include <cmath>
#include <string>

#include "phs/errors.hpp"

namespace phs {

Coefficients PosteriorDraws::posterior_mean(Eigen::Index p,
                                            Eigen::Index q) const {
  Coefficients c;
  c.beta0 = beta0.mean();
  c.theta0 = q > 0 ? theta0.colwise().mean().transpose()
                   : Eigen::VectorXd(0);
  c.beta = beta.colwise().mean().transpose();
  c.Theta.resize(p, q);
  for (Eigen::Index j = 0; j < p; ++j)
    for (Eigen::Index t = 0; t < q; ++t)
      c.Theta(j, t) = Theta.col(j * q + t).mean();
  return c;
}

namespace gaussian {

void update_beta_j(GaussianState& state, const Dataset& data,
                   Eigen::VectorXd& residual, Eigen::Index j, RngStream& rng) {
  const Eigen::VectorXd xj = data.X.col(j);
  const double xtx = xj.squaredNorm();
  const double prior_prec = 1.0 / (state.lambda_sq(j) * state.tau_sq);
  const double prec = xtx / state.sigma_sq + prior_prec;
  if (!(prec > 0.0) || !std::isfinite(prec)) {
    throw SingularityError("update_beta_j: non-positive precision",
                           static_cast<int>(j));
  }
  const double v = 1.0 / prec;
  // r^{(-j)} - Z_j theta_j = residual + x_j beta_j
  const double old = state.beta(j);
  const double lin = xj.dot(residual) + xtx * old;
  const double mu = v * lin / state.sigma_sq;
  state.beta(j) = mu + std::sqrt(v) * rng.normal();
  residual += (old - state.beta(j)) * xj;
}

void update_theta_j(GaussianState& state, const Dataset& data,
                    Eigen::VectorXd& residual, Eigen::Index j, RngStream& rng) {
  const auto q = data.q();
  if (q == 0) return;
  const Eigen::VectorXd xj = data.X.col(j);
  const Eigen::MatrixXd Zj = xj.asDiagonal() * data.Z;  // diag(x_j) Z
  const Eigen::VectorXd old = state.Theta.row(j).transpose();

  PrecisionGaussian g;
  g.precision = Zj.transpose() * Zj / state.sigma_sq;
  g.precision.diagonal().array() += 1.0 / (state.lambda_sq(j) * state.tau_sq);
  // r^{(-j)} = residual + Z_j theta_j once beta_j is already subtracted
  g.linear = Zj.transpose() * (residual + Zj * old) / state.sigma_sq;

  const Eigen::VectorXd draw =
      sample_precision_gaussian(g, rng, static_cast<int>(j));
  state.Theta.row(j) = draw.transpose();
  residual += Zj * (old - draw);
}

void update_local_scales(GaussianState& state, bool pliable, RngStream& rng) {
  const auto p = state.beta.size();
  const double d = pliable ? 1.0 + static_cast<double>(state.Theta.cols()) : 1.0;
  for (Eigen::Index j = 0; j < p; ++j) {
    double g2 = state.beta(j) * state.beta(j);
    if (pliable) g2 += state.Theta.row(j).squaredNorm();
    state.lambda_sq(j) = sample_inverse_gamma(
        {(d + 1.0) / 2.0, 1.0 / state.nu(j) + g2 / (2.0 * state.tau_sq)}, rng);
    state.nu(j) =
        sample_inverse_gamma({0.5, 1.0 + 1.0 / state.lambda_sq(j)}, rng);
  }
}

void update_global_scale(GaussianState& state, bool pliable, RngStream& rng) {
  const auto p = state.beta.size();
  const double d = pliable ? 1.0 + static_cast<double>(state.Theta.cols()) : 1.0;
  double sum = 0.0;
  for (Eigen::Index j = 0; j < p; ++j) {
    double g2 = state.beta(j) * state.beta(j);
    if (pliable) g2 += state.Theta.row(j).squaredNorm();
    sum += g2 / state.lambda_sq(j);
  }
  state.tau_sq = sample_inverse_gamma(
      {(static_cast<double>(p) * d + 1.0) / 2.0, 1.0 / state.xi + 0.5 * sum},
      rng);
  state.xi = sample_inverse_gamma({0.5, 1.0 + 1.0 / state.tau_sq}, rng);
}

void update_intercepts(GaussianState& state, const Dataset& data,
                       Eigen::VectorXd& residual, bool pliable,
                       const Hyperparameters& hyper, RngStream& rng) {
  const auto n = data.n();
  const auto q = data.q();

  // beta0: r_{beta0} = residual + beta0
  {
    const double v0 =
        1.0 / (static_cast<double>(n) / state.sigma_sq + 1.0 / hyper.sigma0_sq);
    const double old = state.beta0;
    const double mu0 =
        v0 * (residual.sum() + static_cast<double>(n) * old) / state.sigma_sq;
    state.beta0 = mu0 + std::sqrt(v0) * rng.normal();
    residual.array() += old - state.beta0;
  }

  if (!pliable || q == 0) return;

  // theta0: r_{theta0} = residual + Z theta0
  {
    const Eigen::VectorXd old = state.theta0;
    PrecisionGaussian g;
    g.precision = data.Z.transpose() * data.Z / state.sigma_sq;
    g.precision.diagonal().array() += 1.0 / hyper.sigma0_sq;
    g.linear =
        data.Z.transpose() * (residual + data.Z * old) / state.sigma_sq;
    state.theta0 = sample_precision_gaussian(g, rng, 0);
    residual += data.Z * (old - state.theta0);
  }
}

void update_sigma2(GaussianState& state, const Dataset& data,
                   const Eigen::VectorXd& residual,
                   const Hyperparameters& hyper, RngStream& rng) {
  state.sigma_sq = sample_inverse_gamma(
      {hyper.a0 + static_cast<double>(data.n()) / 2.0,
       hyper.b0 + 0.5 * residual.squaredNorm()},
      rng);
}

void impute_missing(GaussianState& state, const Dataset& data,
                    Eigen::VectorXd& residual, RngStream& rng) {
  if (data.family != Family::gaussian) {
    throw DomainError("impute_missing: requires gaussian family");
  }
  if (data.missing.empty()) return;
  const double sd = std::sqrt(state.sigma_sq);
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    if (!data.missing[i]) continue;
    const double eta_i = state.y_completed(i) - residual(i);
    const double draw = eta_i + sd * rng.normal();
    state.y_completed(i) = draw;
    residual(i) = draw - eta_i;
  }
}

}  // namespace gaussian

PosteriorDraws run_chain(const Dataset& data, const SamplerConfig& config,
                         const Hyperparameters& hyper) {
  data.validate();
  config.validate();
  if (data.family != Family::gaussian) {
    throw DomainError("run_chain: family must be gaussian");
  }

  const auto p = data.p();
  const auto q = data.q();
  RngStream rng(config.seed);
  GaussianState state = init_gaussian_state(data, rng);
  Eigen::VectorXd residual = state.y_completed - linear_predictor(state, data);

  const Eigen::Index keep = config.n_stored();
  PosteriorDraws out;
  out.beta0.resize(keep);
  out.theta0.resize(keep, q);
  out.beta.resize(keep, p);
  out.Theta.resize(keep, p * q);
  out.lambda_sq.resize(keep, p);
  out.tau_sq.resize(keep);
  out.sigma_sq.resize(keep);
  if (config.store_imputations) {
    for (Eigen::Index i = 0; i < data.n(); ++i) {
      if (!data.missing.empty() && data.missing[i])
        out.imputed_indices.push_back(i);
    }
    out.y_imputed.resize(keep,
                         static_cast<Eigen::Index>(out.imputed_indices.size()));
  }

  const bool has_mask = data.has_missing();
  Eigen::Index k = 0;
  for (int iter = 1; iter <= config.n_iter; ++iter) {
    try {
      if (has_mask) gaussian::impute_missing(state, data, residual, rng);
      for (Eigen::Index j = 0; j < p; ++j) {
        gaussian::update_beta_j(state, data, residual, j, rng);
        if (config.pliable) gaussian::update_theta_j(state, data, residual, j, rng);
      }
      gaussian::update_local_scales(state, config.pliable, rng);
      gaussian::update_global_scale(state, config.pliable, rng);
      gaussian::update_intercepts(state, data, residual, config.pliable, hyper,
                                  rng);
      gaussian::update_sigma2(state, data, residual, hyper, rng);
    } catch (const SingularityError& e) {
      throw SingularityError(std::string(e.what()) + " at iteration " +
                                 std::to_string(iter),
                             e.block_index);
    }

    if (iter % 100 == 0) {
      const Eigen::VectorXd fresh =
          state.y_completed - linear_predictor(state, data);
      const double scale = 1.0 + state.y_completed.cwiseAbs().maxCoeff();
      const double drift = (residual - fresh).cwiseAbs().maxCoeff() / scale;
      out.max_refresh_drift = std::max(out.max_refresh_drift, drift);
      residual = fresh;
    }

    if (iter > config.burn_in && (iter - config.burn_in) % config.thin == 0 &&
        k < keep) {
      out.beta0(k) = state.beta0;
      out.theta0.row(k) = state.theta0.transpose();
      out.beta.row(k) = state.beta.transpose();
      for (Eigen::Index j = 0; j < p; ++j)
        for (Eigen::Index t = 0; t < q; ++t)
          out.Theta(k, j * q + t) = state.Theta(j, t);
      out.lambda_sq.row(k) = state.lambda_sq.transpose();
      out.tau_sq(k) = state.tau_sq;
      out.sigma_sq(k) = state.sigma_sq;
      if (config.store_imputations) {
        for (std::size_t m = 0; m < out.imputed_indices.size(); ++m)
          out.y_imputed(k, static_cast<Eigen::Index>(m)) =
              state.y_completed(out.imputed_indices[m]);
      }
      ++k;
    }
  }
  return out;
}

}  // namespace phs

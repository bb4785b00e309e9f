#include "phs/samplers.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "phs/errors.hpp"

namespace phs {

double sample_inverse_gamma(const InverseGammaParams& params, RngStream& rng) {
  if (!(params.shape > 0.0) || !(params.rate > 0.0)) {
    throw DomainError("sample_inverse_gamma: shape and rate must be > 0");
  }
  double g = rng.gamma(params.shape);
  if (g <= 0.0 || !std::isfinite(g)) g = std::numeric_limits<double>::min();
  return params.rate / g;
}

Eigen::VectorXd sample_precision_gaussian(const PrecisionGaussian& g,
                                          RngStream& rng, int block_index) {
  const auto d = g.precision.rows();
  if (g.precision.cols() != d || g.linear.size() != d) {
    throw ShapeError("sample_precision_gaussian: inconsistent dimensions");
  }

  Eigen::LLT<Eigen::MatrixXd> llt(g.precision);
  if (llt.info() != Eigen::Success) {
    const double base = g.precision.trace() / static_cast<double>(d);
    for (double scale : {1e-8, 1e-6}) {
      Eigen::MatrixXd ridged = g.precision;
      ridged.diagonal().array() += scale * base;
      llt.compute(ridged);
      if (llt.info() == Eigen::Success) break;
    }
    if (llt.info() != Eigen::Success) {
      throw SingularityError(
          "sample_precision_gaussian: Cholesky failed after ridge escalation"
          " (block " + std::to_string(block_index) + ")",
          block_index);
    }
  }

  Eigen::VectorXd mean = llt.solve(g.linear);
  Eigen::VectorXd z(d);
  for (Eigen::Index i = 0; i < d; ++i) z(i) = rng.normal();
  // x = mean + L^{-T} z has covariance (L L^T)^{-1} = P^{-1}
  llt.matrixU().solveInPlace(z);
  return mean + z;
}

namespace {

constexpr double kPgTrunc = 0.64;
constexpr double kPi = 3.14159265358979323846;

// Jacobi-theta series coefficients a_n(x) of the PG(1,0) density, using the
// left (inverse-Gaussian-like) form below the truncation point and the right
// (exponential) form above it.
double pg_coef(int n, double x) {
  const double h = n + 0.5;
  if (x > kPgTrunc) {
    return kPi * h * std::exp(-h * h * kPi * kPi * x / 2.0);
  }
  return std::pow(2.0 / (kPi * x), 1.5) * kPi * h * std::exp(-2.0 * h * h / x);
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// P(X <= t) weight for the mixture proposal: truncated exponential on
// (t, inf) versus truncated inverse-Gaussian on (0, t).
double mass_texpon(double z) {
  const double t = kPgTrunc;
  const double fz = kPi * kPi / 8.0 + z * z / 2.0;
  const double b = std::sqrt(1.0 / t) * (t * z - 1.0);
  const double a = -std::sqrt(1.0 / t) * (t * z + 1.0);
  const double x0 = std::log(fz) + fz * t;
  const double xb = x0 - z + std::log(std_normal_cdf(b));
  const double xa = x0 + z + std::log(std_normal_cdf(a));
  const double qdivp = 4.0 / kPi * (std::exp(xb) + std::exp(xa));
  return 1.0 / (1.0 + qdivp);
}

// Inverse-Gaussian(mu = 1/z, lambda = 1) truncated to (0, t).
double rtigauss(double z, RngStream& rng) {
  const double t = kPgTrunc;
  z = std::fabs(z);
  const double mu = 1.0 / z;
  double x = t + 1.0;
  if (mu > t) {
    // rejection from scaled inverse-chi-square proposal
    for (;;) {
      double e1, e2;
      do {
        e1 = rng.exponential();
        e2 = rng.exponential();
      } while (e1 * e1 > 2.0 * e2 / t);
      x = t / ((1.0 + t * e1) * (1.0 + t * e1));
      if (rng.uniform() <= std::exp(-z * z * x / 2.0)) return x;
    }
  }
  while (x > t) {
    const double nrm = rng.normal();
    const double y = nrm * nrm;
    x = mu + 0.5 * mu * mu * y -
        0.5 * mu * std::sqrt(4.0 * mu * y + mu * mu * y * y);
    if (rng.uniform() > mu / (mu + x)) x = mu * mu / x;
  }
  return x;
}

}  // namespace

double sample_polya_gamma_1(double z, RngStream& rng) {
  if (!std::isfinite(z)) {
    throw DomainError("sample_polya_gamma_1: z must be finite");
  }
  // PG(1, z) = PG(1, -z); work with the half-argument
  const double zh = std::fabs(z) / 2.0;
  const double fz = kPi * kPi / 8.0 + zh * zh / 2.0;
  const double p_texp = mass_texpon(zh);

  for (;;) {
    double x;
    if (rng.uniform() < p_texp) {
      x = kPgTrunc + rng.exponential() / fz;
    } else {
      x = rtigauss(zh, rng);
    }
    // squeeze on the alternating series
    double s = pg_coef(0, x);
    const double y = rng.uniform() * s;
    int n = 0;
    for (;;) {
      ++n;
      if (n % 2 == 1) {
        s -= pg_coef(n, x);
        if (y <= s) return x / 4.0;
      } else {
        s += pg_coef(n, x);
        if (y > s) break;
      }
    }
  }
}

}  // namespace phs

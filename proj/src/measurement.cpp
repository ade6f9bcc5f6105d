#include "eiwe/measurement.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eiwe/errors.hpp"
#include "eiwe/rng.hpp"

namespace eiwe {

namespace {

// 2x2 inverse via the adjugate.
Eigen::Matrix2d invert2x2(const Eigen::Matrix2d& m, const char* what) {
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (!(std::abs(det) > 1e-300))
    throw NumericalFailure(std::string(what) + ": singular 2x2 matrix");
  Eigen::Matrix2d inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv / det;
}

Eigen::Matrix2d rotation2(double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

}  // namespace

GaussianMeasurement::GaussianMeasurement(double lambda_, double phi_,
                                         int target_)
    : lambda(lambda_), phi(phi_), target(target_) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument(
        "GaussianMeasurement: lambda must be positive and finite");
  if (!std::isfinite(phi))
    throw std::invalid_argument("GaussianMeasurement: phi must be finite");
  if (target < 0)
    throw std::invalid_argument("GaussianMeasurement: target must be >= 0");
}

Eigen::Matrix2d povm_covariance(const GaussianMeasurement& m) {
  Eigen::Matrix2d core = Eigen::Matrix2d::Zero();
  core(0, 0) = m.lambda / 2.0;
  core(1, 1) = 1.0 / (2.0 * m.lambda);
  const Eigen::Matrix2d r = rotation2(m.phi);
  return r * core * r.transpose();
}

GaussianMeasurement eiwe_measurement(int target) {
  return GaussianMeasurement(1.0, 0.0, target);
}

Eigen::Matrix2d conditional_covariance(const TwoModeBlocks& blocks,
                                       const GaussianMeasurement& m) {
  const Eigen::Matrix2d gamma = povm_covariance(m);
  const Eigen::Matrix2d inv =
      invert2x2(blocks.sigma_b + gamma, "conditional_covariance");
  return blocks.sigma_a - blocks.c_ab * inv * blocks.c_ab.transpose();
}

double OutcomeDistribution::log_density(const Eigen::Vector2d& outcome) const {
  const double det = cov(0, 0) * cov(1, 1) - cov(0, 1) * cov(1, 0);
  const Eigen::Matrix2d inv = invert2x2(cov, "OutcomeDistribution");
  const Eigen::Vector2d d = outcome - mean;
  return -std::log(2.0 * std::numbers::pi) - 0.5 * std::log(det) -
         0.5 * d.dot(inv * d);
}

OutcomeDistribution outcome_distribution(const GaussianState& state,
                                         const GaussianMeasurement& m) {
  if (state.n_modes() != 2)
    throw std::invalid_argument("outcome_distribution: 2-mode state required");
  if (m.target != 1)
    throw std::invalid_argument(
        "outcome_distribution: measurement must target mode 1 (the b mode)");
  const TwoModeBlocks blocks = block_decompose(state);
  return OutcomeDistribution{state.mean.segment(2, 2),
                             blocks.sigma_b + povm_covariance(m)};
}

std::pair<MeasurementOutcome, GaussianState> sample_and_condition(
    const GaussianState& state, const GaussianMeasurement& m,
    std::uint64_t seed) {
  const OutcomeDistribution dist = outcome_distribution(state, m);
  const TwoModeBlocks blocks = block_decompose(state);

  // Draw from N(mean, cov) via the analytic 2x2 Cholesky factor.
  const double a = dist.cov(0, 0), b = dist.cov(1, 1), c = dist.cov(0, 1);
  const double l11 = std::sqrt(a);
  const double l21 = c / l11;
  const double l22 = std::sqrt(std::max(b - l21 * l21, 0.0));
  Rng rng(seed);
  const double z1 = rng.normal(), z2 = rng.normal();
  Eigen::Vector2d outcome = dist.mean;
  outcome(0) += l11 * z1;
  outcome(1) += l21 * z1 + l22 * z2;

  const Eigen::Matrix2d gain =
      blocks.c_ab * invert2x2(blocks.sigma_b + povm_covariance(m),
                              "sample_and_condition");
  Eigen::VectorXd cond_mean =
      state.mean.segment(0, 2) + gain * (outcome - dist.mean);
  Eigen::MatrixXd cond_cov = conditional_covariance(blocks, m);

  MeasurementOutcome result{outcome, dist.log_density(outcome)};
  return {result,
          GaussianState(CovarianceMatrix(std::move(cond_cov)),
                        std::move(cond_mean), state.omegas.segment(0, 1))};
}

Eigen::Matrix2d homodyne_limit(const TwoModeBlocks& blocks, Quadrature q) {
  const int idx = (q == Quadrature::x) ? 0 : 1;
  const double projected = blocks.sigma_b(idx, idx);
  if (!(projected > 0.0))
    throw NumericalFailure("homodyne_limit: non-positive projected variance");
  Eigen::Matrix2d pseudo = Eigen::Matrix2d::Zero();
  pseudo(idx, idx) = 1.0 / projected;
  return blocks.sigma_a - blocks.c_ab * pseudo * blocks.c_ab.transpose();
}

}  // namespace eiwe

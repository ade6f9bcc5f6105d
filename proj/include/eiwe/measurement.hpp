#pragma once

#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include "eiwe/gaussian.hpp"
#include "eiwe/states.hpp"

namespace eiwe {

// Gaussian POVM on one mode, parameterized by strength lambda and basis angle
// phi.  Its noise covariance gamma = R(phi) diag(lambda/2, 1/(2 lambda))
// R^T(phi) is always pure (det = 1/4); lambda = 1 is the coherent-state
// (heterodyne) measurement, lambda -> 0 / infinity the x / p homodyne limits.
struct GaussianMeasurement {
  GaussianMeasurement(double lambda_, double phi_, int target_);

  double lambda;
  double phi;
  int target;  // 0-based mode index; conditioning measures the b mode (1)
};

// gamma^{pi_b} of the measurement.
Eigen::Matrix2d povm_covariance(const GaussianMeasurement& m);

// The measurement the environment itself performs: lambda = 1, phi = 0.
GaussianMeasurement eiwe_measurement(int target = 1);

// Post-measurement covariance of the unmeasured mode,
//   sigma_a - c_ab (sigma_b + gamma)^-1 c_ab^T.
// Depends on the measurement only, never on an outcome value.
Eigen::Matrix2d conditional_covariance(const TwoModeBlocks& blocks,
                                       const GaussianMeasurement& m);

// Normalized bivariate Gaussian over outcome coordinates (x_b, p_b).
// A complex amplitude maps to coordinates as alpha = (x + i p) / sqrt(2).
struct OutcomeDistribution {
  Eigen::Vector2d mean;
  Eigen::Matrix2d cov;  // sigma_b + gamma

  double log_density(const Eigen::Vector2d& outcome) const;
};

OutcomeDistribution outcome_distribution(const GaussianState& state,
                                         const GaussianMeasurement& m);

struct MeasurementOutcome {
  Eigen::Vector2d alpha;  // (x_b, p_b) outcome coordinates
  double log_density;
};

// Draws one outcome and returns it with the conditional state of mode a.
// The conditional mean is outcome-dependent; the conditional covariance is
// the same matrix for every seed.
std::pair<MeasurementOutcome, GaussianState> sample_and_condition(
    const GaussianState& state, const GaussianMeasurement& m,
    std::uint64_t seed);

enum class Quadrature { x, p };

// Ideal homodyne of one quadrature of the b mode:
//   sigma_a - c_ab (Pi sigma_b Pi)^+ c_ab^T
// with Pi the projector onto the measured quadrature and ^+ the generalized
// inverse (reciprocal of the single projected variance).
Eigen::Matrix2d homodyne_limit(const TwoModeBlocks& blocks, Quadrature q);

}  // namespace eiwe

#pragma once

#include <Eigen/Dense>

#include "eiwe/gaussian.hpp"

namespace eiwe {

enum class OccupationModel {
  bose_einstein,    // n = 1 / (exp(hbar w / kT) - 1)
  boltzmann_approx  // n = exp(-hbar w / kT), the low-temperature form
};

// Mean photon number under the chosen model.  For hbar w / kT > 700 the
// exponential underflows; the function returns 0 and sets *underflow.
double mean_occupation(double omega, double temperature, OccupationModel model,
                       bool* underflow = nullptr);

// Consistent (n_bar, omega, temperature, model) tuple.  Exactly one of
// n_bar / temperature is primary: the factories derive the other one, so the
// consistency invariant holds by construction.
struct ThermalOccupation {
  double n_bar;
  double omega;        // rad/s
  double temperature;  // K
  OccupationModel model;

  static ThermalOccupation from_temperature(double omega, double temperature,
                                            OccupationModel model);
  static ThermalOccupation from_occupation(double n_bar, double omega,
                                           OccupationModel model);
};

// Thermal state: covariance (n_bar + 1/2) I per mode, zero mean.
GaussianState thermal_state(double n_bar, int n_modes, double omega);

// Two-mode squeezed thermal state with equal occupation in both modes:
//   sigma_a = sigma_b = (n_bar + 1/2) cosh(2r) I
//   c_ab    = (n_bar + 1/2) sinh(2r) diag(1, -1)
// Identical to two_mode_squeeze(r) applied to thermal x thermal.
GaussianState two_mode_squeezed_thermal(double n_bar, double r,
                                        double omega = 1.0);

// 2x2 blocks of a two-mode covariance: [[sigma_a, c_ab], [c_ab^T, sigma_b]].
struct TwoModeBlocks {
  Eigen::Matrix2d sigma_a;
  Eigen::Matrix2d sigma_b;
  Eigen::Matrix2d c_ab;
};

TwoModeBlocks block_decompose(const GaussianState& state);
CovarianceMatrix assemble_blocks(const TwoModeBlocks& blocks);

// Marginal of a two-mode state.  keep is 0-based: 0 keeps the a mode.
GaussianState partial_trace(const GaussianState& state, int keep);

}  // namespace eiwe

#include "eiwe/states.hpp"

#include <cmath>
#include <stdexcept>

#include "eiwe/constants.hpp"

namespace eiwe {

double mean_occupation(double omega, double temperature, OccupationModel model,
                       bool* underflow) {
  if (underflow != nullptr) *underflow = false;
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("mean_occupation: omega must be positive");
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw std::invalid_argument("mean_occupation: temperature must be positive");

  const double ratio =
      constants::hbar * omega / (constants::k_boltzmann * temperature);
  if (ratio > 700.0) {
    if (underflow != nullptr) *underflow = true;
    return 0.0;
  }
  if (model == OccupationModel::boltzmann_approx) return std::exp(-ratio);
  return 1.0 / std::expm1(ratio);
}

ThermalOccupation ThermalOccupation::from_temperature(double omega,
                                                      double temperature,
                                                      OccupationModel model) {
  const double n = mean_occupation(omega, temperature, model);
  return ThermalOccupation{n, omega, temperature, model};
}

ThermalOccupation ThermalOccupation::from_occupation(double n_bar, double omega,
                                                     OccupationModel model) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("ThermalOccupation: omega must be positive");
  if (!(n_bar > 0.0) || !std::isfinite(n_bar))
    throw std::invalid_argument(
        "ThermalOccupation: n_bar must be positive to fix a temperature");
  // boltzmann: n = exp(-hw/kT)  ->  hw/kT = ln(1/n), requires n < 1
  // bose_einstein: n = 1/(exp(hw/kT) - 1)  ->  hw/kT = ln(1 + 1/n)
  double ratio;
  if (model == OccupationModel::boltzmann_approx) {
    if (n_bar >= 1.0)
      throw std::invalid_argument(
          "ThermalOccupation: boltzmann model needs n_bar < 1");
    ratio = std::log(1.0 / n_bar);
  } else {
    ratio = std::log1p(1.0 / n_bar);
  }
  const double temperature =
      constants::hbar * omega / (constants::k_boltzmann * ratio);
  return ThermalOccupation{n_bar, omega, temperature, model};
}

GaussianState thermal_state(double n_bar, int n_modes, double omega) {
  if (n_bar < 0.0 || !std::isfinite(n_bar))
    throw std::invalid_argument("thermal_state: n_bar must be >= 0");
  if (n_modes < 1)
    throw std::invalid_argument("thermal_state: n_modes must be >= 1");
  if (!(omega > 0.0))
    throw std::invalid_argument("thermal_state: omega must be positive");
  Eigen::MatrixXd cov = (n_bar + 0.5) *
      Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  return GaussianState(CovarianceMatrix(std::move(cov)),
                       Eigen::VectorXd::Zero(2 * n_modes),
                       Eigen::VectorXd::Constant(n_modes, omega));
}

GaussianState two_mode_squeezed_thermal(double n_bar, double r, double omega) {
  if (n_bar < 0.0 || !std::isfinite(n_bar))
    throw std::invalid_argument("two_mode_squeezed_thermal: n_bar must be >= 0");
  if (!std::isfinite(r) || std::abs(r) > 10.0)
    throw std::invalid_argument("two_mode_squeezed_thermal: |r| must be <= 10");
  if (!(omega > 0.0))
    throw std::invalid_argument("two_mode_squeezed_thermal: omega must be positive");

  const double t = n_bar + 0.5;
  const double diag = t * std::cosh(2.0 * r);
  const double off = t * std::sinh(2.0 * r);
  Eigen::Matrix4d cov = diag * Eigen::Matrix4d::Identity();
  cov(0, 2) = cov(2, 0) = off;
  cov(1, 3) = cov(3, 1) = -off;
  return GaussianState(CovarianceMatrix(cov), Eigen::VectorXd::Zero(4),
                       Eigen::VectorXd::Constant(2, omega));
}

TwoModeBlocks block_decompose(const GaussianState& state) {
  if (state.n_modes() != 2)
    throw std::invalid_argument("block_decompose: exactly 2 modes required");
  const Eigen::MatrixXd& s = state.cov.matrix();
  return TwoModeBlocks{s.block<2, 2>(0, 0), s.block<2, 2>(2, 2),
                       s.block<2, 2>(0, 2)};
}

CovarianceMatrix assemble_blocks(const TwoModeBlocks& blocks) {
  Eigen::Matrix4d s;
  s.block<2, 2>(0, 0) = blocks.sigma_a;
  s.block<2, 2>(2, 2) = blocks.sigma_b;
  s.block<2, 2>(0, 2) = blocks.c_ab;
  s.block<2, 2>(2, 0) = blocks.c_ab.transpose();
  return CovarianceMatrix(s);
}

GaussianState partial_trace(const GaussianState& state, int keep) {
  if (state.n_modes() != 2)
    throw std::invalid_argument("partial_trace: exactly 2 modes required");
  if (keep != 0 && keep != 1)
    throw std::invalid_argument("partial_trace: keep must be 0 or 1");
  const int o = 2 * keep;
  Eigen::MatrixXd cov = state.cov.matrix().block(o, o, 2, 2);
  return GaussianState(CovarianceMatrix(std::move(cov)),
                       state.mean.segment(o, 2),
                       state.omegas.segment(keep, 1));
}

}  // namespace eiwe

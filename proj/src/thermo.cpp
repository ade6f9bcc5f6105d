#include "eiwe/thermo.hpp"

#include <cmath>
#include <stdexcept>

#include "eiwe/constants.hpp"
#include "eiwe/errors.hpp"

namespace eiwe {

namespace {
constexpr double kDeviationFloor = 1e-300;  // guards the ratio at r = 0
}

double mode_entropy(double nu) {
  if (!std::isfinite(nu) || nu < 0.5 - kPhysicalitySlack)
    throw std::invalid_argument(
        "mode_entropy: symplectic eigenvalue below 1/2 (unphysical)");
  if (nu <= 0.5) return 0.0;
  const double a = nu + 0.5, b = nu - 0.5;
  return a * std::log(a) - b * std::log(b);
}

double von_neumann_entropy(const CovarianceMatrix& cov) {
  double total = 0.0;
  for (double nu : symplectic_eigenvalues(cov)) total += mode_entropy(nu);
  return total;
}

double xi(double r) {
  if (!std::isfinite(r)) throw std::invalid_argument("xi: r must be finite");
  return 1.0 - 2.0 / (1.0 + std::cosh(2.0 * r));
}

double extracted_work(double entropy_eq, double entropy_cond,
                      double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw std::invalid_argument("extracted_work: temperature must be positive");
  return constants::k_boltzmann * temperature * (entropy_eq - entropy_cond);
}

double eiwe_closed_form(double n_bar, double omega, double r) {
  if (n_bar < 0.0 || !std::isfinite(n_bar))
    throw std::invalid_argument("eiwe_closed_form: n_bar must be >= 0");
  if (!(omega > 0.0))
    throw std::invalid_argument("eiwe_closed_form: omega must be positive");
  return xi(r) * n_bar * constants::hbar * omega;
}

WorkReport eiwe_pipeline(const ThermalOccupation& occ, double r,
                         const GaussianMeasurement& m) {
  if (!std::isfinite(r))
    throw std::invalid_argument("eiwe_pipeline: r must be finite");

  const GaussianState tmst =
      two_mode_squeezed_thermal(occ.n_bar, r, occ.omega);
  const TwoModeBlocks blocks = block_decompose(tmst);

  const double s_eq =
      von_neumann_entropy(thermal_state(occ.n_bar, 1, occ.omega).cov);
  const double s_cond =
      von_neumann_entropy(CovarianceMatrix(conditional_covariance(blocks, m)));

  // The lambda = 1 engine never gains entropy by conditioning.
  if (m.lambda == 1.0 && s_eq < s_cond - 1e-12)
    throw NumericalFailure(
        "eiwe_pipeline: conditional entropy above equilibrium at lambda = 1");

  const double work = extracted_work(s_eq, s_cond, occ.temperature);
  const double closed = eiwe_closed_form(occ.n_bar, occ.omega, r);
  const double deviation =
      std::abs(work - closed) / std::max(closed, kDeviationFloor);

  return WorkReport{s_eq,      s_cond,          work,
                    closed,    xi(r),           occ.n_bar,
                    occ.omega, occ.temperature, m.lambda,
                    deviation};
}

double discrete_comparison(double x, double omega) {
  if (!(x >= 0.0) || x >= 1.0)
    throw std::invalid_argument("discrete_comparison: x must be in [0, 1)");
  if (!(omega > 0.0))
    throw std::invalid_argument("discrete_comparison: omega must be positive");
  return x * constants::hbar * omega;
}

}  // namespace eiwe

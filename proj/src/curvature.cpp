#include "eiwe/curvature.hpp"

#include <cmath>
#include <stdexcept>

#include "eiwe/constants.hpp"

namespace eiwe {

double delta_ricci(const CurvatureInput& input) {
  if (!(input.xi >= 0.0) || input.xi > 1.0)
    throw std::invalid_argument("delta_ricci: xi must be in [0, 1]");
  if (!(input.pressure >= 0.0) || !std::isfinite(input.pressure))
    throw std::invalid_argument("delta_ricci: pressure must be >= 0");
  const double c2 = constants::c_light * constants::c_light;
  return input.xi * 32.0 * constants::gravitation * input.pressure / (c2 * c2);
}

}  // namespace eiwe

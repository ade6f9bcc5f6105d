#pragma once

namespace eiwe {

// Ricci-scalar difference between the isotropic-gas and directed-motion
// instances of a perfect relativistic fluid, proportional to the entanglement
// degree consumed by the monitoring.
struct CurvatureInput {
  double xi;        // entanglement degree, in [0, 1]
  double pressure;  // Pa
};

// delta R = xi * 32 G p0 / c^4, in 1/m^2.
double delta_ricci(const CurvatureInput& input);

}  // namespace eiwe

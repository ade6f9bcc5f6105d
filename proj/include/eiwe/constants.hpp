#pragma once

#include <numbers>

// CODATA-2018 physical constants, shared by every module.  h, k_B and c are
// exact by SI definition; G carries the CODATA uncertainty.
namespace eiwe::constants {

inline constexpr double planck_h = 6.62607015e-34;        // J s (exact)
inline constexpr double hbar = planck_h / (2.0 * std::numbers::pi);
inline constexpr double k_boltzmann = 1.380649e-23;       // J / K (exact)
inline constexpr double c_light = 299792458.0;            // m / s (exact)
inline constexpr double gravitation = 6.67430e-11;        // m^3 kg^-1 s^-2

}  // namespace eiwe::constants

#ifndef CRYOCOOL_CONSTANTS_HPP_
#define CRYOCOOL_CONSTANTS_HPP_

#include <numbers>

// CODATA physical constants, SI units. Everything internal to the library
// works in SI; interface layers (spectrum files, CLI flags) convert at the
// boundary.
namespace cryocool::constants {

inline constexpr double pi = std::numbers::pi;

inline constexpr double planck = 6.62607015e-34;           // J s
inline constexpr double speed_of_light = 299792458.0;      // m/s
inline constexpr double boltzmann = 1.380649e-23;          // J/K
inline constexpr double electron_volt = 1.602176634e-19;   // J
// 2 pi^5 k^4 / (15 h^3 c^2)
inline constexpr double stefan_boltzmann = 5.6703744191844295e-8;  // W m^-2 K^-4

inline constexpr double hc = planck * speed_of_light;      // J m

// canonical nm -> m factor; use everywhere a nanometer interface crosses
// into the SI core so the conversion is a single rounding
inline constexpr double nanometer = 1.0e-9;

}  // namespace cryocool::constants

#endif

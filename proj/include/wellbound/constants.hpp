#pragma once

namespace wellbound::constants {

// CODATA 2018 values, https://physics.nist.gov/cuu/Constants/
inline constexpr double hbar = 1.054571817e-34;                // J s
inline constexpr double k_boltzmann = 1.380649e-23;            // J/K (exact)
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

inline constexpr double mass_na23 = 22.9897692820 * atomic_mass_unit;  // kg
inline constexpr double mass_rb87 = 86.909180531 * atomic_mass_unit;   // kg

// Dimensionless constant of the quasi-1D coupling formula,
// Olshanii, Phys. Rev. Lett. 81, 938 (1998).
inline constexpr double olshanii_c = 1.4603;

}  // namespace wellbound::constants

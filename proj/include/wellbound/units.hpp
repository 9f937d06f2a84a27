#pragma once

#include "wellbound/constants.hpp"

namespace wellbound {

// SI description of one atom species in a 1D optical box.
struct PhysicalTrapConfig {
  double atom_mass = 0.0;          // kg
  double scattering_length = 0.0;  // m (3D s-wave)
  double omega_perp = 0.0;         // rad/s, transverse trapping angular frequency
  double trap_length = 0.0;        // m, well width L
  double trap_depth = 0.0;         // J, well depth V0
};

// Dimensionless problem in trap units: length unit L, energy unit hbar^2/(m L^2).
// Here the interaction strength is an explicit parameter, which is what the
// solver wants when c is swept independently of the trap geometry.
struct TrapUnitsProblem {
  double c_hat = 0.0;   // c * L
  double k0_hat = 0.0;  // L * sqrt(2 m V0) / hbar
  int n_particles = 0;
};

// The same trap in the interaction-based unit system: length unit 1/c,
// energy unit hbar^2 c^2 / m. Kept as a pure conversion for cross-checks.
struct InverseInteractionUnits {
  double x0 = 0.0;           // well width, c * L
  double k0 = 0.0;           // well wavenumber, sqrt(2 m V0)/hbar / c
  double energy_unit = 0.0;  // J
};

// a_perp = sqrt(2 hbar / (m omega_perp)). Throws std::domain_error on
// non-positive input.
double transverse_length(double omega_perp, double atom_mass);

// Effective 1D interaction strength c = 4 a / a_perp^2 / (1 - C a / a_perp),
// dimension 1/m. Throws std::domain_error when a/a_perp >= 1/C (confinement
// resonance; the formula is invalid there).
double interaction_strength(double scattering_length, double omega_perp, double atom_mass,
                            double transverse_constant = constants::olshanii_c);

// Analytic inverse of interaction_strength: a = c a_perp^2 / (4 + C c a_perp).
double scattering_length_for_interaction(double c, double omega_perp, double atom_mass,
                                         double transverse_constant = constants::olshanii_c);

// Checks positivity of all fields and a/a_perp < 1/C. Throws std::domain_error.
void validate(const PhysicalTrapConfig& config);

TrapUnitsProblem to_trap_units(const PhysicalTrapConfig& config, int n_particles);
InverseInteractionUnits to_inverse_interaction_units(const PhysicalTrapConfig& config);

// V0 that yields a given k0_hat at this trap length and mass.
double trap_depth_for_k0_hat(double k0_hat, double trap_length, double atom_mass);

double trap_energy_unit(const PhysicalTrapConfig& config);                   // J per trap unit
double energy_to_physical(double e_trap, const PhysicalTrapConfig& config); // J
double energy_to_nanokelvin(double e_trap, const PhysicalTrapConfig& config);

double joule_to_nanokelvin(double e);
double nanokelvin_to_joule(double t_nk);

}  // namespace wellbound

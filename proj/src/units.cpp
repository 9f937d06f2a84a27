#include "wellbound/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wellbound {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

double transverse_length(double omega_perp, double atom_mass) {
  require_positive(omega_perp, "omega_perp");
  require_positive(atom_mass, "atom_mass");
  return std::sqrt(2.0 * constants::hbar / (atom_mass * omega_perp));
}

double interaction_strength(double scattering_length, double omega_perp, double atom_mass,
                            double transverse_constant) {
  require_positive(scattering_length, "scattering_length");
  const double a_perp = transverse_length(omega_perp, atom_mass);
  const double ratio = scattering_length / a_perp;
  const double denom = 1.0 - transverse_constant * ratio;
  if (denom <= 0.0) {
    throw std::domain_error(
        "confinement resonance: a/a_perp = " + std::to_string(ratio) +
        " is not below 1/C; the quasi-1D coupling formula is invalid here");
  }
  return 4.0 * scattering_length / (a_perp * a_perp) / denom;
}

double scattering_length_for_interaction(double c, double omega_perp, double atom_mass,
                                         double transverse_constant) {
  require_positive(c, "interaction strength");
  const double a_perp = transverse_length(omega_perp, atom_mass);
  return c * a_perp * a_perp / (4.0 + transverse_constant * c * a_perp);
}

void validate(const PhysicalTrapConfig& config) {
  require_positive(config.atom_mass, "atom_mass");
  require_positive(config.scattering_length, "scattering_length");
  require_positive(config.omega_perp, "omega_perp");
  require_positive(config.trap_length, "trap_length");
  if (!(config.trap_depth >= 0.0) || !std::isfinite(config.trap_depth)) {
    throw std::domain_error("trap_depth must be non-negative and finite");
  }
  // Evaluating c checks a/a_perp < 1/C as a side effect.
  interaction_strength(config.scattering_length, config.omega_perp, config.atom_mass);
}

TrapUnitsProblem to_trap_units(const PhysicalTrapConfig& config, int n_particles) {
  validate(config);
  if (n_particles < 1) throw std::domain_error("n_particles must be >= 1");
  const double c = interaction_strength(config.scattering_length, config.omega_perp,
                                        config.atom_mass);
  TrapUnitsProblem p;
  p.c_hat = c * config.trap_length;
  p.k0_hat = config.trap_length *
             std::sqrt(2.0 * config.atom_mass * config.trap_depth) / constants::hbar;
  p.n_particles = n_particles;
  return p;
}

InverseInteractionUnits to_inverse_interaction_units(const PhysicalTrapConfig& config) {
  validate(config);
  const double c = interaction_strength(config.scattering_length, config.omega_perp,
                                        config.atom_mass);
  InverseInteractionUnits u;
  u.x0 = c * config.trap_length;
  u.k0 = std::sqrt(2.0 * config.atom_mass * config.trap_depth) / constants::hbar / c;
  u.energy_unit = constants::hbar * constants::hbar * c * c / config.atom_mass;
  return u;
}

double trap_depth_for_k0_hat(double k0_hat, double trap_length, double atom_mass) {
  if (k0_hat < 0.0) throw std::domain_error("k0_hat must be non-negative");
  require_positive(trap_length, "trap_length");
  require_positive(atom_mass, "atom_mass");
  const double hk = constants::hbar * k0_hat / trap_length;
  return hk * hk / (2.0 * atom_mass);
}

double trap_energy_unit(const PhysicalTrapConfig& config) {
  return constants::hbar * constants::hbar /
         (config.atom_mass * config.trap_length * config.trap_length);
}

double energy_to_physical(double e_trap, const PhysicalTrapConfig& config) {
  return e_trap * trap_energy_unit(config);
}

double energy_to_nanokelvin(double e_trap, const PhysicalTrapConfig& config) {
  return joule_to_nanokelvin(energy_to_physical(e_trap, config));
}

double joule_to_nanokelvin(double e) { return e / constants::k_boltzmann * 1e9; }

double nanokelvin_to_joule(double t_nk) { return t_nk * 1e-9 * constants::k_boltzmann; }

}  // namespace wellbound

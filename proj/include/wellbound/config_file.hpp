#pragma once

#include <iosfwd>
#include <string>

#include "wellbound/units.hpp"

namespace wellbound {

// One trap configuration as read from a flat key-value config file.
struct TrapSetup {
  PhysicalTrapConfig config;
  int n_particles = 1;
  std::string atom;  // free-form species label
};

// Parses the flat `key = value` format with keys
//   atom, mass_kg, scattering_length_m, omega_perp_hz, trap_length_m,
//   trap_depth_nk, n_particles
// Blank lines and lines starting with '#' are ignored. omega_perp_hz is an
// ordinary frequency and is multiplied by 2*pi. Unknown or missing keys and
// invalid values are hard errors (std::invalid_argument).
TrapSetup parse_trap_setup(std::istream& in);

// Loads and parses a config file; throws std::runtime_error on I/O failure.
TrapSetup load_trap_setup(const std::string& path);

// Canonical one-line-per-key snapshot of a setup, in file format.
std::string format_trap_setup(const TrapSetup& setup);

}  // namespace wellbound

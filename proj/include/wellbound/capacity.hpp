#pragma once

#include <string>

#include "wellbound/secular.hpp"

namespace wellbound {

enum class ThresholdAxis { trap_depth, trap_length, interaction_strength };

std::string to_string(ThresholdAxis axis);

// Copy of `base` with one axis replaced. The interaction axis sets the
// scattering length that reproduces the requested c at the config's transverse
// confinement.
PhysicalTrapConfig with_axis_value(const PhysicalTrapConfig& base, ThresholdAxis axis,
                                   double value);

struct ThresholdQuery {
  PhysicalTrapConfig base;
  int n = 1;
  ThresholdAxis axis = ThresholdAxis::trap_depth;
  double bracket_low = 0.0;   // in the axis's SI unit (J, m, or 1/m)
  double bracket_high = 0.0;
};

struct ThresholdResult {
  double threshold = 0.0;        // axis value, SI unit
  int capacity_below = 0;        // trap capacity at the low end of the final bracket
  int capacity_above = 0;        // ... at the high end
  double bisection_width = 0.0;  // final bracket width, SI unit
};

// True iff the n-boson ground state is bound at this configuration.
bool exists_bound_state(const PhysicalTrapConfig& config, int n,
                        const SolverSettings& settings = {});

// Largest n <= n_max with a bound n-boson ground state; 0 if none. Linear
// upward scan with early exit; the assumption that existence at n implies
// existence at n-1 is checked separately by the test suite.
int trap_capacity(const PhysicalTrapConfig& config, int n_max,
                  const SolverSettings& settings = {});

// Bisects the existence predicate along the chosen axis until the bracket
// width is <= rel_tol * value. Throws std::invalid_argument when the predicate
// does not differ at the bracket ends.
ThresholdResult ionization_threshold(const ThresholdQuery& query, double rel_tol = 1e-4,
                                     const SolverSettings& settings = {});

}  // namespace wellbound

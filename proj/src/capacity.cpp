#include "wellbound/capacity.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wellbound/spectrum.hpp"

namespace wellbound {

std::string to_string(ThresholdAxis axis) {
  switch (axis) {
    case ThresholdAxis::trap_depth: return "trap_depth";
    case ThresholdAxis::trap_length: return "trap_length";
    case ThresholdAxis::interaction_strength: return "interaction_strength";
  }
  return "?";
}

PhysicalTrapConfig with_axis_value(const PhysicalTrapConfig& base, ThresholdAxis axis,
                                   double value) {
  PhysicalTrapConfig config = base;
  switch (axis) {
    case ThresholdAxis::trap_depth:
      config.trap_depth = value;
      break;
    case ThresholdAxis::trap_length:
      config.trap_length = value;
      break;
    case ThresholdAxis::interaction_strength:
      config.scattering_length =
          scattering_length_for_interaction(value, base.omega_perp, base.atom_mass);
      break;
  }
  return config;
}

bool exists_bound_state(const PhysicalTrapConfig& config, int n,
                        const SolverSettings& settings) {
  return ground_state(to_trap_units(config, n), settings).bound();
}

int trap_capacity(const PhysicalTrapConfig& config, int n_max,
                  const SolverSettings& settings) {
  if (n_max < 1) throw std::invalid_argument("trap_capacity: n_max must be >= 1");
  int capacity = 0;
  for (int n = 1; n <= n_max; ++n) {
    if (!exists_bound_state(config, n, settings)) break;
    capacity = n;
  }
  return capacity;
}

ThresholdResult ionization_threshold(const ThresholdQuery& query, double rel_tol,
                                     const SolverSettings& settings) {
  if (!(query.bracket_low > 0.0) || !(query.bracket_low < query.bracket_high)) {
    throw std::invalid_argument("ionization_threshold: bracket must satisfy 0 < low < high");
  }
  if (!(rel_tol > 0.0)) throw std::invalid_argument("ionization_threshold: tol must be positive");

  const auto exists_at = [&](double value) {
    return exists_bound_state(with_axis_value(query.base, query.axis, value), query.n,
                              settings);
  };

  double lo = query.bracket_low;
  double hi = query.bracket_high;
  const bool at_lo = exists_at(lo);
  const bool at_hi = exists_at(hi);
  if (at_lo == at_hi) {
    std::ostringstream msg;
    msg << "ionization_threshold: the " << query.n << "-boson state is "
        << (at_lo ? "bound" : "unbound") << " at both ends of the " << to_string(query.axis)
        << " bracket [" << lo << ", " << hi << "]";
    throw std::invalid_argument(msg.str());
  }

  while ((hi - lo) > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    (exists_at(mid) == at_lo ? lo : hi) = mid;
  }

  ThresholdResult result;
  result.threshold = 0.5 * (lo + hi);
  result.bisection_width = hi - lo;
  const int report_max = query.n + 2;
  result.capacity_below =
      trap_capacity(with_axis_value(query.base, query.axis, lo), report_max, settings);
  result.capacity_above =
      trap_capacity(with_axis_value(query.base, query.axis, hi), report_max, settings);
  return result;
}

}  // namespace wellbound

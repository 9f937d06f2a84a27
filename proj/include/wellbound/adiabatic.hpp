#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "wellbound/secular.hpp"

namespace wellbound {

// What to do when the excitation gap is undefined at a sampled depth (the
// first-excited state, or the whole n-particle state, is unbound there).
//  strict            error naming the failing depth
//  extend_from_onset floor the profile with the gap at its existence onset,
//                    the smallest protected gap the n-particle system ever
//                    has; a conservative (upper-bound) culling time
enum class GapFloorPolicy { strict, extend_from_onset };

struct CullingEstimate {
  double v_start = 0.0;  // J, deeper endpoint
  double v_end = 0.0;    // J
  std::vector<std::pair<double, double>> samples;  // (V0 J, gap J), ascending in V0
  double t_min = 0.0;    // s
  std::optional<double> gap_onset_depth;  // J, set when the floor was used
};

// Trapezoidal integral of hbar / gap(V)^2 over [v_lo, v_hi] given samples of
// the gap profile. Exposed separately so synthetic profiles can be tested
// against closed forms.
double adiabatic_time_from_profile(const std::vector<std::pair<double, double>>& samples);

// Minimum adiabatic culling time for lowering the depth from v_start to v_end:
// the speed bound |dV0/dt| <= gap(V0)^2 / hbar integrates to
//   t_min = integral hbar / gap(V0)^2 dV0
// over sample_count depths. Endpoint samples are inset by endpoint_inset of
// the interval. Gap samples are evaluated concurrently.
//
// Preconditions: v_start > v_end > 0, sample_count >= 8. In strict mode an
// undefined gap at any sample throws std::runtime_error naming the depth.
CullingEstimate min_culling_time(const PhysicalTrapConfig& base, int n, double v_start,
                                 double v_end, int sample_count,
                                 double endpoint_inset = 0.01,
                                 GapFloorPolicy policy = GapFloorPolicy::strict,
                                 const SolverSettings& settings = {});

}  // namespace wellbound

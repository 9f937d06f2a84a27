#include "wellbound/adiabatic.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "wellbound/spectrum.hpp"
#include "wellbound/sweep.hpp"

namespace wellbound {

double adiabatic_time_from_profile(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("adiabatic_time_from_profile: need at least two samples");
  }
  double t = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const auto& [v0, g0] = samples[i - 1];
    const auto& [v1, g1] = samples[i];
    if (!(v1 > v0)) throw std::invalid_argument("profile samples must ascend in depth");
    if (!(g0 > 0.0) || !(g1 > 0.0)) throw std::invalid_argument("profile gaps must be positive");
    t += 0.5 * (1.0 / (g0 * g0) + 1.0 / (g1 * g1)) * (v1 - v0);
  }
  return constants::hbar * t;
}

namespace {

// Gap of the n-particle system at depth v (J), or nullopt when the ground or
// first-excited state is unbound there.
std::optional<double> gap_at_depth(const PhysicalTrapConfig& base, int n, double v,
                                   const SolverSettings& settings) {
  PhysicalTrapConfig config = base;
  config.trap_depth = v;
  const TrapUnitsProblem p = to_trap_units(config, n);
  const SolveOutcome ground = ground_state(p, settings);
  if (!ground.bound()) return std::nullopt;
  const SolveOutcome excited = first_excited(p, settings);
  if (!excited.bound()) return std::nullopt;
  return energy_to_physical(excited.solution().e_total - ground.solution().e_total, config);
}

// Smallest depth at which the gap exists, found by upward doubling from
// `from` and bisection; the gap evaluated just above it is the smallest
// protected gap the n-particle system ever has.
double gap_at_onset(const PhysicalTrapConfig& base, int n, double from,
                    const SolverSettings& settings) {
  double lo = from;
  double hi = from;
  std::optional<double> g;
  for (int i = 0; i < 40 && !g; ++i) {
    lo = hi;
    hi *= 2.0;
    g = gap_at_depth(base, n, hi, settings);
  }
  if (!g) {
    throw std::runtime_error("min_culling_time: no excitation gap exists for the " +
                             std::to_string(n) + "-particle system at any probed depth");
  }
  while ((hi - lo) > 1e-4 * hi) {
    const double mid = 0.5 * (lo + hi);
    (gap_at_depth(base, n, mid, settings) ? hi : lo) = mid;
  }
  const double onset = hi;
  for (double eps = 1e-3; eps < 1.0; eps *= 4.0) {
    if (auto value = gap_at_depth(base, n, onset * (1.0 + eps), settings)) return *value;
  }
  throw std::runtime_error("min_culling_time: failed to evaluate the gap at its onset");
}

}  // namespace

CullingEstimate min_culling_time(const PhysicalTrapConfig& base, int n, double v_start,
                                 double v_end, int sample_count, double endpoint_inset,
                                 GapFloorPolicy policy, const SolverSettings& settings) {
  validate(base);
  if (!(v_start > v_end) || !(v_end > 0.0)) {
    throw std::invalid_argument("min_culling_time: need v_start > v_end > 0");
  }
  if (sample_count < 8) throw std::invalid_argument("min_culling_time: sample_count must be >= 8");
  if (!(endpoint_inset >= 0.0) || !(endpoint_inset < 0.5)) {
    throw std::invalid_argument("min_culling_time: endpoint_inset must be in [0, 0.5)");
  }

  const double width = v_start - v_end;
  const double lo = v_end + endpoint_inset * width;
  const double hi = v_start - endpoint_inset * width;

  CullingEstimate estimate;
  estimate.v_start = v_start;
  estimate.v_end = v_end;

  std::vector<double> depths(static_cast<std::size_t>(sample_count));
  for (int i = 0; i < sample_count; ++i) {
    depths[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (sample_count - 1);
  }
  std::vector<std::optional<double>> gaps(depths.size());
  parallel_for_index(sample_count, 0, [&](int i) {
    const auto idx = static_cast<std::size_t>(i);
    gaps[idx] = gap_at_depth(base, n, depths[idx], settings);
  });

  std::optional<double> floor_gap;
  for (std::size_t i = 0; i < depths.size(); ++i) {
    if (gaps[i]) continue;
    if (policy == GapFloorPolicy::strict) {
      std::ostringstream msg;
      msg << "min_culling_time: the excitation gap of the " << n
          << "-particle system is undefined at V0 = " << joule_to_nanokelvin(depths[i])
          << " nK";
      throw std::runtime_error(msg.str());
    }
    if (!floor_gap) {
      floor_gap = gap_at_onset(base, n, std::max(v_start, depths[i]), settings);
      estimate.gap_onset_depth = std::nullopt;  // set below once known precisely
    }
    gaps[i] = floor_gap;
  }
  if (floor_gap) estimate.gap_onset_depth = *floor_gap;

  estimate.samples.reserve(depths.size());
  for (std::size_t i = 0; i < depths.size(); ++i) {
    estimate.samples.emplace_back(depths[i], *gaps[i]);
  }
  estimate.t_min = adiabatic_time_from_profile(estimate.samples);
  return estimate;
}

}  // namespace wellbound

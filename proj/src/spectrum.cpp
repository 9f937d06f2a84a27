#include "wellbound/spectrum.hpp"

#include <stdexcept>

namespace wellbound {

SolveOutcome ground_state(const TrapUnitsProblem& p, const SolverSettings& settings) {
  return solve(p, QuantumNumbers::ground(p.n_particles), settings);
}

SolveOutcome first_excited(const TrapUnitsProblem& p, const SolverSettings& settings) {
  return solve(p, QuantumNumbers::first_excited(p.n_particles), settings);
}

GapResult energy_gap(const TrapUnitsProblem& p, const SolverSettings& settings) {
  SolveOutcome ground = ground_state(p, settings);
  if (!ground.bound()) {
    throw std::runtime_error("energy_gap: no " + std::to_string(p.n_particles) +
                             "-particle ground state (" + ground.failure().diagnostic + ")");
  }
  GapResult result;
  result.ground = ground.solution();
  SolveOutcome excited = first_excited(p, settings);
  if (excited.bound()) {
    result.excited = excited.solution();
    result.gap = result.excited->e_total - result.ground.e_total;
  }
  return result;
}

}  // namespace wellbound

#pragma once

#include <optional>

#include "wellbound/secular.hpp"

namespace wellbound {

// Ground and first-excited states with their gap, all in trap units.
struct GapResult {
  BetheSolution ground;
  std::optional<BetheSolution> excited;  // absent when the first excited state is unbound
  std::optional<double> gap;             // excited.e_total - ground.e_total, > 0 when present
};

// Ground state: I = {1..N}.
SolveOutcome ground_state(const TrapUnitsProblem& p, const SolverSettings& settings = {});

// First excited state: I = {1..N-1, N+1}. States beyond the first excitation
// have no established ordering; solve them with explicit quantum numbers.
SolveOutcome first_excited(const TrapUnitsProblem& p, const SolverSettings& settings = {});

// Solves both states. Throws std::runtime_error when the ground state is
// unbound (no system); an unbound excited state leaves gap absent.
GapResult energy_gap(const TrapUnitsProblem& p, const SolverSettings& settings = {});

}  // namespace wellbound

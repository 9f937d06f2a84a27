#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wellbound/units.hpp"

namespace wellbound {

// Returns a violation description if the set is not admissible (entries must
// be positive and mutually distinct), std::nullopt otherwise. Order does not
// matter; duplicates are rejected.
std::optional<std::string> validate_quantum_numbers(std::span<const int> values);

// Strictly ascending, positive, mutually distinct integers labelling a Bethe
// state. The ground state of N bosons is {1..N}, the first excited state
// {1..N-1, N+1}.
class QuantumNumbers {
 public:
  // Sorts and validates; throws std::invalid_argument on violation.
  static QuantumNumbers checked(std::vector<int> values);
  static QuantumNumbers ground(int n_particles);
  static QuantumNumbers first_excited(int n_particles);

  const std::vector<int>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }

 private:
  explicit QuantumNumbers(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

struct SolverSettings {
  int continuation_steps = 40;      // log-spaced points on the continuation path
  double newton_tolerance = 1e-10;  // residual inf-norm for convergence
  int newton_max_iterations = 50;   // per continuation step
  double min_relative_step = 1e-6;  // refinement floor for the continuation parameter
  double boundary_margin = 1e-12;   // bound criterion: k_j < k0_hat * (1 - margin)
  double ascent_anchor = 1e-3;      // small-c anchor when the Tonks start is missing
};

// A converged bound Bethe state in trap units.
struct BetheSolution {
  Eigen::VectorXd k;         // wave numbers, strictly ascending, inside (0, k0_hat)
  Eigen::VectorXd kappa;     // sqrt(k0_hat^2 - k_j^2)
  Eigen::VectorXd e_single;  // -kappa_j^2 / 2, ascending
  double e_total = 0.0;      // sum_j (k_j^2 - k0_hat^2) / 2
  double residual_norm = 0.0;
  int newton_iterations = 0;    // summed over the continuation path
  int continuation_steps = 0;   // converged path points, including refinements
  bool path_monotone = true;    // e_total non-increasing as c_hat decreased along the path
};

struct Unbound {
  std::string diagnostic;
  double last_c_hat = 0.0;  // continuation parameter reached
};

class SolveOutcome {
 public:
  static SolveOutcome bound_state(BetheSolution s) { return SolveOutcome(std::move(s)); }
  static SolveOutcome unbound(Unbound u) { return SolveOutcome(std::move(u)); }

  bool bound() const { return std::holds_alternative<BetheSolution>(state_); }
  const BetheSolution& solution() const;  // throws std::logic_error if unbound
  const Unbound& failure() const;         // throws std::logic_error if bound

 private:
  explicit SolveOutcome(BetheSolution s) : state_(std::move(s)) {}
  explicit SolveOutcome(Unbound u) : state_(std::move(u)) {}
  std::variant<BetheSolution, Unbound> state_;
};

// Residual of the secular equations in trap units:
//   F_j = k_j - pi I_j + 2 asin(k_j / k0_hat)
//         + sum_{l != j} [ atan((k_j + k_l)/c_hat) + atan((k_j - k_l)/c_hat) ]
// Preconditions: k strictly inside (0, k0_hat) componentwise (the asin argument
// is clamped within a 1e-12 slack; beyond that a std::domain_error signals an
// unbound configuration), |I| = |k| = p.n_particles. NaN input is a domain error.
Eigen::VectorXd residual(const Eigen::Ref<const Eigen::VectorXd>& k, const QuantumNumbers& I,
                         const TrapUnitsProblem& p);

// Analytic Jacobian of `residual`:
//   J_jj = 1 + 2/kappa_j + sum_{l != j} [ c/(c^2+(k_j+k_l)^2) + c/(c^2+(k_j-k_l)^2) ]
//   J_jl = c/(c^2+(k_j+k_l)^2) - c/(c^2+(k_j-k_l)^2)      (l != j)
// Throws std::domain_error when some kappa_j = 0 (ionization boundary).
Eigen::MatrixXd jacobian(const Eigen::Ref<const Eigen::VectorXd>& k, const QuantumNumbers& I,
                         const TrapUnitsProblem& p);

struct TonksOutcome {
  std::optional<Eigen::VectorXd> k;  // ascending roots when all levels are bound
  std::string diagnostic;            // names the first failing quantum number otherwise
};

// Infinite-repulsion limit: each k_j independently solves
//   k + 2 asin(k / k0_hat) = pi I_j     on (0, k0_hat),
// by bisection. The left side is strictly increasing with supremum k0_hat + pi,
// so a root exists iff pi I_j < k0_hat + pi.
TonksOutcome solve_tonks_limit(const QuantumNumbers& I, double k0_hat);

// Solves the secular equations at p.c_hat by numerical continuation.
//
// Primary route: start from the Tonks-limit solution at
// c_start = max(1e6, 1e3 * p.c_hat) and descend to p.c_hat over log-spaced
// steps, Newton-solving at each step seeded by the previous one. Failed steps
// are refined by inserting log-midpoints; when the relative step falls below
// settings.min_relative_step the run stops as Unbound with the last parameter
// reached.
//
// When the Tonks start itself does not exist the state can still be bound at
// the (smaller) target interaction: the branch is then entered from a small-c
// anchor seeded by the non-interacting effective levels m_j = I_j - (j-1) with
// their O(sqrt(c)) in-group splitting, and the continuation ascends to p.c_hat
// under the same refinement policy.
//
// A converged state is Bound only if every k_j < k0_hat*(1 - boundary_margin).
SolveOutcome solve(const TrapUnitsProblem& p, const QuantumNumbers& I,
                   const SolverSettings& settings = {});

}  // namespace wellbound

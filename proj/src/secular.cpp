#include "wellbound/secular.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wellbound {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using std::numbers::pi;

std::optional<std::string> validate_quantum_numbers(std::span<const int> values) {
  if (values.empty()) return "quantum-number set is empty";
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1) {
    return "quantum numbers must be positive; got " + std::to_string(sorted.front());
  }
  for (std::size_t j = 1; j < sorted.size(); ++j) {
    if (sorted[j] == sorted[j - 1]) {
      return "quantum numbers must be mutually distinct; " + std::to_string(sorted[j]) +
             " appears more than once";
    }
  }
  return std::nullopt;
}

QuantumNumbers QuantumNumbers::checked(std::vector<int> values) {
  if (auto violation = validate_quantum_numbers(values)) {
    throw std::invalid_argument(*violation);
  }
  std::sort(values.begin(), values.end());
  return QuantumNumbers(std::move(values));
}

QuantumNumbers QuantumNumbers::ground(int n_particles) {
  std::vector<int> v(static_cast<std::size_t>(n_particles));
  for (int j = 0; j < n_particles; ++j) v[static_cast<std::size_t>(j)] = j + 1;
  return checked(std::move(v));
}

QuantumNumbers QuantumNumbers::first_excited(int n_particles) {
  auto v = ground(n_particles).values();
  v.back() = n_particles + 1;
  return checked(std::move(v));
}

const BetheSolution& SolveOutcome::solution() const {
  if (!bound()) throw std::logic_error("SolveOutcome: no solution, state is unbound");
  return std::get<BetheSolution>(state_);
}

const Unbound& SolveOutcome::failure() const {
  if (bound()) throw std::logic_error("SolveOutcome: state is bound");
  return std::get<Unbound>(state_);
}

namespace {

constexpr double kAsinSlack = 1e-12;

void check_shapes(const Eigen::Ref<const VectorXd>& k, const QuantumNumbers& I,
                  const TrapUnitsProblem& p) {
  if (k.size() != I.size() || I.size() != p.n_particles) {
    throw std::invalid_argument("secular: |k|, |I| and n_particles must agree");
  }
  if (!(p.c_hat > 0.0) || !(p.k0_hat > 0.0)) {
    throw std::domain_error("secular: c_hat and k0_hat must be positive");
  }
}

// asin(k/k0) with the documented 1e-12 slack above 1.
double clamped_asin(double k, double k0) {
  if (std::isnan(k)) throw std::domain_error("secular: NaN wave number");
  const double x = k / k0;
  if (x > 1.0 + kAsinSlack || x < 0.0) {
    throw std::domain_error("secular: wave number outside [0, k0_hat] beyond slack (unbound)");
  }
  return std::asin(std::clamp(x, 0.0, 1.0));
}

struct NewtonResult {
  bool converged = false;
  VectorXd k;
  int iterations = 0;
  double residual_norm = 0.0;
};

bool inside_domain(const VectorXd& k, double k0, double margin) {
  for (Eigen::Index j = 0; j < k.size(); ++j) {
    if (!(k[j] > 0.0) || !(k[j] < k0 * (1.0 - margin))) return false;
    if (j > 0 && !(k[j] > k[j - 1])) return false;
  }
  return true;
}

// Damped Newton iteration at fixed c_hat. Trial steps are halved until they
// stay inside the ordered domain and decrease the residual norm.
NewtonResult newton_refine(VectorXd k, const QuantumNumbers& I, const TrapUnitsProblem& p,
                           const SolverSettings& s) {
  NewtonResult result;
  if (!inside_domain(k, p.k0_hat, s.boundary_margin)) return result;
  VectorXd f = residual(k, I, p);
  double norm = f.lpNorm<Eigen::Infinity>();
  for (int it = 0; it < s.newton_max_iterations; ++it) {
    if (norm <= s.newton_tolerance) {
      result.converged = true;
      break;
    }
    ++result.iterations;
    const VectorXd dk = jacobian(k, I, p).partialPivLu().solve(-f);
    if (!dk.allFinite()) break;
    double lambda = 1.0;
    bool accepted = false;
    for (int halvings = 0; halvings < 40; ++halvings) {
      const VectorXd trial = k + lambda * dk;
      if (inside_domain(trial, p.k0_hat, s.boundary_margin)) {
        const VectorXd ft = residual(trial, I, p);
        const double nt = ft.lpNorm<Eigen::Infinity>();
        if (nt < norm) {
          k = trial;
          f = ft;
          norm = nt;
          accepted = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!accepted) break;
  }
  result.converged = result.converged || norm <= s.newton_tolerance;
  result.k = std::move(k);
  result.residual_norm = norm;
  return result;
}

// Non-interacting limit of a quantum-number set: particle j occupies the
// single-particle level m_j = I_j - (j-1) (the interaction sum telescopes to
// pi (j-1) as c -> 0). Equal m_j coalesce and split at O(sqrt(c)) with
// adjacent spacing sqrt(2c / (1 + 2/kappa)).
std::optional<VectorXd> small_c_seed(const QuantumNumbers& I, double c, double k0) {
  const int n = I.size();
  VectorXd k(n);
  int j = 0;
  while (j < n) {
    const int level = I[j] - j;
    int group_end = j;
    while (group_end + 1 < n && I[group_end + 1] - (group_end + 1) == level) ++group_end;
    const int size = group_end - j + 1;
    const TonksOutcome base = solve_tonks_limit(QuantumNumbers::checked({level}), k0);
    if (!base.k) return std::nullopt;
    const double kb = (*base.k)[0];
    const double kappa = std::sqrt(std::max(k0 * k0 - kb * kb, 1e-300));
    double delta = std::sqrt(2.0 * c / (1.0 + 2.0 / kappa));
    for (int r = 0; r < size; ++r) {
      k[j + r] = kb + (r - 0.5 * (size - 1)) * delta;
    }
    j = group_end + 1;
  }
  for (int i = 0; i < n; ++i) k[i] = std::clamp(k[i], 1e-14 * k0, k0 * (1.0 - 1e-9));
  // Shrink the splitting if adjacent groups ended up overlapping.
  for (int attempt = 0; attempt < 8; ++attempt) {
    bool ascending = true;
    for (int i = 1; i < n; ++i) ascending = ascending && k[i] > k[i - 1];
    if (ascending) return k;
    for (int i = 1; i < n; ++i) {
      if (k[i] <= k[i - 1]) k[i] = k[i - 1] + 0.25 * (k0 - k[i - 1]) * 1e-6;
    }
  }
  return std::nullopt;
}

struct PathResult {
  bool reached = false;
  VectorXd k;
  double last_c = 0.0;
  std::string diagnostic;
  int newton_iterations = 0;
  int continuation_steps = 0;
  bool monotone = true;
};

// Walks c from path.front() (already solved, seed k) through the remaining
// points. Failed steps insert log-midpoints; the walk stops when the relative
// step falls below min_relative_step.
PathResult walk_path(VectorXd k, std::deque<double> targets, double c_current,
                     const QuantumNumbers& I, TrapUnitsProblem p, const SolverSettings& s,
                     bool descending) {
  PathResult r;
  p.c_hat = c_current;
  double e_prev = (k.array().square() - p.k0_hat * p.k0_hat).sum() / 2.0;
  constexpr int kMaxPathPoints = 100000;
  int visited = 0;
  while (!targets.empty()) {
    if (++visited > kMaxPathPoints) {
      r.last_c = c_current;
      r.diagnostic = "continuation exceeded the path-point budget";
      return r;
    }
    const double c_next = targets.front();
    TrapUnitsProblem pn = p;
    pn.c_hat = c_next;
    NewtonResult step = newton_refine(k, I, pn, s);
    if (!step.converged) {
      const double c_mid = std::sqrt(c_current * c_next);
      if (std::abs(std::log(c_mid / c_current)) < s.min_relative_step) {
        r.last_c = c_current;
        std::ostringstream msg;
        msg << "continuation stalled at c_hat = " << c_current
            << " (Newton stopped converging below the minimum relative step)";
        r.diagnostic = msg.str();
        r.newton_iterations += step.iterations;
        return r;
      }
      targets.push_front(c_mid);
      r.newton_iterations += step.iterations;
      continue;
    }
    k = std::move(step.k);
    c_current = c_next;
    targets.pop_front();
    r.newton_iterations += step.iterations;
    ++r.continuation_steps;
    const double e_now = (k.array().square() - p.k0_hat * p.k0_hat).sum() / 2.0;
    const double slack = 1e-9 * (1.0 + std::abs(e_now));
    if (descending ? e_now > e_prev + slack : e_now < e_prev - slack) r.monotone = false;
    e_prev = e_now;
  }
  r.reached = true;
  r.k = std::move(k);
  r.last_c = c_current;
  return r;
}

std::deque<double> log_spaced(double from, double to, int steps) {
  std::deque<double> out;
  const double lf = std::log(from);
  const double lt = std::log(to);
  for (int i = 1; i <= steps; ++i) {
    out.push_back(std::exp(lf + (lt - lf) * i / steps));
  }
  if (!out.empty()) out.back() = to;  // land exactly on the target
  return out;
}

SolveOutcome package(VectorXd k, double residual_norm, const TrapUnitsProblem& p,
                     const SolverSettings& s, const PathResult& path, int extra_newton) {
  const double k0 = p.k0_hat;
  for (Eigen::Index j = 0; j < k.size(); ++j) {
    if (k[j] >= k0 * (1.0 - s.boundary_margin)) {
      std::ostringstream msg;
      msg << "bound-state criterion violated: k_" << (j + 1) << " = " << k[j]
          << " reached k0_hat = " << k0;
      return SolveOutcome::unbound({msg.str(), p.c_hat});
    }
  }
  BetheSolution sol;
  sol.k = std::move(k);
  sol.kappa = (k0 * k0 - sol.k.array().square()).sqrt().matrix();
  sol.e_single = (-sol.kappa.array().square() / 2.0).matrix();
  sol.e_total = (sol.k.array().square() - k0 * k0).sum() / 2.0;
  sol.residual_norm = residual_norm;
  sol.newton_iterations = path.newton_iterations + extra_newton;
  sol.continuation_steps = path.continuation_steps;
  sol.path_monotone = path.monotone;
  return SolveOutcome::bound_state(std::move(sol));
}

}  // namespace

VectorXd residual(const Eigen::Ref<const VectorXd>& k, const QuantumNumbers& I,
                  const TrapUnitsProblem& p) {
  check_shapes(k, I, p);
  const int n = I.size();
  VectorXd f(n);
  for (int j = 0; j < n; ++j) {
    if (std::isnan(k[j])) throw std::domain_error("secular: NaN wave number");
    double v = k[j] - pi * I[j] + 2.0 * clamped_asin(k[j], p.k0_hat);
    for (int l = 0; l < n; ++l) {
      if (l == j) continue;
      v += std::atan((k[j] + k[l]) / p.c_hat) + std::atan((k[j] - k[l]) / p.c_hat);
    }
    f[j] = v;
  }
  return f;
}

MatrixXd jacobian(const Eigen::Ref<const VectorXd>& k, const QuantumNumbers& I,
                  const TrapUnitsProblem& p) {
  check_shapes(k, I, p);
  const int n = I.size();
  const double c = p.c_hat;
  MatrixXd J = MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const double kap2 = p.k0_hat * p.k0_hat - k[j] * k[j];
    if (kap2 <= 0.0) {
      throw std::domain_error("secular: kappa vanished (state at the ionization boundary), "
                              "the Jacobian is singular");
    }
    J(j, j) = 1.0 + 2.0 / std::sqrt(kap2);
    for (int l = 0; l < n; ++l) {
      if (l == j) continue;
      const double sum = k[j] + k[l];
      const double diff = k[j] - k[l];
      const double tp = c / (c * c + sum * sum);
      const double tm = c / (c * c + diff * diff);
      J(j, j) += tp + tm;
      J(j, l) = tp - tm;
    }
  }
  return J;
}

TonksOutcome solve_tonks_limit(const QuantumNumbers& I, double k0_hat) {
  if (!(k0_hat > 0.0)) throw std::domain_error("solve_tonks_limit: k0_hat must be positive");
  const int n = I.size();
  VectorXd k(n);
  for (int j = 0; j < n; ++j) {
    const double target = pi * I[j];
    if (target >= k0_hat + pi) {
      TonksOutcome out;
      std::ostringstream msg;
      msg << "no Tonks-limit root for quantum number I = " << I[j]
          << ": pi*I = " << target << " is not below k0_hat + pi = " << k0_hat + pi;
      out.diagnostic = msg.str();
      return out;
    }
    double lo = 0.0;
    double hi = k0_hat;
    for (int it = 0; it < 200 && (hi - lo) > 1e-16 * k0_hat; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double g = mid + 2.0 * std::asin(std::min(mid / k0_hat, 1.0)) - target;
      (g < 0.0 ? lo : hi) = mid;
    }
    k[j] = 0.5 * (lo + hi);
  }
  return TonksOutcome{k, ""};
}

SolveOutcome solve(const TrapUnitsProblem& p, const QuantumNumbers& I,
                   const SolverSettings& settings) {
  if (auto violation = validate_quantum_numbers(I.values())) {
    throw std::invalid_argument(*violation);
  }
  if (I.size() != p.n_particles) {
    throw std::invalid_argument("solve: |I| must equal n_particles");
  }
  if (!(p.c_hat > 0.0) || !(p.k0_hat > 0.0)) {
    throw std::domain_error("solve: c_hat and k0_hat must be positive");
  }

  const double c_target = p.c_hat;
  const double c_start = std::max(1e6, 1e3 * c_target);
  const TonksOutcome tonks = solve_tonks_limit(I, p.k0_hat);

  PathResult path;
  if (tonks.k) {
    TrapUnitsProblem p0 = p;
    p0.c_hat = c_start;
    NewtonResult start = newton_refine(*tonks.k, I, p0, settings);
    if (!start.converged) {
      return SolveOutcome::unbound(
          {"Newton failed at the Tonks-limit continuation start", c_start});
    }
    path = walk_path(start.k, log_spaced(c_start, c_target, settings.continuation_steps),
                     c_start, I, p, settings, /*descending=*/true);
    path.newton_iterations += start.iterations;
    ++path.continuation_steps;
  } else {
    // The Tonks start is missing, but the branch can still be bound at the
    // (smaller) target interaction. Enter it from a small-c anchor instead.
    const double c_anchor = std::min(c_target, settings.ascent_anchor);
    const std::optional<VectorXd> seed = small_c_seed(I, c_anchor, p.k0_hat);
    if (!seed) {
      return SolveOutcome::unbound(
          {"no bound state in the non-interacting limit (" + tonks.diagnostic + ")",
           c_anchor});
    }
    TrapUnitsProblem p0 = p;
    p0.c_hat = c_anchor;
    NewtonResult start = newton_refine(*seed, I, p0, settings);
    if (!start.converged) {
      return SolveOutcome::unbound(
          {"Newton failed at the small-c continuation anchor", c_anchor});
    }
    if (c_target <= c_anchor * (1.0 + 1e-12)) {
      path.reached = true;
      path.k = start.k;
      path.last_c = c_target;
      path.continuation_steps = 1;
      path.newton_iterations = start.iterations;
    } else {
      path = walk_path(start.k, log_spaced(c_anchor, c_target, settings.continuation_steps),
                       c_anchor, I, p, settings, /*descending=*/false);
      path.newton_iterations += start.iterations;
      ++path.continuation_steps;
    }
  }

  if (!path.reached) {
    return SolveOutcome::unbound({path.diagnostic, path.last_c});
  }

  // Final polish and residual report at the exact target.
  NewtonResult final = newton_refine(path.k, I, p, settings);
  if (!final.converged) {
    return SolveOutcome::unbound(
        {"Newton failed to converge at the target interaction strength", c_target});
  }
  return package(std::move(final.k), final.residual_norm, p, settings, path,
                 final.iterations);
}

}  // namespace wellbound

#pragma once

#include <vector>

#include "wellbound/units.hpp"

namespace wellbound {

// Bound levels of the single 1D finite square well (width 1, depth k0_hat^2/2,
// trap units) from the even/odd parity conditions
//   even:  kappa = k tan(k/2)        odd:  kappa = -k cot(k/2)
// solved by bisection, independently of the secular-equation route. Returns
// energies -kappa^2/2 ascending; fewer than n_levels for shallow wells.
std::vector<double> single_particle_levels(double k0_hat, int n_levels);

// Uniform grid for the two-body finite-difference oracle. The grid spans
// [-domain_half_width, domain_half_width] per particle with Dirichlet walls;
// the contact interaction is the standard on-diagonal c_hat/h regularization,
// whose O(h) error is why callers Richardson-extrapolate over two resolutions.
struct FdGridSpec {
  int points_per_dimension = 239;  // interior points; >= 64
  double domain_half_width = 1.5;  // > 0.5 (the well edge)
};

// Ground-state energy of the discretized two-boson Hamiltonian (3-point
// Laplacian per dimension, well potential with half-weight edge samples,
// on-diagonal delta term) via shift-inverted power iteration on the sparse
// matrix. Trap units. Throws std::domain_error unless p.n_particles == 2 and
// the grid spec is admissible; std::runtime_error with the final residual if
// the eigen-iteration fails to converge.
double fd_two_body_energy(const TrapUnitsProblem& p, const FdGridSpec& spec = {});

}  // namespace wellbound

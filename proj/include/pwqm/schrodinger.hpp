#ifndef PWQM_SCHRODINGER_HPP
#define PWQM_SCHRODINGER_HPP

#include <Eigen/Core>
#include <vector>

#include "pwqm/basis.hpp"
#include "pwqm/potential.hpp"

namespace pwqm {

/// Lowest eigenpairs of a Hamiltonian. States are normalized, mutually
/// orthogonal, tagged with their eigenvalue, and phase-fixed so the
/// largest-magnitude position component is real positive.
struct EigenSolution {
  UniformGrid grid;
  int count = 0;
  Eigen::VectorXd energies;  // ascending, hartree
  std::vector<WaveFunction> states;
  double mass = 1.0;
};

/// Dense H in the ascending-k momentum basis:
///   H[k,k'] = (p_k^2/2m) delta_{kk'} + Vhat(p_k - p_k')
/// with Vhat the discrete transform of the sampled potential. Guarded to
/// N^dim <= 4096.
Eigen::MatrixXcd assemble_hamiltonian(const PotentialField& pot, double mass);

/// Lowest `count` eigenpairs of assemble_hamiltonian(pot, mass).
EigenSolution solve_eigen(const PotentialField& pot, double mass, int count);

/// s-wave radial hydrogen: u''/(-2) - u/r = E u with u(0) = u(r_max) = 0,
/// solved in the sine (Dirichlet) basis so the kinetic operator is exact.
/// The returned states are the odd-periodic extensions of u on the doubled
/// grid [-r_max, r_max); they are exact discrete eigenpairs of the standard
/// plane-wave Hamiltonian with the even-extended potential -1/|x|, so all
/// verification operations apply unchanged. n_grid must be a power of two
/// >= 512 and r_max >= 20.
EigenSolution solve_hydrogen_radial(int n_grid, double r_max, int count = 1);

/// Radial profile u(r_i), r_i = i*h, of an odd-extended radial state,
/// rescaled so that int |u|^2 dr = 1. Includes both endpoints (u = 0).
struct RadialProfile {
  Eigen::VectorXd r;
  Eigen::VectorXd u;
  double h = 0.0;
};
RadialProfile radial_profile(const WaveFunction& odd_state);

}  // namespace pwqm

#endif

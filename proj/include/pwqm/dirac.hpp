#ifndef PWQM_DIRAC_HPP
#define PWQM_DIRAC_HPP

#include <Eigen/Core>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pwqm/grid.hpp"
#include "pwqm/verify.hpp"

namespace pwqm {

using Spinor4 = Eigen::Vector4cd;
using Matrix4 = Eigen::Matrix4cd;

/// Gamma matrices in the standard (Dirac) representation, metric (+,-,-,-):
/// {gamma^mu, gamma^nu} = 2 eta^{mu nu} I with machine-exact 0, +-1, +-i
/// entries; gamma0 Hermitian, gamma^i anti-Hermitian. Every checked
/// property is representation independent.
struct GammaSet {
  Matrix4 gamma0, gamma1, gamma2, gamma3;
};

GammaSet make_gammas();

/// 4-spinor field on a 1-d grid, component-major per point:
/// values[4*j + s]. Energy is the full relativistic eigenvalue (rest mass
/// included). psi^dagger psi sums to 1 when normalized.
struct SpinorField {
  UniformGrid grid;
  Eigen::VectorXcd values;  // 4 * N entries
  std::optional<double> energy;
};

/// Electromagnetic potential on a 1-d grid: scalar part A0 and the
/// grid-axis component of the vector potential. charge q = -1 for the
/// electron.
struct EMPotentialField {
  UniformGrid grid;
  Eigen::VectorXd a0;
  Eigen::VectorXd a_par;
  double charge = -1.0;
  std::string label;
};

/// Presets: dirac-free, dirac-well(depth,width), dirac-constant-A(a).
/// dirac-well sets A0 = depth inside |x| < width/2, which binds a
/// negative charge.
EMPotentialField make_em_potential(const UniformGrid& grid,
                                   const std::string& name,
                                   const std::map<std::string, double>& params = {},
                                   double charge = -1.0);

/// Max entry deviation of M- M+ from [(E-qA0)^2 - (p-qA/c)^2 c^2 - m^2c^4] I,
/// where M-+ = gamma0 (E - q A0) - gamma.(p - q A / c) c -+ m c^2. Exact for
/// spatially uniform potentials by the anticommutation relations.
double squaring_identity_check(const Eigen::Vector3d& p, double energy,
                               double a0, const Eigen::Vector3d& a, double q,
                               double m, double c);

enum class EnergyBranch { positive, negative };
enum class SpinDir { up, down };

struct FreeSpinor {
  Spinor4 u;       // normalized, u^dagger u = 1
  double energy;   // +-sqrt(p^2 c^2 + m^2 c^4)
};

/// Plane-wave spinor for momentum p along the grid axis, annihilated by
/// gamma0 E - gamma3 p c - m c^2.
FreeSpinor free_spinor(double p, EnergyBranch branch, SpinDir spin, double m,
                       double c);

/// Dense Hermitian 4N x 4N operator in the momentum (x) spinor basis,
/// basis index 4*k + s with ascending-k momentum ordering:
///   H = c alpha_z (p - q A_par / c) + beta m c^2 + q A0,
/// alpha_z = gamma0 gamma3, beta = gamma0. Guarded to N <= 1024.
Eigen::MatrixXcd assemble_dirac_hamiltonian(const EMPotentialField& pot,
                                            double m, double c);

/// Full eigenvalue spectrum (both branches), ascending.
Eigen::VectorXd dirac_spectrum(const EMPotentialField& pot, double m, double c);

struct DiracSolution {
  UniformGrid grid;
  double mass = 1.0;
  double c = 0.0;
  Eigen::VectorXd energies;  // ascending within the selection
  std::vector<SpinorField> states;
};

/// `count` eigenpairs nearest +mc^2 (the bound-electron branch); negative
/// branch states are kept in the spectrum but not selected.
DiracSolution solve_dirac(const EMPotentialField& pot, double m, double c,
                          int count);

/// Theta(r) = [gamma0 (E - q A0) - gamma3 (p - q A_par / c) c - m c^2] psi
/// with the momentum operator applied spectrally. Reports the pointwise
/// max and L2 norms and the averaged |int psibar Theta|.
ResidualReport theta_residual(const SpinorField& state,
                              const EMPotentialField& pot, double m, double c);

/// |LHS - RHS| of the averaged linear energy relation, both sides reduced
/// to scalars by the psibar(.)psi contraction: LHS sums
/// psibar [gamma0 E - gamma3 p c - m c^2] psi over the amplitudes, RHS is
/// the position integral of psibar [gamma0 q A0 - gamma3 q A_par] psi.
double averaged_linear_relation(const SpinorField& state,
                                const EMPotentialField& pot, double m, double c);

/// Averaged energies with the rest mass subtracted: kinetic_avg is
/// <c alpha_z p + beta m c^2> - mc^2 from the amplitudes, potential_avg is
/// <q A0 - q alpha_z A_par> from the position integral, total_avg the
/// energy tag minus mc^2.
EnergyBreakdown dirac_energy_breakdown(const SpinorField& state,
                                       const EMPotentialField& pot, double m,
                                       double c);

/// |a|^2 weight per momentum mode (summed over spinor components).
Eigen::VectorXd spinor_mode_weights(const SpinorField& state);

}  // namespace pwqm

#endif

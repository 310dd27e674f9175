#include "pwqm/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pwqm/basis.hpp"
#include "pwqm/linalg.hpp"

namespace pwqm {

namespace {

constexpr int kMaxDiracPoints = 1024;
const std::complex<double> kI{0.0, 1.0};

Eigen::Matrix2cd pauli(int i) {
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  switch (i) {
    case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 2: s(0, 1) = -kI; s(1, 0) = kI; break;
    case 3: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
  }
  return s;
}

Matrix4 gamma_spatial(int i) {
  Matrix4 g = Matrix4::Zero();
  g.block<2, 2>(0, 2) = pauli(i);
  g.block<2, 2>(2, 0) = -pauli(i);
  return g;
}

// alpha_z = gamma0 gamma3 and beta = gamma0, the Hamiltonian-form matrices
Matrix4 alpha_z() {
  const GammaSet g = make_gammas();
  return g.gamma0 * g.gamma3;
}

void check_dirac_grid(const UniformGrid& grid) {
  if (grid.dim() != 1)
    throw std::invalid_argument("dirac: 1-d grids only");
  if (grid.n() > kMaxDiracPoints)
    throw std::invalid_argument("dirac: grid too large (N > 1024)");
}

void check_state(const SpinorField& state, const EMPotentialField& pot) {
  if (!(state.grid == pot.grid))
    throw std::invalid_argument("dirac: state and potential grids differ");
  if (state.values.size() != 4 * static_cast<Eigen::Index>(state.grid.size()))
    throw std::invalid_argument("dirac: spinor field length does not match the grid");
  if (!state.energy.has_value() || !std::isfinite(*state.energy))
    throw std::invalid_argument("dirac: state has no finite energy tag");
  if (!state.values.allFinite())
    throw std::invalid_argument("dirac: state has non-finite values");
  if (std::abs(state.values.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("dirac: state is not normalized");
}

// per-component spectral transform of a spinor field
Eigen::VectorXcd spinor_to_momentum(const UniformGrid& grid,
                                    const Eigen::VectorXcd& values) {
  Eigen::VectorXcd out(values.size());
  const std::size_t n = grid.size();
  Eigen::VectorXcd comp(n);
  for (int s = 0; s < 4; ++s) {
    for (std::size_t j = 0; j < n; ++j) comp[j] = values[4 * j + s];
    detail::unitary_fft(grid, comp, true);
    for (std::size_t k = 0; k < n; ++k) out[4 * k + s] = comp[k];
  }
  return out;
}

Eigen::VectorXcd spinor_to_position(const UniformGrid& grid,
                                    const Eigen::VectorXcd& amps) {
  Eigen::VectorXcd out(amps.size());
  const std::size_t n = grid.size();
  Eigen::VectorXcd comp(n);
  for (int s = 0; s < 4; ++s) {
    for (std::size_t k = 0; k < n; ++k) comp[k] = amps[4 * k + s];
    detail::unitary_fft(grid, comp, false);
    for (std::size_t j = 0; j < n; ++j) out[4 * j + s] = comp[j];
  }
  return out;
}

}  // namespace

GammaSet make_gammas() {
  GammaSet g;
  g.gamma0 = Matrix4::Zero();
  g.gamma0(0, 0) = 1.0;
  g.gamma0(1, 1) = 1.0;
  g.gamma0(2, 2) = -1.0;
  g.gamma0(3, 3) = -1.0;
  g.gamma1 = gamma_spatial(1);
  g.gamma2 = gamma_spatial(2);
  g.gamma3 = gamma_spatial(3);
  return g;
}

EMPotentialField make_em_potential(const UniformGrid& grid,
                                   const std::string& name,
                                   const std::map<std::string, double>& params,
                                   double charge) {
  check_dirac_grid(grid);
  EMPotentialField pot{grid, Eigen::VectorXd::Zero(grid.size()),
                       Eigen::VectorXd::Zero(grid.size()), charge, name};
  auto param = [&params](const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };

  if (name == "dirac-free") return pot;
  if (name == "dirac-well") {
    const double depth = param("depth", 0.5);
    const double width = param("width", 2.0);
    if (width <= 0.0 || width >= grid.extent())
      throw std::invalid_argument("dirac-well width must be in (0, extent)");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double x = grid.axis_position(static_cast<int>(i));
      pot.a0[i] = (std::abs(x) < 0.5 * width) ? depth : 0.0;
    }
    return pot;
  }
  if (name == "dirac-constant-A") {
    pot.a_par.setConstant(param("a", 0.0));
    return pot;
  }
  throw std::invalid_argument("unknown EM potential preset: " + name);
}

double squaring_identity_check(const Eigen::Vector3d& p, double energy,
                               double a0, const Eigen::Vector3d& a, double q,
                               double m, double c) {
  const GammaSet g = make_gammas();
  const double e_kin = energy - q * a0;
  const Eigen::Vector3d pk = p - (q / c) * a;
  const Matrix4 x = g.gamma0 * e_kin -
                    (g.gamma1 * pk[0] + g.gamma2 * pk[1] + g.gamma3 * pk[2]) * c;
  const double mc2 = m * c * c;
  const Matrix4 minus = x - mc2 * Matrix4::Identity();
  const Matrix4 plus = x + mc2 * Matrix4::Identity();
  const double scalar = e_kin * e_kin - pk.squaredNorm() * c * c - mc2 * mc2;
  const Matrix4 dev = minus * plus - scalar * Matrix4::Identity();
  return dev.cwiseAbs().maxCoeff();
}

FreeSpinor free_spinor(double p, EnergyBranch branch, SpinDir spin, double m,
                       double c) {
  const double mc2 = m * c * c;
  const double e_mag = std::sqrt(p * p * c * c + mc2 * mc2);
  const double chi_sign = (spin == SpinDir::up) ? 1.0 : -1.0;  // sigma_z chi
  Spinor4 u = Spinor4::Zero();
  const int s = (spin == SpinDir::up) ? 0 : 1;
  FreeSpinor out;
  if (branch == EnergyBranch::positive) {
    out.energy = e_mag;
    u[s] = 1.0;
    u[2 + s] = chi_sign * p * c / (e_mag + mc2);
  } else {
    out.energy = -e_mag;
    u[2 + s] = 1.0;
    u[s] = chi_sign * p * c / (-e_mag - mc2);
  }
  out.u = u / u.norm();
  return out;
}

Eigen::MatrixXcd assemble_dirac_hamiltonian(const EMPotentialField& pot,
                                            double m, double c) {
  check_dirac_grid(pot.grid);
  if (!(m > 0.0) || !(c > 0.0))
    throw std::invalid_argument("dirac: m and c must be > 0");
  if (!pot.a0.allFinite() || !pot.a_par.allFinite())
    throw std::invalid_argument("dirac: potential has non-finite values");

  const UniformGrid& grid = pot.grid;
  const int n = grid.n();
  const double q = pot.charge;
  const double mc2 = m * c * c;
  const Matrix4 az = alpha_z();
  const Matrix4 beta = make_gammas().gamma0;

  const Eigen::VectorXcd a0hat = detail::coupling_transform(grid, pot.a0);
  const Eigen::VectorXcd aphat = detail::coupling_transform(grid, pot.a_par);

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4 * n, 4 * n);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      const int diff = ((a - b) % n + n) % n;
      // q A0 couples through the identity, -q A_par through alpha_z
      Matrix4 block = q * a0hat[diff] * Matrix4::Identity() -
                      q * aphat[diff] * az;
      if (a == b) {
        const double p = grid.axis_momentum(a);
        block += c * p * az + mc2 * beta;
      }
      h.block<4, 4>(4 * a, 4 * b) = block;
    }
  }
  return h;
}

Eigen::VectorXd dirac_spectrum(const EMPotentialField& pot, double m, double c) {
  return eigh_values(assemble_dirac_hamiltonian(pot, m, c));
}

DiracSolution solve_dirac(const EMPotentialField& pot, double m, double c,
                          int count) {
  const UniformGrid& grid = pot.grid;
  if (count < 1 || count > 4 * grid.n())
    throw std::invalid_argument("solve_dirac: count out of range");

  const Eigen::MatrixXcd h = assemble_dirac_hamiltonian(pot, m, c);
  const EigenPairs pairs = eigh_lowest(h, 0);  // both branches

  // bound-electron branch: the +mc^2 cluster sits far above the -mc^2 one,
  // so E > 0 separates them; take the lowest `count` of the positive branch
  // (bound levels below mc^2 come first, then the discretized continuum)
  std::vector<int> order;
  for (int i = 0; i < pairs.values.size(); ++i)
    if (pairs.values[i] > 0.0) order.push_back(i);
  if (static_cast<int>(order.size()) < count)
    throw std::runtime_error(
        "solve_dirac: positive branch has fewer states than requested");
  order.resize(count);

  DiracSolution sol{grid, m, c, Eigen::VectorXd(count), {}};
  for (int i = 0; i < count; ++i) {
    sol.energies[i] = pairs.values[order[i]];
    SpinorField state{grid, spinor_to_position(grid, pairs.vectors.col(order[i])),
                      pairs.values[order[i]]};
    state.values /= state.values.norm();
    Eigen::Index imax = 0;
    state.values.cwiseAbs().maxCoeff(&imax);
    const std::complex<double> v = state.values[imax];
    if (std::abs(v) > 0.0) state.values *= std::conj(v) / std::abs(v);
    sol.states.push_back(std::move(state));
  }
  return sol;
}

ResidualReport theta_residual(const SpinorField& state,
                              const EMPotentialField& pot, double m, double c) {
  check_state(state, pot);
  const UniformGrid& grid = state.grid;
  const int n = grid.n();
  const double q = pot.charge;
  const double e = *state.energy;
  const double mc2 = m * c * c;
  const GammaSet g = make_gammas();

  // p psi, spectrally per component
  Eigen::VectorXcd amps = spinor_to_momentum(grid, state.values);
  for (int k = 0; k < n; ++k) {
    const double p = grid.axis_momentum(k);
    for (int s = 0; s < 4; ++s) amps[4 * k + s] *= p;
  }
  const Eigen::VectorXcd ppsi = spinor_to_position(grid, amps);

  ResidualReport out;
  double theta_sq = 0.0;
  std::complex<double> averaged = 0.0;
  for (int j = 0; j < n; ++j) {
    const Spinor4 psi_j = state.values.segment<4>(4 * j);
    const Spinor4 ppsi_j = ppsi.segment<4>(4 * j);
    const Spinor4 theta_j = g.gamma0 * ((e - q * pot.a0[j]) * psi_j) -
                            g.gamma3 * (c * ppsi_j - q * pot.a_par[j] * psi_j) -
                            mc2 * psi_j;
    theta_sq += theta_j.squaredNorm();
    averaged += (psi_j.adjoint() * g.gamma0 * theta_j).value();
    out.pointwise_max = std::max(out.pointwise_max, theta_j.norm());
  }
  out.pointwise_l2 = std::sqrt(theta_sq) / state.values.norm();
  out.averaged_residual = std::abs(averaged);
  return out;
}

double averaged_linear_relation(const SpinorField& state,
                                const EMPotentialField& pot, double m, double c) {
  check_state(state, pot);
  const UniformGrid& grid = state.grid;
  const int n = grid.n();
  const double q = pot.charge;
  const double e = *state.energy;
  const double mc2 = m * c * c;
  const Matrix4 az = alpha_z();
  const Matrix4 beta = make_gammas().gamma0;

  // LHS: momentum-space sum of psibar [gamma0 E - gamma3 p c - mc^2] psi;
  // sandwiching with gamma0 turns the bracket into E - alpha_z p c - beta mc^2
  const Eigen::VectorXcd amps = spinor_to_momentum(grid, state.values);
  std::complex<double> lhs = 0.0;
  for (int k = 0; k < n; ++k) {
    const Spinor4 a_k = amps.segment<4>(4 * k);
    const double p = grid.axis_momentum(k);
    const Matrix4 md =
        e * Matrix4::Identity() - c * p * az - mc2 * beta;
    lhs += (a_k.adjoint() * md * a_k).value();
  }

  // RHS: position-space integral of psibar [gamma0 q A0 - gamma3 q A_par] psi
  std::complex<double> rhs = 0.0;
  for (int j = 0; j < n; ++j) {
    const Spinor4 psi_j = state.values.segment<4>(4 * j);
    const Matrix4 md = q * pot.a0[j] * Matrix4::Identity() -
                       q * pot.a_par[j] * az;
    rhs += (psi_j.adjoint() * md * psi_j).value();
  }
  return std::abs(lhs - rhs);
}

EnergyBreakdown dirac_energy_breakdown(const SpinorField& state,
                                       const EMPotentialField& pot, double m,
                                       double c) {
  check_state(state, pot);
  const UniformGrid& grid = state.grid;
  const int n = grid.n();
  const double q = pot.charge;
  const double mc2 = m * c * c;
  const Matrix4 az = alpha_z();
  const Matrix4 beta = make_gammas().gamma0;

  const Eigen::VectorXcd amps = spinor_to_momentum(grid, state.values);
  std::complex<double> kin = 0.0;
  for (int k = 0; k < n; ++k) {
    const Spinor4 a_k = amps.segment<4>(4 * k);
    const Matrix4 hfree = c * grid.axis_momentum(k) * az + mc2 * beta;
    kin += (a_k.adjoint() * hfree * a_k).value();
  }
  std::complex<double> potavg = 0.0;
  for (int j = 0; j < n; ++j) {
    const Spinor4 psi_j = state.values.segment<4>(4 * j);
    const Matrix4 hpot =
        q * pot.a0[j] * Matrix4::Identity() - q * pot.a_par[j] * az;
    potavg += (psi_j.adjoint() * hpot * psi_j).value();
  }

  EnergyBreakdown out;
  out.kinetic_avg = kin.real() - mc2;
  out.potential_avg = potavg.real();
  out.total_avg = *state.energy - mc2;
  out.relation_residual =
      std::abs(out.total_avg - out.kinetic_avg - out.potential_avg);
  return out;
}

Eigen::VectorXd spinor_mode_weights(const SpinorField& state) {
  const UniformGrid& grid = state.grid;
  const Eigen::VectorXcd amps = spinor_to_momentum(grid, state.values);
  Eigen::VectorXd w(grid.n());
  for (int k = 0; k < grid.n(); ++k)
    w[k] = amps.segment<4>(4 * k).squaredNorm();
  return w;
}

}  // namespace pwqm

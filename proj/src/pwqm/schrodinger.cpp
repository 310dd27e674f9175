#include "pwqm/schrodinger.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pwqm/linalg.hpp"

namespace pwqm {

namespace {

constexpr std::size_t kMaxDenseSize = 4096;

void fix_phase(WaveFunction& psi) {
  Eigen::Index imax = 0;
  psi.values.cwiseAbs().maxCoeff(&imax);
  const std::complex<double> v = psi.values[imax];
  const double mag = std::abs(v);
  if (mag > 0.0) psi.values *= std::conj(v) / mag;
}

}  // namespace

Eigen::MatrixXcd assemble_hamiltonian(const PotentialField& pot, double mass) {
  const UniformGrid& grid = pot.grid;
  if (!(mass > 0.0)) throw std::invalid_argument("assemble: mass must be > 0");
  if (grid.size() > kMaxDenseSize)
    throw std::invalid_argument("assemble: grid too large for dense assembly (" +
                                std::to_string(grid.size()) + " > 4096 points)");
  if (!pot.values.allFinite())
    throw std::invalid_argument("assemble: potential has non-finite values");
  if (static_cast<std::size_t>(pot.values.size()) != grid.size())
    throw std::invalid_argument("assemble: potential length mismatch");

  const std::size_t size = grid.size();
  const int n = grid.n();
  const Eigen::VectorXcd vhat = detail::coupling_transform(grid, pot.values);

  std::vector<std::array<int, 3>> midx(size);
  for (std::size_t i = 0; i < size; ++i) midx[i] = grid.unflatten(i);

  Eigen::MatrixXcd h(size, size);
  for (std::size_t b = 0; b < size; ++b) {
    for (std::size_t a = 0; a < size; ++a) {
      std::array<int, 3> q{0, 0, 0};
      for (int d = 0; d < grid.dim(); ++d)
        q[d] = ((midx[a][d] - midx[b][d]) % n + n) % n;
      h(a, b) = vhat[grid.flatten(q)];
    }
    h(b, b) += grid.momentum_sq(b) / (2.0 * mass);
  }
  return h;
}

EigenSolution solve_eigen(const PotentialField& pot, double mass, int count) {
  const UniformGrid& grid = pot.grid;
  if (count < 1 || static_cast<std::size_t>(count) > grid.size())
    throw std::invalid_argument("solve_eigen: count out of range");

  const Eigen::MatrixXcd h = assemble_hamiltonian(pot, mass);
  const EigenPairs pairs = eigh_lowest(h, count);
  if (pairs.values.size() < count)
    throw std::runtime_error("solve_eigen: eigensolver returned " +
                             std::to_string(pairs.values.size()) + " of " +
                             std::to_string(count) + " requested states");

  EigenSolution sol{grid, count, pairs.values.head(count), {}, mass};
  sol.states.reserve(count);
  for (int i = 0; i < count; ++i) {
    SpectralAmplitudes a{grid, pairs.vectors.col(i), pairs.values[i]};
    WaveFunction psi = inverse_transform(a);
    psi.values /= psi.values.norm();
    fix_phase(psi);
    sol.states.push_back(std::move(psi));
  }
  return sol;
}

EigenSolution solve_hydrogen_radial(int n_grid, double r_max, int count) {
  if (n_grid < 512 || !is_power_of_two(n_grid))
    throw std::invalid_argument(
        "solve_hydrogen_radial: n_grid must be a power of two >= 512");
  if (!(r_max >= 20.0))
    throw std::invalid_argument("solve_hydrogen_radial: r_max must be >= 20 bohr");
  if (count < 1 || count >= n_grid)
    throw std::invalid_argument("solve_hydrogen_radial: count out of range");

  const int nr = n_grid;
  const double h = r_max / nr;

  // W[m,m'] = <sin_m| V |sin_m'> over interior points reduces to cosine sums:
  // W = (C[|m-m'|] - C[m+m'])/2 with C[q] = (2/N) sum_j V_j cos(pi q j / N).
  Eigen::VectorXd vr(nr - 1);
  for (int j = 1; j < nr; ++j) vr[j - 1] = -1.0 / (j * h);
  Eigen::VectorXd cosum(2 * nr - 1);
  for (int q = 0; q <= 2 * nr - 2; ++q) {
    double s = 0.0;
    for (int j = 1; j < nr; ++j)
      s += vr[j - 1] * std::cos(std::numbers::pi * q * j / nr);
    cosum[q] = 2.0 * s / nr;
  }

  Eigen::MatrixXd hm(nr - 1, nr - 1);
  for (int m2 = 1; m2 < nr; ++m2) {
    for (int m1 = 1; m1 < nr; ++m1)
      hm(m1 - 1, m2 - 1) = 0.5 * (cosum[std::abs(m1 - m2)] - cosum[m1 + m2]);
    const double p = std::numbers::pi * m2 / r_max;
    hm(m2 - 1, m2 - 1) += 0.5 * p * p;
  }

  RealEigenPairs pairs = eigh_lowest(hm, count);
  if (pairs.values.size() < count)
    throw std::runtime_error("solve_hydrogen_radial: eigensolver returned " +
                             std::to_string(pairs.values.size()) + " of " +
                             std::to_string(count) + " states (n_grid=" +
                             std::to_string(n_grid) + ")");

  const UniformGrid grid2 = make_grid(1, 2 * nr, 2.0 * r_max);
  EigenSolution sol{grid2, count, pairs.values.head(count), {}, 1.0};
  for (int s = 0; s < count; ++s) {
    Eigen::VectorXcd vals(grid2.size());
    for (int j = 0; j < 2 * nr; ++j) {
      const double x = grid2.axis_position(j);
      double acc = 0.0;
      for (int m = 1; m < nr; ++m)
        acc += pairs.vectors(m - 1, s) * std::sin(std::numbers::pi * m * x / r_max);
      vals[j] = acc;
    }
    WaveFunction psi{grid2, Representation::Position, vals, pairs.values[s]};
    psi.values /= psi.values.norm();
    double right_sum = 0.0;
    for (int j = nr + 1; j < 2 * nr; ++j) right_sum += psi.values[j].real();
    if (right_sum < 0.0) psi.values = -psi.values;
    sol.states.push_back(std::move(psi));
  }
  return sol;
}

RadialProfile radial_profile(const WaveFunction& odd_state) {
  const UniformGrid& grid = odd_state.grid;
  if (grid.dim() != 1 || grid.n() % 2 != 0)
    throw std::invalid_argument("radial_profile: expected a 1-d doubled grid");
  const int nr = grid.n() / 2;
  const double h = grid.spacing();

  RadialProfile prof;
  prof.h = h;
  prof.r.resize(nr + 1);
  prof.u.resize(nr + 1);
  // psi is odd with discrete norm 1, so the r > 0 half carries weight 1/2
  // and u = sqrt(2/h) psi gives int u^2 dr = 1.
  const double scale = std::sqrt(2.0 / h);
  for (int i = 0; i <= nr; ++i) {
    prof.r[i] = i * h;
    prof.u[i] = (i < nr) ? scale * odd_state.values[nr + i].real() : 0.0;
  }
  return prof;
}

}  // namespace pwqm

#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "pwqm/constants.hpp"
#include "pwqm/dirac.hpp"
#include "pwqm/potential.hpp"
#include "pwqm/schrodinger.hpp"

using namespace pwqm;

namespace {

Eigen::Matrix4cd gamma_mu(const GammaSet& g, int mu) {
  switch (mu) {
    case 0: return g.gamma0;
    case 1: return g.gamma1;
    case 2: return g.gamma2;
    default: return g.gamma3;
  }
}

double metric(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

SpinorField one_hot_spinor_state(const UniformGrid& grid, int mode,
                                 const Spinor4& u, double energy) {
  // plane-wave spinor: u e^{i p x} / sqrt(N), normalized
  Eigen::VectorXcd v(4 * grid.n());
  for (int j = 0; j < grid.n(); ++j) {
    const auto phase =
        std::polar(1.0, grid.axis_momentum(mode) * grid.axis_position(j));
    for (int s = 0; s < 4; ++s) v[4 * j + s] = u[s] * phase;
  }
  v /= v.norm();
  return SpinorField{grid, v, energy};
}

}  // namespace

TEST_SUITE_BEGIN("dirac");

TEST_CASE("gamma algebra is machine exact") {
  const GammaSet g = make_gammas();

  SUBCASE("all ten anticommutators") {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu; nu < 4; ++nu) {
        const Eigen::Matrix4cd anti = gamma_mu(g, mu) * gamma_mu(g, nu) +
                                      gamma_mu(g, nu) * gamma_mu(g, mu);
        const Eigen::Matrix4cd expected =
            2.0 * metric(mu, nu) * Eigen::Matrix4cd::Identity();
        CHECK((anti - expected).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }

  SUBCASE("gamma0 hermitian, spatial gammas anti-hermitian") {
    CHECK((g.gamma0 - g.gamma0.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    for (int i = 1; i < 4; ++i)
      CHECK((gamma_mu(g, i) + gamma_mu(g, i).adjoint()).cwiseAbs().maxCoeff() ==
            0.0);
  }

  SUBCASE("traceless") {
    for (int mu = 0; mu < 4; ++mu)
      CHECK(std::abs(gamma_mu(g, mu).trace()) == 0.0);
  }
}

TEST_CASE("squaring identity") {
  SUBCASE("rest frame on-shell") {
    const double m = 1.0, c = 137.035999084;
    CHECK(squaring_identity_check(Eigen::Vector3d::Zero(), m * c * c, 0.0,
                                  Eigen::Vector3d::Zero(), -1.0, m, c) < 1e-12);
  }

  SUBCASE("random off-shell, zero potentials, unit c") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> ud(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::Vector3d p{ud(rng), ud(rng), ud(rng)};
      const double e = ud(rng);
      CHECK(squaring_identity_check(p, e, 0.0, Eigen::Vector3d::Zero(), -1.0,
                                    1.0, 1.0) < 1e-10);
    }
  }

  SUBCASE("random constant potentials, unit c") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> ud(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::Vector3d p{ud(rng), ud(rng), ud(rng)};
      const Eigen::Vector3d a{ud(rng), ud(rng), ud(rng)};
      CHECK(squaring_identity_check(p, ud(rng), ud(rng), a, -1.0, 1.0, 1.0) <
            1e-10);
    }
  }

  SUBCASE("physical c, relative to the m^2 c^4 scale") {
    std::mt19937 rng(44);
    std::uniform_real_distribution<double> ud(-2.0, 2.0);
    const double c = 137.035999084;
    const double scale = c * c * c * c;
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::Vector3d p{ud(rng), ud(rng), ud(rng)};
      const Eigen::Vector3d a{ud(rng), ud(rng), ud(rng)};
      CHECK(squaring_identity_check(p, c * c + ud(rng), ud(rng), a, -1.0, 1.0,
                                    c) < 1e-10 * scale);
    }
  }
}

TEST_CASE("free spinors") {
  const GammaSet g = make_gammas();

  SUBCASE("rest frame") {
    const double c = 137.035999084;
    const FreeSpinor up =
        free_spinor(0.0, EnergyBranch::positive, SpinDir::up, 1.0, c);
    CHECK(up.energy == doctest::Approx(c * c));
    CHECK(std::abs(up.u[0] - 1.0) == 0.0);
    CHECK(up.u.segment<3>(1).norm() == 0.0);

    const FreeSpinor neg =
        free_spinor(0.0, EnergyBranch::negative, SpinDir::up, 1.0, c);
    CHECK(neg.energy == doctest::Approx(-c * c));
    CHECK(std::abs(neg.u[2] - 1.0) == 0.0);   // lower block
    CHECK(std::abs(neg.u[0]) == 0.0);
  }

  SUBCASE("p = m c gives E = sqrt(2) m c^2 and annihilates the linear form") {
    const double m = 1.0, c = 1.0;
    const FreeSpinor fs =
        free_spinor(m * c, EnergyBranch::positive, SpinDir::up, m, c);
    CHECK(fs.energy == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    const Eigen::Matrix4cd form = g.gamma0 * fs.energy - g.gamma3 * m * c * c -
                                  m * c * c * Eigen::Matrix4cd::Identity();
    CHECK((form * fs.u).norm() < 1e-12);
  }

  SUBCASE("normalized and on-shell for both branches and spins") {
    const double m = 1.0, c = 137.035999084;
    for (const auto branch : {EnergyBranch::positive, EnergyBranch::negative}) {
      for (const auto spin : {SpinDir::up, SpinDir::down}) {
        for (const double p : {0.0, 0.3, 5.0, -2.4}) {
          const FreeSpinor fs = free_spinor(p, branch, spin, m, c);
          CHECK(fs.u.norm() == doctest::Approx(1.0).epsilon(1e-14));
          const Eigen::Matrix4cd form =
              g.gamma0 * fs.energy - g.gamma3 * (p * c) -
              m * c * c * Eigen::Matrix4cd::Identity();
          CHECK((form * fs.u).norm() < 1e-12 * std::abs(fs.energy));
        }
      }
    }
  }
}

TEST_CASE("free hamiltonian blocks carry the dispersion, twice per branch") {
  const double m = 1.0, c = 137.035999084;
  const UniformGrid grid = make_grid(1, 16, 10.0);
  const EMPotentialField pot = make_em_potential(grid, "dirac-free");
  const Eigen::MatrixXcd h = assemble_dirac_hamiltonian(pot, m, c);

  for (int k = 0; k < 16; ++k) {
    const Eigen::Matrix4cd block = h.block<4, 4>(4 * k, 4 * k);
    // independent oracle: Eigen's direct 4x4 hermitian eigensolve
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(block);
    const double p = grid.axis_momentum(k);
    const double e = std::sqrt(p * p * c * c + m * m * c * c * c * c);
    CHECK(es.eigenvalues()[0] == doctest::Approx(-e).epsilon(1e-14));
    CHECK(es.eigenvalues()[1] == doctest::Approx(-e).epsilon(1e-14));
    CHECK(es.eigenvalues()[2] == doctest::Approx(e).epsilon(1e-14));
    CHECK(es.eigenvalues()[3] == doctest::Approx(e).epsilon(1e-14));
  }
}

TEST_CASE("constant A0 shifts every eigenvalue by q v") {
  const double m = 1.0, c = 20.0, v = 0.7, q = -1.0;
  const UniformGrid grid = make_grid(1, 8, 5.0);
  const EMPotentialField free_pot = make_em_potential(grid, "dirac-free");
  EMPotentialField shifted = free_pot;
  shifted.a0.setConstant(v);
  shifted.charge = q;

  const Eigen::VectorXd e0 = dirac_spectrum(free_pot, m, c);
  const Eigen::VectorXd e1 = dirac_spectrum(shifted, m, c);
  for (Eigen::Index i = 0; i < e0.size(); ++i)
    CHECK(e1[i] == doctest::Approx(e0[i] + q * v).epsilon(1e-12));
}

TEST_CASE("constant A_par shifts the momentum per block") {
  const double m = 1.0, c = 25.0, a = 3.1, q = -1.0;
  const UniformGrid grid = make_grid(1, 8, 5.0);
  const EMPotentialField pot =
      make_em_potential(grid, "dirac-constant-A", {{"a", a}}, q);
  const Eigen::MatrixXcd h = assemble_dirac_hamiltonian(pot, m, c);

  for (int k = 0; k < 8; ++k) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(
        Eigen::Matrix4cd(h.block<4, 4>(4 * k, 4 * k)));
    const double pk = grid.axis_momentum(k) - q * a / c;
    const double e = std::sqrt(pk * pk * c * c + m * m * c * c * c * c);
    CHECK(es.eigenvalues()[0] == doctest::Approx(-e).epsilon(1e-13));
    CHECK(es.eigenvalues()[3] == doctest::Approx(e).epsilon(1e-13));
  }
}

TEST_CASE("free solve matches the dispersion across the lattice") {
  const double m = 1.0, c = 137.035999084;
  const UniformGrid grid = make_grid(1, 64, 20.0);
  const EMPotentialField pot = make_em_potential(grid, "dirac-free");
  const Eigen::VectorXd spectrum = dirac_spectrum(pot, m, c);

  std::vector<double> exact;
  for (int k = 0; k < 64; ++k) {
    const double p = grid.axis_momentum(k);
    const double e = std::sqrt(p * p * c * c + m * m * c * c * c * c);
    exact.insert(exact.end(), {e, e, -e, -e});
  }
  std::sort(exact.begin(), exact.end());
  for (Eigen::Index i = 0; i < spectrum.size(); ++i)
    CHECK(std::abs(spectrum[i] - exact[i]) / std::abs(exact[i]) < 1e-10);

  SUBCASE("spectrum is symmetric under E -> -E") {
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
      const double mirror = -spectrum[spectrum.size() - 1 - i];
      CHECK(std::abs(spectrum[i] - mirror) / std::abs(spectrum[i]) < 1e-10);
    }
  }
}

TEST_CASE("free solve: lowest positive-branch states are p = 0 and 2pi/L") {
  const double m = 1.0, c = 137.035999084;
  const UniformGrid grid = make_grid(1, 32, 20.0);
  const EMPotentialField pot = make_em_potential(grid, "dirac-free");
  const DiracSolution sol = solve_dirac(pot, m, c, 4);
  const double mc2 = m * c * c;
  const double p1 = grid.momentum_step();
  const double e1 = std::sqrt(p1 * p1 * c * c + mc2 * mc2);
  CHECK(sol.energies[0] == doctest::Approx(mc2).epsilon(1e-12));
  CHECK(sol.energies[1] == doctest::Approx(mc2).epsilon(1e-12));
  CHECK(sol.energies[2] == doctest::Approx(e1).epsilon(1e-12));
  CHECK(sol.energies[3] == doctest::Approx(e1).epsilon(1e-12));
}

TEST_CASE("shallow well binds and matches the schrodinger limit") {
  const double m = 1.0, c = speed_of_light;
  const UniformGrid grid = make_grid(1, 256, 20.0);
  const EMPotentialField pot =
      make_em_potential(grid, "dirac-well", {{"depth", 0.5}, {"width", 2.0}}, -1.0);
  const DiracSolution sol = solve_dirac(pot, m, c, 1);
  const double mc2 = m * c * c;
  const double binding = mc2 - sol.energies[0];
  CHECK(binding > 0.0);
  CHECK(binding < 0.5);

  // same sampled potential through the schrodinger solver
  PotentialField vs{grid, -1.0 * pot.a0, "well"};
  const EigenSolution nr = solve_eigen(vs, m, 1);
  CHECK(std::abs(binding - (-nr.energies[0])) / binding < 1e-4);
}

TEST_CASE("theta residual") {
  const double m = 1.0, c = 137.035999084;
  const double mc2 = m * c * c;
  const UniformGrid grid = make_grid(1, 32, 12.0);
  const EMPotentialField pot = make_em_potential(grid, "dirac-free");

  SUBCASE("exact free plane-wave spinor state") {
    const int mode = 16 + 5;
    const double p = grid.axis_momentum(mode);
    const FreeSpinor fs = free_spinor(p, EnergyBranch::positive, SpinDir::down, m, c);
    const SpinorField state = one_hot_spinor_state(grid, mode, fs.u, fs.energy);
    const ResidualReport rr = theta_residual(state, pot, m, c);
    CHECK(rr.pointwise_max < 1e-12 * mc2);
  }

  SUBCASE("converged bound eigenstates pass the 1e-8 mc^2 gate") {
    const EMPotentialField well = make_em_potential(
        grid, "dirac-well", {{"depth", 0.5}, {"width", 2.0}}, -1.0);
    const DiracSolution sol = solve_dirac(well, m, c, 2);
    for (const auto& st : sol.states) {
      const ResidualReport rr = theta_residual(st, well, m, c);
      CHECK(rr.pointwise_l2 < 1e-8 * mc2);
    }
  }

  SUBCASE("wrong tag shifts the averaged residual by exactly delta") {
    const DiracSolution sol = solve_dirac(pot, m, c, 1);
    SpinorField off = sol.states[0];
    const double delta = 0.37;
    off.energy = *off.energy + delta;
    const ResidualReport rr = theta_residual(off, pot, m, c);
    // int psibar gamma0 Theta picks up delta * int psi^dagger psi = delta
    CHECK(rr.averaged_residual == doctest::Approx(delta).epsilon(1e-10));
  }

  SUBCASE("missing tag rejected") {
    const DiracSolution sol = solve_dirac(pot, m, c, 1);
    SpinorField untagged = sol.states[0];
    untagged.energy.reset();
    CHECK_THROWS_AS(theta_residual(untagged, pot, m, c), std::invalid_argument);
  }
}

TEST_CASE("averaged linear relation") {
  const double m = 1.0, c = 137.035999084;
  const double mc2 = m * c * c;
  const UniformGrid grid = make_grid(1, 32, 12.0);
  const EMPotentialField free_pot = make_em_potential(grid, "dirac-free");

  SUBCASE("free eigenstate with zero potentials: both sides vanish") {
    const int mode = 16 + 2;
    const double p = grid.axis_momentum(mode);
    const FreeSpinor fs = free_spinor(p, EnergyBranch::positive, SpinDir::up, m, c);
    const SpinorField state = one_hot_spinor_state(grid, mode, fs.u, fs.energy);
    CHECK(averaged_linear_relation(state, free_pot, m, c) < 1e-12 * mc2);
  }

  SUBCASE("converged bound states pass the 1e-8 mc^2 gate") {
    const EMPotentialField well = make_em_potential(
        grid, "dirac-well", {{"depth", 0.5}, {"width", 2.0}}, -1.0);
    const DiracSolution sol = solve_dirac(well, m, c, 2);
    for (const auto& st : sol.states)
      CHECK(averaged_linear_relation(st, well, m, c) < 1e-8 * mc2);
  }

  SUBCASE("two-state mix tagged with the mean: averaged small, theta large") {
    const EMPotentialField well = make_em_potential(
        grid, "dirac-well", {{"depth", 0.5}, {"width", 2.0}}, -1.0);
    const DiracSolution sol = solve_dirac(well, m, c, 2);
    SpinorField mix = sol.states[0];
    mix.values = sol.states[0].values + sol.states[1].values;
    mix.values /= mix.values.norm();
    mix.energy = 0.5 * (sol.energies[0] + sol.energies[1]);
    CHECK(averaged_linear_relation(mix, well, m, c) < 1e-10 * mc2);
    const ResidualReport rr = theta_residual(mix, well, m, c);
    CHECK(rr.pointwise_l2 > 0.1 * (sol.energies[1] - sol.energies[0]));
  }
}

TEST_CASE("dirac energy breakdown closes for eigenstates") {
  const double m = 1.0, c = speed_of_light;
  const UniformGrid grid = make_grid(1, 64, 20.0);
  const EMPotentialField well = make_em_potential(
      grid, "dirac-well", {{"depth", 0.5}, {"width", 2.0}}, -1.0);
  const DiracSolution sol = solve_dirac(well, m, c, 2);
  for (const auto& st : sol.states) {
    const EnergyBreakdown eb = dirac_energy_breakdown(st, well, m, c);
    CHECK(eb.relation_residual < 1e-8 * std::max(1.0, std::abs(eb.total_avg)));
  }
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(make_em_potential(make_grid(3, 8, 5.0), "dirac-free"),
                  std::invalid_argument);
  const UniformGrid grid = make_grid(1, 8, 5.0);
  CHECK_THROWS_AS(make_em_potential(grid, "no-such-preset"),
                  std::invalid_argument);
  const EMPotentialField pot = make_em_potential(grid, "dirac-free");
  CHECK_THROWS_AS(assemble_dirac_hamiltonian(pot, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_dirac(pot, 1.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(solve_dirac(pot, 1.0, 1.0, 33), std::invalid_argument);

  DiracSolution sol = solve_dirac(pot, 1.0, 10.0, 1);
  SpinorField bad = sol.states[0];
  bad.values *= 2.0;
  CHECK_THROWS_AS(theta_residual(bad, pot, 1.0, 10.0), std::invalid_argument);
}

TEST_SUITE_END();

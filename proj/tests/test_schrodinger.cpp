#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pwqm/schrodinger.hpp"
#include "pwqm/verify.hpp"

using namespace pwqm;
using std::numbers::pi;

TEST_SUITE_BEGIN("schrodinger");

TEST_CASE("free hamiltonian is diagonal p^2/2m") {
  const UniformGrid g = make_grid(1, 32, 10.0);
  const Eigen::MatrixXcd h =
      assemble_hamiltonian(make_potential(g, "free"), 2.0);
  for (int a = 0; a < 32; ++a) {
    for (int b = 0; b < 32; ++b) {
      const double expected =
          (a == b) ? g.momentum_sq(a) / 4.0 : 0.0;  // mass 2
      CHECK(std::abs(h(a, b) - expected) < 1e-12);
    }
  }
}

TEST_CASE("constant potential shifts the free hamiltonian") {
  const UniformGrid g = make_grid(1, 16, 6.0);
  const Eigen::MatrixXcd h0 = assemble_hamiltonian(make_potential(g, "free"), 1.0);
  const Eigen::MatrixXcd hc = assemble_hamiltonian(
      make_potential(g, "constant", {{"value", 3.25}}), 1.0);
  const Eigen::MatrixXcd diff =
      hc - h0 - 3.25 * Eigen::MatrixXcd::Identity(16, 16);
  CHECK(diff.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("harmonic assembly matches the operator-application oracle") {
  // column k' of H is the brute-force transform of H applied to the k'-th
  // plane wave, with the kinetic part applied in momentum space and the
  // potential pointwise
  const UniformGrid g = make_grid(1, 64, 20.0);
  const PotentialField pot = make_potential(g, "harmonic", {{"omega", 1.0}});
  const Eigen::MatrixXcd h = assemble_hamiltonian(pot, 1.0);

  for (int col : {0, 1, 17, 32, 63}) {
    Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(64);
    unit[col] = 1.0;
    const Eigen::VectorXcd psi = oracles::brute_inverse(g, unit);
    Eigen::VectorXcd hpsi(64);
    for (int j = 0; j < 64; ++j) hpsi[j] = pot.values[j] * psi[j];
    Eigen::VectorXcd kin = unit;
    for (int m = 0; m < 64; ++m) kin[m] *= g.momentum_sq(m) / 2.0;
    hpsi += oracles::brute_inverse(g, kin);
    const Eigen::VectorXcd column = oracles::brute_forward(g, hpsi);
    CHECK((h.col(col) - column).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("hermiticity for assorted potentials") {
  const UniformGrid g = make_grid(1, 64, 15.0);
  for (const char* name : {"free", "harmonic", "soft-coulomb"}) {
    const Eigen::MatrixXcd h = assemble_hamiltonian(make_potential(g, name), 1.0);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
  const UniformGrid gb = make_grid(1, 64, 2.0);
  const Eigen::MatrixXcd hb = assemble_hamiltonian(
      make_potential(gb, "box", {{"width", 1.0}, {"height", 1e5}}), 1.0);
  CHECK((hb - hb.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

  // random potential, 3-d grid
  const UniformGrid g3 = make_grid(3, 8, 5.0);
  PotentialField rnd{g3, Eigen::VectorXd(g3.size()), "random"};
  std::mt19937 rng(17);
  std::normal_distribution<double> nd;
  for (std::size_t i = 0; i < g3.size(); ++i) rnd.values[i] = nd(rng);
  const Eigen::MatrixXcd h3 = assemble_hamiltonian(rnd, 1.0);
  CHECK((h3 - h3.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("assembly guards") {
  const UniformGrid big = make_grid(3, 32, 10.0);  // 32768 points
  CHECK_THROWS_AS(
      assemble_hamiltonian(
          PotentialField{big, Eigen::VectorXd::Zero(big.size()), ""}, 1.0),
      std::invalid_argument);

  const UniformGrid g = make_grid(1, 16, 4.0);
  PotentialField bad{g, Eigen::VectorXd::Zero(16), "bad"};
  bad.values[3] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(assemble_hamiltonian(bad, 1.0), std::invalid_argument);
  const PotentialField ok = make_potential(g, "free");
  CHECK_THROWS_AS(assemble_hamiltonian(ok, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(assemble_hamiltonian(ok, -1.0), std::invalid_argument);
}

TEST_CASE("harmonic oscillator spectrum to 1e-8") {
  const UniformGrid g = make_grid(1, 128, 20.0);
  const EigenSolution sol =
      solve_eigen(make_potential(g, "harmonic", {{"omega", 1.0}}), 1.0, 10);
  for (int n = 0; n < 10; ++n) {
    const double exact = n + 0.5;
    CHECK(std::abs(sol.energies[n] - exact) / exact < 1e-8);
  }
}

TEST_CASE("wall-emulated box spectrum within 0.5 percent") {
  const UniformGrid g = make_grid(1, 512, 2.0);
  const PotentialField pot =
      make_potential(g, "box", {{"width", 1.0}, {"height", 1e5}});
  const EigenSolution sol = solve_eigen(pot, 1.0, 5);
  for (int n = 1; n <= 5; ++n) {
    const double exact = n * n * pi * pi / 2.0;
    CHECK(std::abs(sol.energies[n - 1] - exact) / exact < 5e-3);
  }
}

TEST_CASE("raw transform of a wall-truncated box state carries half the weight") {
  // the truncated state is zero on the wall half of the cell, which spreads
  // the other half of its spectral weight (mostly into p = 0 for n = 1);
  // the two-wave structure lives in the odd-periodic embedding, tested in
  // the momentum suite
  const UniformGrid g = make_grid(1, 512, 2.0);
  const PotentialField pot =
      make_potential(g, "box", {{"width", 1.0}, {"height", 1e5}});
  const EigenSolution sol = solve_eigen(pot, 1.0, 1);
  const SpectralAmplitudes a = forward_transform(sol.states[0]);
  const double wp = std::norm(a.values[256 + 1]);
  const double wm = std::norm(a.values[256 - 1]);
  CHECK(wp + wm == doctest::Approx(0.5).epsilon(2e-2));
  CHECK(std::sqrt(wp / wm) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("orthonormality of returned states") {
  const UniformGrid g = make_grid(1, 64, 14.0);
  const EigenSolution sol =
      solve_eigen(make_potential(g, "soft-coulomb", {{"eps", 1.0}}), 1.0, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const auto gram = inner_product(sol.states[i], sol.states[j]);
      CHECK(std::abs(gram - (i == j ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("variational: non-negative potential never lowers the ground state") {
  const UniformGrid g = make_grid(1, 64, 12.0);
  const double free0 = solve_eigen(make_potential(g, "free"), 1.0, 1).energies[0];
  for (const auto& pot :
       {make_potential(g, "harmonic", {{"omega", 0.7}}),
        make_potential(g, "constant", {{"value", 0.3}}),
        make_potential(g, "box", {{"width", 6.0}, {"height", 50.0}})}) {
    CHECK(solve_eigen(pot, 1.0, 1).energies[0] >= free0 - 1e-12);
  }
}

TEST_CASE("free spectrum matches the momentum lattice (degenerate pairs)") {
  const UniformGrid g = make_grid(1, 16, 7.0);
  const EigenSolution sol = solve_eigen(make_potential(g, "free"), 1.0, 16);
  std::vector<double> exact;
  for (int m = 0; m < 16; ++m) exact.push_back(g.momentum_sq(m) / 2.0);
  std::sort(exact.begin(), exact.end());
  for (int i = 0; i < 16; ++i)
    CHECK(sol.energies[i] == doctest::Approx(exact[i]).epsilon(1e-12));
}

TEST_CASE("phase convention: largest component real positive") {
  const UniformGrid g = make_grid(1, 64, 18.0);
  const EigenSolution sol =
      solve_eigen(make_potential(g, "harmonic", {{"omega", 1.0}}), 1.0, 4);
  for (const auto& psi : sol.states) {
    Eigen::Index imax = 0;
    psi.values.cwiseAbs().maxCoeff(&imax);
    CHECK(psi.values[imax].real() > 0.0);
    CHECK(std::abs(psi.values[imax].imag()) < 1e-12);
  }
}

TEST_CASE("solve_eigen argument guards") {
  const UniformGrid g = make_grid(1, 16, 4.0);
  const PotentialField pot = make_potential(g, "free");
  CHECK_THROWS_AS(solve_eigen(pot, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(solve_eigen(pot, 1.0, 17), std::invalid_argument);
}

TEST_CASE("hydrogen radial ground state") {
  const EigenSolution sol = solve_hydrogen_radial(2048, 40.0, 2);

  SUBCASE("energies: -0.5 within 1 percent, -0.125 within 1 percent") {
    CHECK(std::abs(sol.energies[0] + 0.5) < 0.005);
    CHECK(std::abs(sol.energies[1] + 0.125) / 0.125 < 0.01);
  }

  SUBCASE("radial profile overlaps the analytic 2 r e^{-r} above 0.9999") {
    const RadialProfile prof = radial_profile(sol.states[0]);
    double dot = 0.0, nn = 0.0, na = 0.0;
    for (Eigen::Index i = 0; i < prof.r.size(); ++i) {
      const double ua = 2.0 * prof.r[i] * std::exp(-prof.r[i]);
      dot += prof.u[i] * ua;
      nn += prof.u[i] * prof.u[i];
      na += ua * ua;
    }
    CHECK(dot / std::sqrt(nn * na) > 0.9999);
  }

  SUBCASE("profile is normalized: int u^2 dr = 1") {
    const RadialProfile prof = radial_profile(sol.states[0]);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < prof.u.size(); ++i)
      acc += prof.u[i] * prof.u[i] * prof.h;
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-6));
  }

  SUBCASE("odd-extended states are exact discrete eigenpairs") {
    const PotentialField pot = make_potential(sol.grid, "coulomb-radial");
    for (const auto& psi : sol.states) {
      const ResidualReport rr = pointwise_residual(psi, pot, 1.0);
      CHECK(rr.pointwise_l2 < 1e-10);
    }
  }
}

TEST_CASE("hydrogen radial argument guards") {
  CHECK_THROWS_AS(solve_hydrogen_radial(100, 40.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_hydrogen_radial(256, 40.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_hydrogen_radial(1024, 10.0), std::invalid_argument);
}

TEST_CASE("3-d free solve matches the momentum lattice") {
  const UniformGrid g = make_grid(3, 8, 5.0);
  const EigenSolution sol = solve_eigen(make_potential(g, "free"), 1.0, 8);
  std::vector<double> exact;
  for (std::size_t i = 0; i < g.size(); ++i)
    exact.push_back(g.momentum_sq(i) / 2.0);
  std::sort(exact.begin(), exact.end());
  for (int i = 0; i < 8; ++i)
    CHECK(std::abs(sol.energies[i] - exact[i]) < 1e-12);

  // eigenstates of the free hamiltonian satisfy the pointwise condition
  const PotentialField pot = make_potential(g, "free");
  for (const auto& psi : sol.states)
    CHECK(pointwise_residual(psi, pot, 1.0).pointwise_l2 < 1e-12);
}

TEST_CASE("3-d harmonic ground state is isotropic and bounded below 3/2") {
  // coarse grid smoke test of the 3-d assembly path; the 1-d suite pins
  // the spectral accuracy
  const UniformGrid g = make_grid(3, 8, 10.0);
  const EigenSolution sol =
      solve_eigen(make_potential(g, "harmonic", {{"omega", 1.0}}), 1.0, 1);
  CHECK(sol.energies[0] == doctest::Approx(1.5).epsilon(0.05));
  const EnergyBreakdown eb = energy_breakdown(
      sol.states[0], make_potential(g, "harmonic", {{"omega", 1.0}}), 1.0);
  CHECK(eb.relation_residual < residual_tolerance(sol.energies[0]));
}

TEST_SUITE_END();

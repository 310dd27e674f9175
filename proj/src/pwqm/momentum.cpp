#include "pwqm/momentum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pwqm/basis.hpp"

namespace pwqm {

namespace {

double simpson(const Eigen::VectorXd& y, double h) {
  const Eigen::Index n = y.size() - 1;
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("simpson: need an even number of intervals");
  double s = y[0] + y[n];
  for (Eigen::Index i = 1; i < n; i += 2) s += 4.0 * y[i];
  for (Eigen::Index i = 2; i < n; i += 2) s += 2.0 * y[i];
  return s * h / 3.0;
}

MomentumDistribution distribution_from_radial(const Eigen::VectorXd& r,
                                              const Eigen::VectorXd& u) {
  MomentumDistribution dist;
  dist.momenta.resize(kMomentumSamples);
  dist.amplitude.resize(kMomentumSamples);
  dist.density.resize(kMomentumSamples);
  const double lmin = std::log(kMomentumMin), lmax = std::log(kMomentumMax);
  for (int i = 0; i < kMomentumSamples; ++i) {
    const double p =
        std::exp(lmin + (lmax - lmin) * i / (kMomentumSamples - 1));
    const double a = spherical_amplitude(r, u, p);
    dist.momenta[i] = p;
    dist.amplitude[i] = a;
    dist.density[i] = 4.0 * std::numbers::pi * p * p * a * a;
  }

  // normalization on a fine uniform auxiliary p grid; the tail beyond
  // p = 20 of the 1s distribution is ~6e-7, below the 1e-4 tolerance
  const int nq = 2048;
  const double hp = kMomentumMax / nq;
  Eigen::VectorXd dens(nq + 1);
  for (int i = 0; i <= nq; ++i) {
    const double p = i * hp;
    const double a = (i == 0) ? 0.0 : spherical_amplitude(r, u, p);
    dens[i] = 4.0 * std::numbers::pi * p * p * a * a;
  }
  dist.normalization_check = simpson(dens, hp);
  return dist;
}

}  // namespace

SpectralAmplitudes extract_amplitudes(const WaveFunction& state) {
  if (std::abs(norm(state) - 1.0) > 1e-8)
    throw std::invalid_argument("extract_amplitudes: state is not normalized");
  return forward_transform(state);
}

double hydrogen_a0_closed_form(double p, double r0) {
  if (p < 0.0) throw std::invalid_argument("hydrogen_a0: p must be >= 0");
  if (!(r0 > 0.0)) throw std::invalid_argument("hydrogen_a0: r0 must be > 0");
  const double bracket = 1.0 + r0 * r0 * p * p;
  return std::pow(2.0 * r0, 1.5) / std::numbers::pi / (bracket * bracket);
}

double spherical_amplitude(const Eigen::VectorXd& r, const Eigen::VectorXd& u,
                           double p) {
  if (r.size() != u.size() || r.size() < 3)
    throw std::invalid_argument("spherical_amplitude: bad radial samples");
  if (!(p > 0.0))
    throw std::invalid_argument("spherical_amplitude: p must be > 0");
  const double h = r[1] - r[0];
  Eigen::VectorXd integrand(r.size());
  for (Eigen::Index i = 0; i < r.size(); ++i)
    integrand[i] = u[i] * std::sin(p * r[i]);
  return simpson(integrand, h) / (std::numbers::pi * std::numbers::sqrt2 * p);
}

MomentumDistribution hydrogen_momentum_distribution(const WaveFunction& psi0) {
  if (!psi0.energy.has_value() || std::abs(*psi0.energy + 0.5) > 0.05)
    throw std::invalid_argument(
        "hydrogen_momentum_distribution: state is not the hydrogen ground "
        "state (energy far from -0.5 hartree)");
  const RadialProfile prof = radial_profile(psi0);
  return distribution_from_radial(prof.r, prof.u);
}

MomentumDistribution hydrogen_momentum_distribution_analytic() {
  const int n = 32768;
  const double rmax = 60.0;
  const double h = rmax / n;
  Eigen::VectorXd r(n + 1), u(n + 1);
  for (int i = 0; i <= n; ++i) {
    r[i] = i * h;
    u[i] = 2.0 * r[i] * std::exp(-r[i]);
  }
  return distribution_from_radial(r, u);
}

WaveFunction odd_periodic_embedding(const WaveFunction& state, double box_width) {
  const UniformGrid& grid = state.grid;
  if (grid.dim() != 1)
    throw std::invalid_argument("odd_periodic_embedding: 1-d states only");
  if (std::abs(grid.extent() - 2.0 * box_width) > 1e-12 * grid.extent())
    throw std::invalid_argument(
        "odd_periodic_embedding: cell extent must equal twice the box width");

  const int n = grid.n();
  WaveFunction out = state;
  for (int j = 0; j < n; ++j) {
    const double x = grid.axis_position(j);
    if (std::abs(x) > 0.5 * box_width) {
      // mirror about the box edge x = width/2 (periodically wrapped)
      const int jm = ((3 * n / 2 - j) % n + n) % n;
      out.values[j] = -state.values[jm];
    }
  }
  out.values /= out.values.norm();
  return out;
}

}  // namespace pwqm

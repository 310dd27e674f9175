#ifndef PWQM_MOMENTUM_HPP
#define PWQM_MOMENTUM_HPP

#include <Eigen/Core>

#include "pwqm/schrodinger.hpp"
#include "pwqm/state.hpp"

namespace pwqm {

/// Momentum distribution of one state. For spherically symmetric 3-d states
/// density = 4 pi p^2 a0(p)^2 on the sampled |p| values; for 1-d states it
/// is the plain |a(p_k)|^2 on the lattice. normalization_check integrates
/// the density and should be 1 for converged states.
struct MomentumDistribution {
  Eigen::VectorXd momenta;
  Eigen::VectorXd amplitude;
  Eigen::VectorXd density;
  double normalization_check = 0.0;
};

/// Plane-wave amplitudes of a normalized position-space state (the inverse
/// of the superposition that builds the state).
SpectralAmplitudes extract_amplitudes(const WaveFunction& state);

/// Hydrogen 1s momentum amplitude, exactly as printed:
///   a0(p) = (1/pi) (2 r0)^{3/2} [1 + r0^2 p^2]^{-2}   (hbar = 1)
double hydrogen_a0_closed_form(double p, double r0);

/// a0(p) of a radial s state via the spherical transform
///   a0(p) = (pi sqrt(2) p)^{-1} int_0^rmax u(r) sin(p r) dr
/// evaluated by composite Simpson quadrature on the radial samples.
double spherical_amplitude(const Eigen::VectorXd& r, const Eigen::VectorXd& u,
                           double p);

/// Momentum distribution of the solved hydrogen ground state on 400
/// log-spaced |p| points in [0.01, 20]. Rejects states whose energy is far
/// from the ground level.
MomentumDistribution hydrogen_momentum_distribution(const WaveFunction& psi0);

/// Same pipeline fed with the analytic ground state u = 2 r e^{-r} on a
/// fine dedicated radial grid; isolates the transform accuracy from the
/// eigensolver's.
MomentumDistribution hydrogen_momentum_distribution_analytic();

/// Number of log-spaced sample points and their range.
inline constexpr int kMomentumSamples = 400;
inline constexpr double kMomentumMin = 0.01;
inline constexpr double kMomentumMax = 20.0;

/// A Dirichlet box eigenstate, placed in a periodic cell of twice the box
/// width, corresponds to a smooth periodic state through the sine-series
/// (odd-periodic) embedding: mirror-negate the state about the box edge.
/// The embedded state's amplitudes carry the box state's plane-wave
/// content, concentrated in the two modes at -+ n pi / width. Requires
/// extent == 2 * box_width.
WaveFunction odd_periodic_embedding(const WaveFunction& state, double box_width);

}  // namespace pwqm

#endif

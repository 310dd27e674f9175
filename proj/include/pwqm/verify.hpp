#ifndef PWQM_VERIFY_HPP
#define PWQM_VERIFY_HPP

#include "pwqm/potential.hpp"
#include "pwqm/state.hpp"

namespace pwqm {

/// Averaged energies of a stationary state: kinetic from the plane-wave
/// amplitudes, potential from the position-space integral, total from the
/// energy tag. relation_residual = |total - kinetic - potential| measures
/// the averaged energy relation.
struct EnergyBreakdown {
  double kinetic_avg = 0.0;
  double potential_avg = 0.0;
  double total_avg = 0.0;
  double relation_residual = 0.0;
};

/// Pointwise residual Phi(r) = E psi - T psi - V psi with the kinetic
/// operator applied spectrally.
///   pointwise_max:     max_j |Phi_j|
///   pointwise_l2:      ||Phi|| / ||psi||
///   averaged_residual: |<psi, Phi>|, the space-averaged form
struct ResidualReport {
  double pointwise_max = 0.0;
  double pointwise_l2 = 0.0;
  double averaged_residual = 0.0;
};

EnergyBreakdown energy_breakdown(const WaveFunction& state,
                                 const PotentialField& pot, double mass);

ResidualReport pointwise_residual(const WaveFunction& state,
                                  const PotentialField& pot, double mass);

/// Both views of the same state: the averaged residual can vanish for
/// states whose pointwise residual is large (any mix of eigenstates tagged
/// with the mean energy), which is why the pointwise condition is the
/// equation of motion. Returns the same report as pointwise_residual.
ResidualReport averaged_vs_pointwise(const WaveFunction& state,
                                     const PotentialField& pot, double mass);

/// Acceptance tolerance 1e-8 * max(1, |E|), uniform across deep and
/// weakly-bound states.
double residual_tolerance(double energy);

}  // namespace pwqm

#endif

#include "pwqm/verify.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "pwqm/basis.hpp"

namespace pwqm {

namespace {

void check_inputs(const WaveFunction& state, const PotentialField& pot,
                  double mass) {
  if (!(state.grid == pot.grid))
    throw std::invalid_argument("verify: state and potential grids differ");
  if (state.rep != Representation::Position)
    throw std::invalid_argument("verify: state must be in position representation");
  if (!state.energy.has_value() || !std::isfinite(*state.energy))
    throw std::invalid_argument("verify: state has no finite energy tag");
  if (!(mass > 0.0)) throw std::invalid_argument("verify: mass must be > 0");
  if (!state.values.allFinite())
    throw std::invalid_argument("verify: state has non-finite values");
  if (std::abs(norm(state) - 1.0) > 1e-8)
    throw std::invalid_argument("verify: state is not normalized");
}

void warn_unpaired(const SpectralAmplitudes& a) {
  const double w = unpaired_mode_weight(a);
  if (w > 1e-8)
    std::cerr << "warning: " << w
              << " of the spectral weight sits in the unpaired k=-N/2 mode\n";
}

}  // namespace

EnergyBreakdown energy_breakdown(const WaveFunction& state,
                                 const PotentialField& pot, double mass) {
  check_inputs(state, pot, mass);
  const SpectralAmplitudes a = forward_transform(state);
  warn_unpaired(a);

  EnergyBreakdown out;
  for (std::size_t i = 0; i < a.grid.size(); ++i)
    out.kinetic_avg += std::norm(a.values[i]) * a.grid.momentum_sq(i) / (2.0 * mass);
  for (std::size_t i = 0; i < state.grid.size(); ++i)
    out.potential_avg += pot.values[i] * std::norm(state.values[i]);
  out.total_avg = *state.energy;
  out.relation_residual =
      std::abs(out.total_avg - out.kinetic_avg - out.potential_avg);
  return out;
}

ResidualReport pointwise_residual(const WaveFunction& state,
                                  const PotentialField& pot, double mass) {
  check_inputs(state, pot, mass);
  SpectralAmplitudes a = forward_transform(state);
  warn_unpaired(a);
  for (std::size_t i = 0; i < a.grid.size(); ++i)
    a.values[i] *= a.grid.momentum_sq(i) / (2.0 * mass);
  const WaveFunction kinetic = inverse_transform(a);

  const double e = *state.energy;
  Eigen::VectorXcd phi(state.values.size());
  for (Eigen::Index i = 0; i < phi.size(); ++i)
    phi[i] = e * state.values[i] - kinetic.values[i] -
             pot.values[i] * state.values[i];

  ResidualReport out;
  out.pointwise_max = phi.cwiseAbs().maxCoeff();
  out.pointwise_l2 = phi.norm() / state.values.norm();
  out.averaged_residual = std::abs(state.values.dot(phi));
  return out;
}

ResidualReport averaged_vs_pointwise(const WaveFunction& state,
                                     const PotentialField& pot, double mass) {
  return pointwise_residual(state, pot, mass);
}

double residual_tolerance(double energy) {
  return 1e-8 * std::max(1.0, std::abs(energy));
}

}  // namespace pwqm

#ifndef PWQM_STATE_HPP
#define PWQM_STATE_HPP

#include <Eigen/Core>
#include <complex>
#include <optional>

#include "pwqm/grid.hpp"

namespace pwqm {

enum class Representation { Position, Momentum };

/// Complex field on a grid. Stored values carry the grid measure, i.e. the
/// discrete norm sum_i |values_i|^2 is the physical normalization integral;
/// a state flagged normalized has discrete norm 1. For stationary states
/// `energy` holds the eigenvalue E_n attaching the phase e^{-i E_n t}; the
/// time factor is never sampled.
struct WaveFunction {
  UniformGrid grid;
  Representation rep = Representation::Position;
  Eigen::VectorXcd values;
  std::optional<double> energy;
};

/// Plane-wave amplitudes a(p_k) of one stationary state, indexed by the
/// momentum lattice in ascending-k order. sum_k |a_k|^2 = 1 for a state
/// derived from a normalized WaveFunction.
struct SpectralAmplitudes {
  UniformGrid grid;
  Eigen::VectorXcd values;
  std::optional<double> energy;
};

}  // namespace pwqm

#endif

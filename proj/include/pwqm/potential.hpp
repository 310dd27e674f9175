#ifndef PWQM_POTENTIAL_HPP
#define PWQM_POTENTIAL_HPP

#include <Eigen/Core>
#include <map>
#include <string>

#include "pwqm/grid.hpp"

namespace pwqm {

/// Static potential V(r_j) in hartree, sampled on the grid points.
struct PotentialField {
  UniformGrid grid;
  Eigen::VectorXd values;
  std::string label;
};

/// Named presets addressable from the CLI:
///   free, constant(value), box(width,height), harmonic(omega),
///   soft-coulomb(eps), coulomb-radial().
/// box and coulomb-radial are one-dimensional. harmonic is the unit-mass
/// oscillator V = omega^2 r^2 / 2; coulomb-radial is -1/|x| with the x = 0
/// sample zeroed (radial states vanish there).
PotentialField make_potential(const UniformGrid& grid, const std::string& name,
                              const std::map<std::string, double>& params = {});

}  // namespace pwqm

#endif

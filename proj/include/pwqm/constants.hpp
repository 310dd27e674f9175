#ifndef PWQM_CONSTANTS_HPP
#define PWQM_CONSTANTS_HPP

// Hartree atomic units throughout: hbar = m_e = e = 1, Coulomb constant = 1.
// Lengths in bohr, energies in hartree. Unit conversions (hartree <-> eV)
// live in the CLI layer only.

namespace pwqm {

// CODATA 2018 value of 1/alpha; c in atomic units.
inline constexpr double speed_of_light = 137.035999084;

inline constexpr double electron_mass = 1.0;
inline constexpr double electron_charge = -1.0;

}  // namespace pwqm

#endif

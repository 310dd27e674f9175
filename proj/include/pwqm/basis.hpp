#ifndef PWQM_BASIS_HPP
#define PWQM_BASIS_HPP

#include <complex>

#include "pwqm/state.hpp"

namespace pwqm {

/// a(p_k) = M^{-1/2} sum_j psi(x_j) e^{-i p_k.x_j},  M = N^dim.
/// Unitary convention: forward/inverse round-trip is the identity and
/// Parseval holds without extra constants. Requires position representation.
SpectralAmplitudes forward_transform(const WaveFunction& psi);

/// psi(x_j) = M^{-1/2} sum_k a(p_k) e^{+i p_k.x_j}.
WaveFunction inverse_transform(const SpectralAmplitudes& a);

/// View amplitudes as a momentum-representation WaveFunction.
WaveFunction as_wavefunction(const SpectralAmplitudes& a);

/// Discrete inner product sum_i conj(f_i) g_i in either representation.
/// Grids and representations must match.
std::complex<double> inner_product(const WaveFunction& f, const WaveFunction& g);

double norm(const WaveFunction& f);

/// Returns f / sqrt(<f,f>); throws on zero norm.
WaveFunction normalize(const WaveFunction& f);

/// |a|^2 mass sitting in the unpaired Nyquist mode k = -N/2 (any axis).
double unpaired_mode_weight(const SpectralAmplitudes& a);

namespace detail {
/// In-place unitary DFT between position and ascending-k momentum order.
/// forward = true maps position -> momentum.
void unitary_fft(const UniformGrid& grid, Eigen::VectorXcd& values, bool forward);

/// Mode-coupling transform of a real field, DFT-bin order:
///   out[q] = (1/M) sum_j f_j e^{-i p_q . x_j}
/// so that <k| f |k'> = out[(k - k') mod N per axis].
Eigen::VectorXcd coupling_transform(const UniformGrid& grid,
                                    const Eigen::VectorXd& field);
}  // namespace detail

}  // namespace pwqm

#endif

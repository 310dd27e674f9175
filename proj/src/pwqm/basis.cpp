#include "pwqm/basis.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace pwqm {

namespace detail {

namespace {
// FFTW's planner is not thread safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void run_fftw(const UniformGrid& grid, std::vector<std::complex<double>>& buf,
              int sign) {
  int dims[3] = {grid.n(), grid.n(), grid.n()};
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft(grid.dim(), dims,
                         reinterpret_cast<fftw_complex*>(buf.data()),
                         reinterpret_cast<fftw_complex*>(buf.data()), sign,
                         FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}
}  // namespace

void unitary_fft(const UniformGrid& grid, Eigen::VectorXcd& values, bool forward) {
  const std::size_t size = grid.size();
  const int n = grid.n();
  const double scale = 1.0 / std::sqrt(static_cast<double>(size));

  // Ascending-k momentum index m relates to the DFT bin q = (m + N/2) mod N
  // per axis; the grid origin at -L/2 contributes the sign (-1)^m per axis
  // (N/2 is even for every supported N).
  std::vector<std::complex<double>> buf(size);
  if (forward) {
    for (std::size_t i = 0; i < size; ++i) buf[i] = values[i];
    run_fftw(grid, buf, FFTW_FORWARD);
    for (std::size_t i = 0; i < size; ++i) {
      const auto m = grid.unflatten(i);
      std::array<int, 3> q{0, 0, 0};
      int parity = 0;
      for (int d = 0; d < grid.dim(); ++d) {
        q[d] = (m[d] + n / 2) % n;
        parity += m[d];
      }
      const double sign = (parity % 2 == 0) ? 1.0 : -1.0;
      values[i] = sign * scale * buf[grid.flatten(q)];
    }
  } else {
    for (std::size_t i = 0; i < size; ++i) {
      const auto m = grid.unflatten(i);
      std::array<int, 3> q{0, 0, 0};
      int parity = 0;
      for (int d = 0; d < grid.dim(); ++d) {
        q[d] = (m[d] + n / 2) % n;
        parity += m[d];
      }
      const double sign = (parity % 2 == 0) ? 1.0 : -1.0;
      buf[grid.flatten(q)] = sign * values[i];
    }
    run_fftw(grid, buf, FFTW_BACKWARD);
    for (std::size_t i = 0; i < size; ++i) values[i] = scale * buf[i];
  }
}

Eigen::VectorXcd coupling_transform(const UniformGrid& grid,
                                    const Eigen::VectorXd& field) {
  const std::size_t size = grid.size();
  const int n = grid.n();
  Eigen::VectorXcd work = field.cast<std::complex<double>>();
  unitary_fft(grid, work, true);
  Eigen::VectorXcd out(size);
  const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(size));
  for (std::size_t i = 0; i < size; ++i) {
    const auto m = grid.unflatten(i);
    std::array<int, 3> q{0, 0, 0};
    for (int d = 0; d < grid.dim(); ++d) q[d] = (m[d] + n / 2) % n;
    out[grid.flatten(q)] = work[i] * inv_sqrt_m;
  }
  // a real field has out[-q] = conj(out[q]); enforce it so the assembled
  // operators are Hermitian to the last bit even for 1e5-scale walls
  for (std::size_t i = 0; i < size; ++i) {
    const auto q = grid.unflatten(i);
    std::array<int, 3> neg{0, 0, 0};
    for (int d = 0; d < grid.dim(); ++d) neg[d] = (n - q[d]) % n;
    const std::size_t j = grid.flatten(neg);
    if (j < i) continue;
    const std::complex<double> avg = 0.5 * (out[i] + std::conj(out[j]));
    out[i] = avg;
    out[j] = std::conj(avg);
  }
  return out;
}

}  // namespace detail

namespace {
void check_field_length(const UniformGrid& grid, const Eigen::VectorXcd& values,
                        const char* who) {
  if (static_cast<std::size_t>(values.size()) != grid.size())
    throw std::invalid_argument(std::string(who) +
                                ": values length does not match the grid");
}
}  // namespace

SpectralAmplitudes forward_transform(const WaveFunction& psi) {
  if (psi.rep != Representation::Position)
    throw std::invalid_argument(
        "forward_transform: state must be in position representation");
  check_field_length(psi.grid, psi.values, "forward_transform");
  SpectralAmplitudes a{psi.grid, psi.values, psi.energy};
  detail::unitary_fft(psi.grid, a.values, true);
  return a;
}

WaveFunction inverse_transform(const SpectralAmplitudes& a) {
  check_field_length(a.grid, a.values, "inverse_transform");
  WaveFunction psi{a.grid, Representation::Position, a.values, a.energy};
  detail::unitary_fft(a.grid, psi.values, false);
  return psi;
}

WaveFunction as_wavefunction(const SpectralAmplitudes& a) {
  return WaveFunction{a.grid, Representation::Momentum, a.values, a.energy};
}

std::complex<double> inner_product(const WaveFunction& f, const WaveFunction& g) {
  if (!(f.grid == g.grid))
    throw std::invalid_argument("inner_product: grid mismatch");
  if (f.rep != g.rep)
    throw std::invalid_argument("inner_product: representation mismatch");
  check_field_length(f.grid, f.values, "inner_product");
  check_field_length(g.grid, g.values, "inner_product");
  return f.values.dot(g.values);  // Eigen dot conjugates the left factor
}

double norm(const WaveFunction& f) { return f.values.norm(); }

WaveFunction normalize(const WaveFunction& f) {
  const double n = norm(f);
  if (n <= 0.0 || !std::isfinite(n))
    throw std::invalid_argument("normalize: state has zero or non-finite norm");
  WaveFunction out = f;
  out.values /= n;
  return out;
}

double unpaired_mode_weight(const SpectralAmplitudes& a) {
  double w = 0.0;
  for (std::size_t i = 0; i < a.grid.size(); ++i) {
    const auto m = a.grid.unflatten(i);
    bool nyquist = false;
    for (int d = 0; d < a.grid.dim(); ++d)
      if (m[d] == 0) nyquist = true;  // m = 0 is k = -N/2
    if (nyquist) w += std::norm(a.values[i]);
  }
  return w;
}

}  // namespace pwqm

#ifndef PWQM_GRID_HPP
#define PWQM_GRID_HPP

#include <array>
#include <cstddef>

namespace pwqm {

/// Periodic uniform grid together with its dual momentum lattice.
///
/// Positions per axis: x_j = -L/2 + j*dx, j = 0..N-1, dx = L/N.
/// Momenta per axis:   p_k = 2*pi*k/L,    k = -N/2..N/2-1 (hbar = 1).
/// Fields on the grid are flattened row-major over the axes; momentum-side
/// arrays use the same flattening with the per-axis index m = k + N/2, so
/// momenta run ascending along each axis.
class UniformGrid {
 public:
  UniformGrid(int dim, int points_per_axis, double extent);

  int dim() const { return dim_; }
  int n() const { return n_; }
  double extent() const { return extent_; }
  double spacing() const { return extent_ / n_; }
  double momentum_step() const;
  std::size_t size() const { return size_; }  // N^dim

  double axis_position(int j) const;  // j in [0, N)
  double axis_momentum(int m) const;  // m in [0, N), k = m - N/2

  std::array<int, 3> unflatten(std::size_t idx) const;
  std::size_t flatten(const std::array<int, 3>& per_axis) const;

  /// p^2 at a flattened momentum index (sum over axes).
  double momentum_sq(std::size_t idx) const;

  bool operator==(const UniformGrid& other) const {
    return dim_ == other.dim_ && n_ == other.n_ && extent_ == other.extent_;
  }

 private:
  int dim_;
  int n_;
  double extent_;
  std::size_t size_;
};

/// Validates arguments: dim in {1,3}, n a power of two >= 4, extent > 0.
UniformGrid make_grid(int dim, int n, double extent);

bool is_power_of_two(int n);

}  // namespace pwqm

#endif

#include "pwqm/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pwqm {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

UniformGrid::UniformGrid(int dim, int points_per_axis, double extent)
    : dim_(dim), n_(points_per_axis), extent_(extent) {
  size_ = 1;
  for (int d = 0; d < dim_; ++d) size_ *= static_cast<std::size_t>(n_);
}

double UniformGrid::momentum_step() const {
  return 2.0 * std::numbers::pi / extent_;
}

double UniformGrid::axis_position(int j) const {
  return -0.5 * extent_ + j * spacing();
}

double UniformGrid::axis_momentum(int m) const {
  return momentum_step() * (m - n_ / 2);
}

std::array<int, 3> UniformGrid::unflatten(std::size_t idx) const {
  std::array<int, 3> out{0, 0, 0};
  for (int d = dim_ - 1; d >= 0; --d) {
    out[d] = static_cast<int>(idx % n_);
    idx /= n_;
  }
  return out;
}

std::size_t UniformGrid::flatten(const std::array<int, 3>& per_axis) const {
  std::size_t idx = 0;
  for (int d = 0; d < dim_; ++d)
    idx = idx * n_ + static_cast<std::size_t>(per_axis[d]);
  return idx;
}

double UniformGrid::momentum_sq(std::size_t idx) const {
  const auto m = unflatten(idx);
  double p2 = 0.0;
  for (int d = 0; d < dim_; ++d) {
    const double p = axis_momentum(m[d]);
    p2 += p * p;
  }
  return p2;
}

UniformGrid make_grid(int dim, int n, double extent) {
  if (dim != 1 && dim != 3)
    throw std::invalid_argument("make_grid: dim must be 1 or 3, got " +
                                std::to_string(dim));
  if (n < 4 || !is_power_of_two(n))
    throw std::invalid_argument(
        "make_grid: points per axis must be a power of two >= 4, got " +
        std::to_string(n));
  if (!(extent > 0.0))
    throw std::invalid_argument("make_grid: extent must be positive");
  return UniformGrid(dim, n, extent);
}

}  // namespace pwqm

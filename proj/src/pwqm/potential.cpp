#include "pwqm/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace pwqm {

namespace {
double get_param(const std::map<std::string, double>& params,
                 const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double radius_sq(const UniformGrid& grid, std::size_t i) {
  const auto j = grid.unflatten(i);
  double r2 = 0.0;
  for (int d = 0; d < grid.dim(); ++d) {
    const double x = grid.axis_position(j[d]);
    r2 += x * x;
  }
  return r2;
}
}  // namespace

PotentialField make_potential(const UniformGrid& grid, const std::string& name,
                              const std::map<std::string, double>& params) {
  PotentialField pot{grid, Eigen::VectorXd::Zero(grid.size()), name};

  if (name == "free") {
    return pot;
  }
  if (name == "constant") {
    pot.values.setConstant(get_param(params, "value", 0.0));
    return pot;
  }
  if (name == "box") {
    if (grid.dim() != 1)
      throw std::invalid_argument("box potential requires a 1-d grid");
    const double width = get_param(params, "width", 1.0);
    const double height = get_param(params, "height", 1e5);
    if (width <= 0.0 || width >= grid.extent())
      throw std::invalid_argument("box width must be in (0, extent)");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double x = grid.axis_position(static_cast<int>(i));
      pot.values[i] = (std::abs(x) < 0.5 * width) ? 0.0 : height;
    }
    return pot;
  }
  if (name == "harmonic") {
    const double omega = get_param(params, "omega", 1.0);
    for (std::size_t i = 0; i < grid.size(); ++i)
      pot.values[i] = 0.5 * omega * omega * radius_sq(grid, i);
    return pot;
  }
  if (name == "soft-coulomb") {
    const double eps = get_param(params, "eps", 1.0);
    if (eps <= 0.0) throw std::invalid_argument("soft-coulomb eps must be > 0");
    for (std::size_t i = 0; i < grid.size(); ++i)
      pot.values[i] = -1.0 / std::sqrt(radius_sq(grid, i) + eps * eps);
    return pot;
  }
  if (name == "coulomb-radial") {
    if (grid.dim() != 1)
      throw std::invalid_argument("coulomb-radial requires a 1-d grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double x = grid.axis_position(static_cast<int>(i));
      pot.values[i] = (x == 0.0) ? 0.0 : -1.0 / std::abs(x);
    }
    return pot;
  }
  throw std::invalid_argument("unknown potential preset: " + name);
}

}  // namespace pwqm

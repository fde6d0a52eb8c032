#include "pielm/residual_density.hpp"

#include <cmath>
#include <stdexcept>

namespace pielm {

double trapezoid(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("trapezoid: need matching sizes >= 2");
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    acc += 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i]);
  return acc;
}

double ResidualField::density_at(std::size_t i) const {
  if (degenerate)
    throw std::logic_error(
        "ResidualField: no density on a degenerate (all-zero) field");
  if (i >= weights.size())
    throw std::out_of_range("ResidualField: index out of range");
  return weights[i] / z;
}

ResidualField build_density(std::span<const double> grid,
                            std::span<const double> residuals) {
  if (grid.size() != residuals.size())
    throw std::invalid_argument("build_density: grid/residual size mismatch");
  if (grid.size() < 2)
    throw std::invalid_argument("build_density: need at least two points");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1]))
      throw std::invalid_argument("build_density: grid must be strictly increasing");

  ResidualField field;
  field.grid.assign(grid.begin(), grid.end());
  field.weights.resize(residuals.size());
  bool any_nonzero = false;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    field.weights[i] = std::log1p(std::abs(residuals[i]));
    any_nonzero = any_nonzero || field.weights[i] > 0.0;
  }
  field.degenerate = !any_nonzero;
  field.z = field.degenerate ? 0.0 : trapezoid(field.grid, field.weights);
  return field;
}

}  // namespace pielm

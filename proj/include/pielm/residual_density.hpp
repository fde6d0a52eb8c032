#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pielm {

/// Residual energy density over an evaluation grid: per-point weights
/// w_i = log(1 + |R_i|) and their trapezoidal integral Z. The normalized
/// density w_i / Z integrates to one over the grid.
struct ResidualField {
  std::vector<double> grid;     // strictly increasing
  std::vector<double> weights;  // log1p(|R_i|), >= 0
  double z = 0.0;               // trapezoidal integral of weights
  bool degenerate = false;      // all residuals zero; no density available

  /// p_res(x_i) = weights[i] / z.
  /// Throws std::logic_error on a degenerate field, std::out_of_range on a
  /// bad index.
  double density_at(std::size_t i) const;
};

/// Trapezoidal quadrature of samples ys over abscissae xs.
double trapezoid(std::span<const double> xs, std::span<const double> ys);

/// Builds the residual energy density. A field whose residuals are all zero
/// is returned with the degenerate flag set rather than an error, so callers
/// can fall back to uniform sampling.
/// Throws std::invalid_argument if sizes mismatch, fewer than two points are
/// given, or the grid is not strictly increasing.
ResidualField build_density(std::span<const double> grid,
                            std::span<const double> residuals);

}  // namespace pielm

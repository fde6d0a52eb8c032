#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "pielm/problems.hpp"
#include "pielm/rbf_basis.hpp"

namespace pielm {

/// Overdetermined collocation system H beta = T. Interior rows hold
/// L[phi_j](x_i), the boundary rows lambda * phi_j(x_b); T holds f(x_i)
/// followed by lambda * g at each endpoint.
struct LinearSystem {
  Eigen::MatrixXd h;
  Eigen::VectorXd t;
  int n_interior = 0;
  int n_boundary = 0;
};

struct Solution {
  Eigen::VectorXd beta;
  RbfBasis basis;
  double lstsq_residual_norm = 0.0;  // ||H beta - T||_2
  double condition_number = 1.0;     // sigma_max / sigma_min over retained
};

struct SolveOptions {
  /// Singular values below rcond * sigma_max are truncated.
  /// Negative means machine epsilon * max(rows, cols).
  double rcond = -1.0;
};

/// Builds the penalty-weighted collocation system. Interior points must lie
/// strictly inside the domain; one boundary row is appended per endpoint.
/// Throws std::invalid_argument on empty input, points on or outside the
/// boundary, or too few rows for the basis size.
LinearSystem assemble(const ProblemSpec& spec, const RbfBasis& basis,
                      std::span<const double> interior_pts);

/// Minimum-norm least-squares solve via SVD with singular-value truncation.
/// Reports the attained residual norm and the condition number over the
/// retained singular values. Throws std::runtime_error on non-finite
/// entries or an all-zero matrix.
Solution solve_least_squares(const LinearSystem& sys, RbfBasis basis,
                             const SolveOptions& opts = {});

/// u_hat(x) = sum_j beta_j phi_j(x) at each query point.
std::vector<double> predict(const Solution& sol, std::span<const double> xs);

/// PDE residual R(x_i) = L[u_hat](x_i) - f(x_i) with derivatives of u_hat
/// taken analytically from the basis.
std::vector<double> residual_field(const Solution& sol,
                                   const ProblemSpec& spec,
                                   std::span<const double> grid);

}  // namespace pielm

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <span>

#include "pielm/problems.hpp"

// Data-parallel inner loops, OpenMP-parallelized over independent output
// elements. Every kernel has a *_serial reference twin used by the parity
// tests and the benchmark target. Parallel partitioning never splits an
// accumulation, so both variants produce bit-identical results for any
// thread count.

namespace pielm::kernels {

inline double rbf(double x, double c, double s) {
  const double d = x - c;
  return std::exp(-d * d / (2.0 * s * s));
}

inline double rbf_d1(double x, double c, double s) {
  const double d = x - c;
  return -d / (s * s) * rbf(x, c, s);
}

inline double rbf_d2(double x, double c, double s) {
  const double d = x - c;
  const double s2 = s * s;
  return (d * d / (s2 * s2) - 1.0 / s2) * rbf(x, c, s);
}

/// L applied to each basis function: out(i, j) = a2 phi_j''(x_i) +
/// a1 phi_j'(x_i) + a0 phi_j(x_i). out must be points.size() x centers.size().
void operator_matrix(const OperatorCoefficients& co,
                     std::span<const double> centers,
                     std::span<const double> widths,
                     std::span<const double> points,
                     Eigen::Ref<Eigen::MatrixXd> out);
void operator_matrix_serial(const OperatorCoefficients& co,
                            std::span<const double> centers,
                            std::span<const double> widths,
                            std::span<const double> points,
                            Eigen::Ref<Eigen::MatrixXd> out);

/// out[i] = sum_j beta[j] phi_j(x_i).
void predict_values(std::span<const double> beta,
                    std::span<const double> centers,
                    std::span<const double> widths,
                    std::span<const double> xs, std::span<double> out);
void predict_values_serial(std::span<const double> beta,
                           std::span<const double> centers,
                           std::span<const double> widths,
                           std::span<const double> xs, std::span<double> out);

/// out[i] = sum_j beta[j] (a2 phi_j'' + a1 phi_j' + a0 phi_j)(x_i).
void apply_operator(const OperatorCoefficients& co,
                    std::span<const double> beta,
                    std::span<const double> centers,
                    std::span<const double> widths,
                    std::span<const double> xs, std::span<double> out);
void apply_operator_serial(const OperatorCoefficients& co,
                           std::span<const double> beta,
                           std::span<const double> centers,
                           std::span<const double> widths,
                           std::span<const double> xs, std::span<double> out);

/// Posterior responsibilities q(i, k) of mixture component k for point i,
/// computed in log space with per-row max subtraction. Rows sum to 1.
/// out must be points.size() x mixing.size().
void responsibilities(std::span<const double> points,
                      std::span<const double> mixing,
                      std::span<const double> means,
                      std::span<const double> variances,
                      Eigen::Ref<Eigen::MatrixXd> out);
void responsibilities_serial(std::span<const double> points,
                             std::span<const double> mixing,
                             std::span<const double> means,
                             std::span<const double> variances,
                             Eigen::Ref<Eigen::MatrixXd> out);

/// out[i] = distance from centers[i] to its k-th nearest other center.
/// Requires 1 <= k < centers.size().
void kth_neighbor_distance(std::span<const double> centers, int k,
                           std::span<double> out);
void kth_neighbor_distance_serial(std::span<const double> centers, int k,
                                  std::span<double> out);

}  // namespace pielm::kernels

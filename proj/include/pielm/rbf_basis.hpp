#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

namespace pielm {

/// Gaussian RBF hidden layer: N center/width pairs defining the bases
/// phi_j(x) = exp(-(x - c_j)^2 / (2 s_j^2)).
struct RbfBasis {
  std::vector<double> centers;
  std::vector<double> widths;

  std::size_t size() const { return centers.size(); }

  /// phi_j(x), in (0, 1]. Throws std::out_of_range if j >= size().
  double eval(double x, std::size_t j) const;
  /// phi_j'(x) = -(x - c_j)/s_j^2 * phi_j(x).
  double eval_d1(double x, std::size_t j) const;
  /// phi_j''(x) = ((x - c_j)^2/s_j^4 - 1/s_j^2) * phi_j(x).
  double eval_d2(double x, std::size_t j) const;

  /// Throws std::invalid_argument unless sizes match, size >= 1 and all
  /// widths are strictly positive.
  void validate() const;
};

/// N centers drawn i.i.d. uniform on [lo, hi], all widths (hi - lo)/n * overlap.
RbfBasis uniform_init(int n, double lo, double hi, double overlap,
                      std::mt19937_64& rng);

/// Width rule s_j = beta * dist_k(c_j) + eps, where dist_k is the distance
/// to the k-th nearest other center (self excluded).
/// Throws std::invalid_argument unless centers.size() > k, k >= 1, beta > 0
/// and eps >= 0.
std::vector<double> knn_widths(std::span<const double> centers, int k,
                               double beta, double eps);

}  // namespace pielm

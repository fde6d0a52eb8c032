#include "pielm/rbf_basis.hpp"

#include <stdexcept>

#include "pielm/kernels.hpp"

namespace pielm {

namespace {
void check_index(const RbfBasis& basis, std::size_t j) {
  if (j >= basis.size())
    throw std::out_of_range("RbfBasis: basis index out of range");
}
}  // namespace

double RbfBasis::eval(double x, std::size_t j) const {
  check_index(*this, j);
  return kernels::rbf(x, centers[j], widths[j]);
}

double RbfBasis::eval_d1(double x, std::size_t j) const {
  check_index(*this, j);
  return kernels::rbf_d1(x, centers[j], widths[j]);
}

double RbfBasis::eval_d2(double x, std::size_t j) const {
  check_index(*this, j);
  return kernels::rbf_d2(x, centers[j], widths[j]);
}

void RbfBasis::validate() const {
  if (centers.empty())
    throw std::invalid_argument("RbfBasis: at least one basis function required");
  if (centers.size() != widths.size())
    throw std::invalid_argument("RbfBasis: centers/widths size mismatch");
  for (double s : widths)
    if (!(s > 0.0))
      throw std::invalid_argument("RbfBasis: widths must be strictly positive");
}

RbfBasis uniform_init(int n, double lo, double hi, double overlap,
                      std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("uniform_init: n must be >= 1");
  if (!(overlap > 0.0))
    throw std::invalid_argument("uniform_init: overlap must be > 0");
  if (!(lo < hi)) throw std::invalid_argument("uniform_init: empty domain");

  RbfBasis basis;
  basis.centers.resize(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> uniform(lo, hi);
  for (double& c : basis.centers) c = uniform(rng);
  basis.widths.assign(static_cast<std::size_t>(n), (hi - lo) / n * overlap);
  return basis;
}

std::vector<double> knn_widths(std::span<const double> centers, int k,
                               double beta, double eps) {
  if (k < 1) throw std::invalid_argument("knn_widths: k must be >= 1");
  if (centers.size() <= static_cast<std::size_t>(k))
    throw std::invalid_argument("knn_widths: need more than k centers");
  if (!(beta > 0.0)) throw std::invalid_argument("knn_widths: beta must be > 0");
  if (eps < 0.0) throw std::invalid_argument("knn_widths: eps must be >= 0");

  std::vector<double> widths(centers.size());
  kernels::kth_neighbor_distance(centers, k, widths);
  for (double& w : widths) w = beta * w + eps;
  return widths;
}

}  // namespace pielm

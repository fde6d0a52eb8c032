#include "pielm/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <vector>

namespace pielm::kernels {

namespace {

using Index = std::ptrdiff_t;

inline void operator_row(const OperatorCoefficients& co,
                         std::span<const double> centers,
                         std::span<const double> widths, double x,
                         Eigen::Ref<Eigen::MatrixXd> out, Index i) {
  const Index n = static_cast<Index>(centers.size());
  for (Index j = 0; j < n; ++j) {
    const double c = centers[static_cast<std::size_t>(j)];
    const double s = widths[static_cast<std::size_t>(j)];
    out(i, j) = co.a2 * rbf_d2(x, c, s) + co.a1 * rbf_d1(x, c, s) +
                co.a0 * rbf(x, c, s);
  }
}

inline double predict_point(std::span<const double> beta,
                            std::span<const double> centers,
                            std::span<const double> widths, double x) {
  double acc = 0.0;
  for (std::size_t j = 0; j < beta.size(); ++j)
    acc += beta[j] * rbf(x, centers[j], widths[j]);
  return acc;
}

inline double apply_point(const OperatorCoefficients& co,
                          std::span<const double> beta,
                          std::span<const double> centers,
                          std::span<const double> widths, double x) {
  double acc = 0.0;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    const double c = centers[j];
    const double s = widths[j];
    acc += beta[j] * (co.a2 * rbf_d2(x, c, s) + co.a1 * rbf_d1(x, c, s) +
                      co.a0 * rbf(x, c, s));
  }
  return acc;
}

// Log-space posterior for one point: subtract the row max before
// exponentiating so no row can underflow to all zeros.
inline void responsibility_row(std::span<const double> mixing,
                               std::span<const double> means,
                               std::span<const double> variances, double x,
                               Eigen::Ref<Eigen::MatrixXd> out, Index i,
                               std::span<double> log_terms) {
  constexpr double kLogTwoPi = 1.8378770664093454836;
  const Index k = static_cast<Index>(mixing.size());
  double max_term = -std::numeric_limits<double>::infinity();
  for (Index c = 0; c < k; ++c) {
    const std::size_t cu = static_cast<std::size_t>(c);
    const double var = variances[cu];
    const double d = x - means[cu];
    const double log_pdf = -0.5 * (kLogTwoPi + std::log(var)) -
                           d * d / (2.0 * var);
    const double term = mixing[cu] > 0.0
                            ? std::log(mixing[cu]) + log_pdf
                            : -std::numeric_limits<double>::infinity();
    log_terms[cu] = term;
    max_term = std::max(max_term, term);
  }
  double denom = 0.0;
  for (Index c = 0; c < k; ++c)
    denom += std::exp(log_terms[static_cast<std::size_t>(c)] - max_term);
  for (Index c = 0; c < k; ++c)
    out(i, c) =
        std::exp(log_terms[static_cast<std::size_t>(c)] - max_term) / denom;
}

inline double kth_distance(std::span<const double> centers, int k,
                           std::size_t i, std::vector<double>& scratch) {
  scratch.clear();
  for (std::size_t j = 0; j < centers.size(); ++j)
    if (j != i) scratch.push_back(std::abs(centers[i] - centers[j]));
  auto kth = scratch.begin() + (k - 1);
  std::nth_element(scratch.begin(), kth, scratch.end());
  return *kth;
}

}  // namespace

void operator_matrix(const OperatorCoefficients& co,
                     std::span<const double> centers,
                     std::span<const double> widths,
                     std::span<const double> points,
                     Eigen::Ref<Eigen::MatrixXd> out) {
  assert(out.rows() == static_cast<Index>(points.size()) &&
         out.cols() == static_cast<Index>(centers.size()));
  const Index rows = static_cast<Index>(points.size());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < rows; ++i)
    operator_row(co, centers, widths, points[static_cast<std::size_t>(i)], out,
                 i);
}

void operator_matrix_serial(const OperatorCoefficients& co,
                            std::span<const double> centers,
                            std::span<const double> widths,
                            std::span<const double> points,
                            Eigen::Ref<Eigen::MatrixXd> out) {
  assert(out.rows() == static_cast<Index>(points.size()) &&
         out.cols() == static_cast<Index>(centers.size()));
  const Index rows = static_cast<Index>(points.size());
  for (Index i = 0; i < rows; ++i)
    operator_row(co, centers, widths, points[static_cast<std::size_t>(i)], out,
                 i);
}

void predict_values(std::span<const double> beta,
                    std::span<const double> centers,
                    std::span<const double> widths,
                    std::span<const double> xs, std::span<double> out) {
  assert(out.size() == xs.size());
  const Index n = static_cast<Index>(xs.size());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) {
    const std::size_t iu = static_cast<std::size_t>(i);
    out[iu] = predict_point(beta, centers, widths, xs[iu]);
  }
}

void predict_values_serial(std::span<const double> beta,
                           std::span<const double> centers,
                           std::span<const double> widths,
                           std::span<const double> xs, std::span<double> out) {
  assert(out.size() == xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    out[i] = predict_point(beta, centers, widths, xs[i]);
}

void apply_operator(const OperatorCoefficients& co,
                    std::span<const double> beta,
                    std::span<const double> centers,
                    std::span<const double> widths,
                    std::span<const double> xs, std::span<double> out) {
  assert(out.size() == xs.size());
  const Index n = static_cast<Index>(xs.size());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) {
    const std::size_t iu = static_cast<std::size_t>(i);
    out[iu] = apply_point(co, beta, centers, widths, xs[iu]);
  }
}

void apply_operator_serial(const OperatorCoefficients& co,
                           std::span<const double> beta,
                           std::span<const double> centers,
                           std::span<const double> widths,
                           std::span<const double> xs, std::span<double> out) {
  assert(out.size() == xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    out[i] = apply_point(co, beta, centers, widths, xs[i]);
}

void responsibilities(std::span<const double> points,
                      std::span<const double> mixing,
                      std::span<const double> means,
                      std::span<const double> variances,
                      Eigen::Ref<Eigen::MatrixXd> out) {
  assert(out.rows() == static_cast<Index>(points.size()) &&
         out.cols() == static_cast<Index>(mixing.size()));
  const Index n = static_cast<Index>(points.size());
#pragma omp parallel
  {
    std::vector<double> log_terms(mixing.size());
#pragma omp for schedule(static)
    for (Index i = 0; i < n; ++i)
      responsibility_row(mixing, means, variances,
                         points[static_cast<std::size_t>(i)], out, i,
                         log_terms);
  }
}

void responsibilities_serial(std::span<const double> points,
                             std::span<const double> mixing,
                             std::span<const double> means,
                             std::span<const double> variances,
                             Eigen::Ref<Eigen::MatrixXd> out) {
  assert(out.rows() == static_cast<Index>(points.size()) &&
         out.cols() == static_cast<Index>(mixing.size()));
  std::vector<double> log_terms(mixing.size());
  for (Index i = 0; i < static_cast<Index>(points.size()); ++i)
    responsibility_row(mixing, means, variances,
                       points[static_cast<std::size_t>(i)], out, i, log_terms);
}

void kth_neighbor_distance(std::span<const double> centers, int k,
                           std::span<double> out) {
  assert(out.size() == centers.size());
  assert(k >= 1 && centers.size() > static_cast<std::size_t>(k));
  const Index n = static_cast<Index>(centers.size());
#pragma omp parallel
  {
    std::vector<double> scratch;
    scratch.reserve(centers.size());
#pragma omp for schedule(static)
    for (Index i = 0; i < n; ++i) {
      const std::size_t iu = static_cast<std::size_t>(i);
      out[iu] = kth_distance(centers, k, iu, scratch);
    }
  }
}

void kth_neighbor_distance_serial(std::span<const double> centers, int k,
                                  std::span<double> out) {
  assert(out.size() == centers.size());
  assert(k >= 1 && centers.size() > static_cast<std::size_t>(k));
  std::vector<double> scratch;
  scratch.reserve(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i)
    out[i] = kth_distance(centers, k, i, scratch);
}

}  // namespace pielm::kernels

#include "pielm/pielm_system.hpp"

#include <Eigen/SVD>
#include <limits>
#include <stdexcept>

#include "pielm/kernels.hpp"

namespace pielm {

LinearSystem assemble(const ProblemSpec& spec, const RbfBasis& basis,
                      std::span<const double> interior_pts) {
  spec.validate();
  basis.validate();
  if (interior_pts.empty())
    throw std::invalid_argument("assemble: empty interior point set");
  for (double x : interior_pts)
    if (!(x > spec.domain_lo && x < spec.domain_hi))
      throw std::invalid_argument(
          "assemble: interior points must lie strictly inside the domain");

  const int n_f = static_cast<int>(interior_pts.size());
  const int n_b = 2;
  const int n = static_cast<int>(basis.size());
  if (n_f + n_b < n)
    throw std::invalid_argument(
        "assemble: system must be overdetermined (rows >= basis size)");

  LinearSystem sys;
  sys.n_interior = n_f;
  sys.n_boundary = n_b;
  sys.h.resize(n_f + n_b, n);
  sys.t.resize(n_f + n_b);

  const OperatorCoefficients co = operator_coefficients(spec);
  kernels::operator_matrix(co, basis.centers, basis.widths, interior_pts,
                           sys.h.topRows(n_f));
  for (int i = 0; i < n_f; ++i)
    sys.t(i) = spec.source_at(interior_pts[static_cast<std::size_t>(i)]);

  // Dirichlet rows, lambda-scaled, appended lo then hi.
  const double lambda = spec.bc_penalty;
  const double xb[2] = {spec.domain_lo, spec.domain_hi};
  const double gb[2] = {spec.bc_lo, spec.bc_hi};
  for (int b = 0; b < n_b; ++b) {
    for (int j = 0; j < n; ++j)
      sys.h(n_f + b, j) =
          lambda * kernels::rbf(xb[b], basis.centers[static_cast<std::size_t>(j)],
                                basis.widths[static_cast<std::size_t>(j)]);
    sys.t(n_f + b) = lambda * gb[b];
  }
  return sys;
}

Solution solve_least_squares(const LinearSystem& sys, RbfBasis basis,
                             const SolveOptions& opts) {
  if (sys.h.rows() != sys.t.size() || sys.h.rows() < sys.h.cols() ||
      sys.h.cols() == 0)
    throw std::invalid_argument("solve_least_squares: malformed system");
  if (!sys.h.allFinite() || !sys.t.allFinite())
    throw std::runtime_error("solve_least_squares: non-finite entries");

  // SVD of H itself; forming H^T H would square the condition number.
  Eigen::BDCSVD<Eigen::MatrixXd> svd(sys.h,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double rcond =
      opts.rcond >= 0.0
          ? opts.rcond
          : std::numeric_limits<double>::epsilon() *
                static_cast<double>(std::max(sys.h.rows(), sys.h.cols()));
  svd.setThreshold(rcond);

  const Eigen::Index rank = svd.rank();
  if (rank == 0)
    throw std::runtime_error("solve_least_squares: matrix has rank zero");

  Solution sol;
  sol.beta = svd.solve(sys.t);
  sol.basis = std::move(basis);
  sol.lstsq_residual_norm = (sys.h * sol.beta - sys.t).norm();
  const auto& sigma = svd.singularValues();
  sol.condition_number = sigma(0) / sigma(rank - 1);
  return sol;
}

std::vector<double> predict(const Solution& sol, std::span<const double> xs) {
  std::vector<double> out(xs.size());
  kernels::predict_values({sol.beta.data(), static_cast<std::size_t>(sol.beta.size())},
                          sol.basis.centers, sol.basis.widths, xs, out);
  return out;
}

std::vector<double> residual_field(const Solution& sol,
                                   const ProblemSpec& spec,
                                   std::span<const double> grid) {
  const OperatorCoefficients co = operator_coefficients(spec);
  std::vector<double> out(grid.size());
  kernels::apply_operator(co,
                          {sol.beta.data(), static_cast<std::size_t>(sol.beta.size())},
                          sol.basis.centers, sol.basis.widths, grid, out);
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] -= spec.source_at(grid[i]);
  return out;
}

}  // namespace pielm

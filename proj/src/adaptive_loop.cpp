#include "pielm/adaptive_loop.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pielm/rbf_basis.hpp"
#include "pielm/residual_density.hpp"

namespace pielm {

namespace {

double rmse_vs_exact(const ProblemSpec& spec, const Solution& sol,
                     std::span<const double> grid) {
  const std::vector<double> predicted = predict(sol, grid);
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = predicted[i] - exact_solution(spec, grid[i]);
    sum_sq += d * d;
  }
  return std::sqrt(sum_sq / static_cast<double>(grid.size()));
}

Solution solve_with_context(const ProblemSpec& spec, const RbfBasis& basis,
                            std::span<const double> grid,
                            const SolveOptions& opts, int iteration) {
  try {
    const LinearSystem sys = assemble(spec, basis, grid);
    return solve_least_squares(sys, basis, opts);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error("adaptive iteration " + std::to_string(iteration) +
                             ": " + e.what());
  }
}

}  // namespace

double AdaptConfig::resolved_width_eps(double lo, double hi) const {
  return width_eps.value_or(1e-4 * (hi - lo));
}

void AdaptConfig::validate() const {
  if (gmm_components < 1)
    throw std::invalid_argument("AdaptConfig: gmm_components must be >= 1");
  if (n_neurons < gmm_components)
    throw std::invalid_argument("AdaptConfig: n_neurons must be >= gmm_components");
  if (hybrid_ratio < 0.0 || hybrid_ratio > 1.0)
    throw std::invalid_argument("AdaptConfig: hybrid_ratio must lie in [0, 1]");
  if (iterations < 1)
    throw std::invalid_argument("AdaptConfig: iterations must be >= 1");
  if (!(sigma_scaling > 0.0))
    throw std::invalid_argument("AdaptConfig: sigma_scaling must be > 0");
  if (knn_k < 1 || knn_k >= n_neurons)
    throw std::invalid_argument("AdaptConfig: knn_k must lie in [1, n_neurons)");
  if (width_eps && *width_eps < 0.0)
    throw std::invalid_argument("AdaptConfig: width_eps must be >= 0");
  if (!(overlap_init > 0.0))
    throw std::invalid_argument("AdaptConfig: overlap_init must be > 0");
  if (n_eval < 2)
    throw std::invalid_argument("AdaptConfig: n_eval must be >= 2");
  if (n_eval + 2 < n_neurons)
    throw std::invalid_argument(
        "AdaptConfig: n_eval + 2 boundary rows must cover n_neurons columns");
}

std::vector<double> evaluation_grid(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("evaluation_grid: n must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("evaluation_grid: lo < hi required");
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n + 1);
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = lo + (i + 1) * step;
  return grid;
}

std::vector<double> hybrid_resample(const GmmParams& gmm, int n, double alpha,
                                    double lo, double hi,
                                    std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("hybrid_resample: n must be >= 1");
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("hybrid_resample: alpha must lie in [0, 1]");

  const int n_gmm = static_cast<int>(std::floor(alpha * n));
  std::vector<double> centers = sample(gmm, n_gmm, lo, hi, rng);
  centers.reserve(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> uniform(lo, hi);
  for (int i = n_gmm; i < n; ++i) centers.push_back(uniform(rng));
  return centers;
}

RunResult run(const ProblemSpec& spec, const AdaptConfig& cfg) {
  spec.validate();
  cfg.validate();

  const double lo = spec.domain_lo;
  const double hi = spec.domain_hi;
  const std::vector<double> grid = evaluation_grid(lo, hi, cfg.n_eval);
  const double eps = cfg.resolved_width_eps(lo, hi);

  std::mt19937_64 rng(cfg.seed);
  RbfBasis basis = uniform_init(cfg.n_neurons, lo, hi, cfg.overlap_init, rng);

  RunResult result;
  result.trace.reserve(static_cast<std::size_t>(cfg.iterations) + 1);

  for (int t = 0; t <= cfg.iterations; ++t) {
    const auto tick = std::chrono::steady_clock::now();

    Solution sol = solve_with_context(spec, basis, grid, cfg.solve, t);
    const std::vector<double> residuals = residual_field(sol, spec, grid);
    const ResidualField density = build_density(grid, residuals);

    IterationRecord record;
    record.iteration = t;
    record.rmse = rmse_vs_exact(spec, sol, grid);
    record.max_abs_residual = 0.0;
    for (double r : residuals)
      record.max_abs_residual = std::max(record.max_abs_residual, std::abs(r));
    record.condition_number = sol.condition_number;
    record.centers = basis.centers;
    record.widths = basis.widths;

    if (t < cfg.iterations) {
      // A (near-)converged residual gives the GMM nothing to fit; keep the
      // current basis rather than chasing a flat density.
      const auto positive =
          std::count_if(density.weights.begin(), density.weights.end(),
                        [](double w) { return w > 0.0; });
      if (!density.degenerate && positive >= cfg.gmm_components) {
        WeightedDataset data{grid, density.weights};
        const FitResult gmm = fit(data, cfg.gmm_components, cfg.gmm_fit);
        std::vector<double> centers = hybrid_resample(
            gmm.params, cfg.n_neurons, cfg.hybrid_ratio, lo, hi, rng);
        std::vector<double> widths =
            knn_widths(centers, cfg.knn_k, cfg.sigma_scaling, eps);
        basis = RbfBasis{std::move(centers), std::move(widths)};
        record.adapted = true;
        record.gmm = gmm.params;
      }
    }

    record.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - tick)
            .count();
    result.trace.push_back(std::move(record));
    result.solution = std::move(sol);
  }
  return result;
}

RunResult run_baseline(const ProblemSpec& spec, const AdaptConfig& cfg) {
  spec.validate();
  cfg.validate();

  const double lo = spec.domain_lo;
  const double hi = spec.domain_hi;
  const std::vector<double> grid = evaluation_grid(lo, hi, cfg.n_eval);

  std::mt19937_64 rng(cfg.seed);
  RbfBasis basis = uniform_init(cfg.n_neurons, lo, hi, cfg.overlap_init, rng);

  const auto tick = std::chrono::steady_clock::now();
  Solution sol = solve_with_context(spec, basis, grid, cfg.solve, 0);
  const std::vector<double> residuals = residual_field(sol, spec, grid);

  IterationRecord record;
  record.iteration = 0;
  record.rmse = rmse_vs_exact(spec, sol, grid);
  for (double r : residuals)
    record.max_abs_residual = std::max(record.max_abs_residual, std::abs(r));
  record.condition_number = sol.condition_number;
  record.centers = basis.centers;
  record.widths = basis.widths;
  record.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - tick)
          .count();

  RunResult result;
  result.solution = std::move(sol);
  result.trace.push_back(std::move(record));
  return result;
}

}  // namespace pielm

#pragma once

#include <Eigen/Dense>
#include <random>
#include <span>
#include <vector>

namespace pielm {

/// K-component Gaussian mixture over the domain: mixing weights summing to
/// one, means, and scalar variances.
struct GmmParams {
  std::vector<double> mixing;
  std::vector<double> means;
  std::vector<double> variances;

  int components() const { return static_cast<int>(mixing.size()); }
  void validate() const;  // throws std::invalid_argument
};

/// Grid points paired with their residual weights w_i = log(1 + |R_i|).
struct WeightedDataset {
  std::vector<double> points;
  std::vector<double> weights;

  double total_weight() const;
  void validate() const;  // throws std::invalid_argument
};

struct FitOptions {
  int max_iters = 200;
  double tol = 1e-6;       // on the weight-normalized log-likelihood
  double var_floor = 1e-12;
};

struct FitResult {
  GmmParams params;
  /// Weighted log-likelihood normalized by the total weight, one entry for
  /// the initialization plus one per EM iteration. Non-decreasing.
  std::vector<double> log_likelihood;
};

/// E-step: responsibilities q(i, k), each row summing to 1.
Eigen::MatrixXd e_step(const WeightedDataset& data, const GmmParams& params);

/// M-step with weighted sufficient statistics:
///   N_k    = sum_i w_i q_ik
///   mu_k   = sum_i w_i q_ik x_i / N_k
///   var_k  = sum_i w_i q_ik (x_i - mu_k)^2 / N_k   (floored at var_floor)
///   pi_k   = N_k / sum_i w_i
/// A component whose N_k vanishes is re-seeded at the highest-weight point
/// with variance (span/K)^2 and mixing 1/K, then the mixing vector is
/// renormalized.
GmmParams m_step(const WeightedDataset& data, const Eigen::MatrixXd& resp,
                 double var_floor = 1e-12);

/// Deterministic initialization: means at k evenly spaced quantiles of the
/// cumulative weight, variances (span/k)^2, uniform mixing.
GmmParams initial_params(const WeightedDataset& data, int k);

/// Raw weighted log-likelihood sum_i w_i log sum_k pi_k N(x_i | mu_k, var_k).
double weighted_log_likelihood(const WeightedDataset& data,
                               const GmmParams& params);

/// Alternates E and M steps from initial_params until the normalized
/// log-likelihood improves by less than tol or max_iters is reached.
/// Throws std::invalid_argument if k < 1 or k exceeds the number of points
/// with positive weight.
FitResult fit(const WeightedDataset& data, int k, const FitOptions& opts = {});

/// n i.i.d. draws: component by categorical(mixing), then Gaussian. Draws
/// outside [lo, hi] are redrawn a bounded number of times, then clamped.
std::vector<double> sample(const GmmParams& params, int n, double lo,
                           double hi, std::mt19937_64& rng);

}  // namespace pielm

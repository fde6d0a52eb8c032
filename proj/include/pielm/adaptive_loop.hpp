#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "pielm/pielm_system.hpp"
#include "pielm/problems.hpp"
#include "pielm/weighted_gmm.hpp"

namespace pielm {

struct AdaptConfig {
  int n_neurons = 300;        // N
  int gmm_components = 8;     // K
  double hybrid_ratio = 0.7;  // alpha, fraction of centers drawn from the GMM
  int iterations = 3;         // T adaptation rounds (T + 1 solves)
  double sigma_scaling = 1.1;  // beta in the kNN width rule
  int knn_k = 2;
  std::optional<double> width_eps;  // defaults to 1e-4 * |domain|
  double overlap_init = 2.5;
  int n_eval = 1500;
  std::uint64_t seed = 42;
  FitOptions gmm_fit;
  SolveOptions solve;

  double resolved_width_eps(double lo, double hi) const;
  void validate() const;  // throws std::invalid_argument
};

struct IterationRecord {
  int iteration = 0;
  double rmse = 0.0;              // vs exact on the evaluation grid
  double max_abs_residual = 0.0;  // max |R| on the evaluation grid
  double condition_number = 1.0;
  double wall_time_s = 0.0;       // assemble + solve + assessment + adaptation
  bool adapted = false;           // a GMM was fitted and the basis resampled
  std::optional<GmmParams> gmm;   // mixture snapshot when adapted
  std::vector<double> centers;    // basis used for this iteration's solve
  std::vector<double> widths;
};

struct RunResult {
  Solution solution;
  std::vector<IterationRecord> trace;
};

/// n_eval evenly spaced points strictly inside (lo, hi). This one fixed set
/// serves collocation, residual assessment, and RMSE scoring.
std::vector<double> evaluation_grid(double lo, double hi, int n);

/// floor(alpha * n) mixture draws followed by n - floor(alpha * n) uniform
/// draws, all inside the closed domain.
std::vector<double> hybrid_resample(const GmmParams& gmm, int n, double alpha,
                                    double lo, double hi,
                                    std::mt19937_64& rng);

/// The adaptive solve: uniform centers and constant widths to start, then
/// T rounds of solve / residual assessment / weighted-GMM fit / hybrid
/// resampling / kNN width update, followed by a final solve and assessment.
/// A degenerate residual field (identically zero) skips adaptation for that
/// round and keeps the current basis. Deterministic per (spec, cfg, build).
RunResult run(const ProblemSpec& spec, const AdaptConfig& cfg);

/// Single solve with uniform random centers and constant widths
/// (hi - lo)/N * overlap_init; no adaptation. Shares the initialization RNG
/// stream with run(), so the same seed yields run()'s iteration-0 basis.
RunResult run_baseline(const ProblemSpec& spec, const AdaptConfig& cfg);

}  // namespace pielm

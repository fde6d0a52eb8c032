#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "pielm/adaptive_loop.hpp"

namespace pielm {

/// One benchmark run: configuration echo, accuracy and timing metrics, and
/// the per-iteration trace.
struct RunReport {
  std::string run_id;
  std::string problem;  // "single" | "double"
  double nu = 0.0;
  std::string method;  // "baseline" | "adaptive"
  int n_neurons = 0;
  int gmm_components = 0;
  double hybrid_ratio = 0.0;
  int iterations = 0;
  double sigma_scaling = 0.0;
  std::uint64_t seed = 0;
  double rmse = 0.0;
  double wall_time_s = 0.0;
  double condition_number = 0.0;
  std::vector<IterationRecord> trace;
};

/// sqrt(mean((predicted - exact)^2)). Throws std::invalid_argument on empty
/// or mismatched inputs.
double rmse(std::span<const double> predicted, std::span<const double> exact);

nlohmann::json to_json(const RunReport& report);
RunReport run_report_from_json(const nlohmann::json& j);

/// Writes the report array. With zero_timing set, every wall_time_s field is
/// emitted as 0 so that reports from identical configurations compare
/// byte-for-byte.
void write_report_json(const std::filesystem::path& path,
                       std::span<const RunReport> reports,
                       bool zero_timing = false);
std::vector<RunReport> read_report_json(const std::filesystem::path& path);

/// Columns: x, u_exact, u_pred, abs_error, residual_weight. Values carry 17
/// significant digits.
void write_solution_csv(const std::filesystem::path& path,
                        std::span<const double> xs,
                        std::span<const double> u_exact,
                        std::span<const double> u_pred,
                        std::span<const double> residual_weights);

/// Columns: center, width, iteration; one row per basis function per
/// iteration of the trace.
void write_centers_csv(const std::filesystem::path& path,
                       std::span<const IterationRecord> trace);

}  // namespace pielm

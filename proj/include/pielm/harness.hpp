#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "pielm/config.hpp"

namespace pielm {

struct HarnessOptions {
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed_override;  // replaces every block's seeds
  std::optional<int> score_grid;  // denser independent grid for reported RMSE
  bool reproducible = false;      // zero wall times in report.json
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericError = 3;

/// Runs every configured block (per seed, per method), then writes
/// report.json plus solution_<runid>.csv and centers_<runid>.csv per run.
/// Returns kExitOk, or kExitConfigError / kExitNumericError after printing a
/// diagnostic to stderr.
int run_benchmark(const HarnessConfig& config, const HarnessOptions& opts);
int run_benchmark(const std::filesystem::path& config_path,
                  const HarnessOptions& opts);

}  // namespace pielm

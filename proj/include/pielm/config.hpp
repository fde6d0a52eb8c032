#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "pielm/adaptive_loop.hpp"
#include "pielm/problems.hpp"

namespace pielm {

/// Raised for unparseable or invalid configuration input; maps to exit
/// code 2 in the CLI.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One run block: problem selection plus the adaptive-solver configuration.
struct RunConfig {
  std::string run_id;  // defaults to <block>_<problem>_<method>_s<seed>
  std::string problem = "single";  // "single" | "double"
  double nu = 1e-4;
  double bc_penalty = 1.0;
  std::string method = "both";  // "baseline" | "adaptive" | "both"
  std::vector<std::uint64_t> seeds;  // expanded per seed; defaults to {seed}
  AdaptConfig adapt;

  ProblemSpec make_problem() const;
};

struct HarnessConfig {
  std::vector<RunConfig> runs;
};

/// Parses {"runs": [block...]} or a single top-level block. Unknown keys are
/// rejected. Throws ConfigError.
HarnessConfig parse_config(const nlohmann::json& j);
HarnessConfig load_config(const std::filesystem::path& path);

/// Bundled configuration driving the stock benchmark: baseline and adaptive
/// runs for the single and double boundary-layer problems.
extern const char* const kDefaultBenchConfig;

}  // namespace pielm

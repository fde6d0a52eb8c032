#include "pielm/config.hpp"

#include <fstream>

namespace pielm {

namespace {

RunConfig parse_run_block(const nlohmann::json& block, std::size_t index) {
  if (!block.is_object())
    throw ConfigError("run block " + std::to_string(index) +
                      " must be a JSON object");

  RunConfig run;
  bool saw_seed = false;
  bool saw_seeds = false;
  for (const auto& [key, value] : block.items()) {
    try {
      if (key == "run_id") {
        run.run_id = value.get<std::string>();
      } else if (key == "problem") {
        run.problem = value.get<std::string>();
      } else if (key == "nu") {
        run.nu = value.get<double>();
      } else if (key == "bc_penalty") {
        run.bc_penalty = value.get<double>();
      } else if (key == "method") {
        run.method = value.get<std::string>();
      } else if (key == "seed") {
        run.adapt.seed = value.get<std::uint64_t>();
        saw_seed = true;
      } else if (key == "seeds") {
        run.seeds = value.get<std::vector<std::uint64_t>>();
        saw_seeds = true;
      } else if (key == "n_neurons") {
        run.adapt.n_neurons = value.get<int>();
      } else if (key == "gmm_components") {
        run.adapt.gmm_components = value.get<int>();
      } else if (key == "hybrid_ratio") {
        run.adapt.hybrid_ratio = value.get<double>();
      } else if (key == "iterations") {
        run.adapt.iterations = value.get<int>();
      } else if (key == "sigma_scaling") {
        run.adapt.sigma_scaling = value.get<double>();
      } else if (key == "knn_k") {
        run.adapt.knn_k = value.get<int>();
      } else if (key == "width_eps") {
        if (!value.is_null()) run.adapt.width_eps = value.get<double>();
      } else if (key == "overlap_init") {
        run.adapt.overlap_init = value.get<double>();
      } else if (key == "n_eval") {
        run.adapt.n_eval = value.get<int>();
      } else {
        throw ConfigError("unknown key '" + key + "' in run block " +
                          std::to_string(index));
      }
    } catch (const nlohmann::json::type_error& e) {
      throw ConfigError("bad value for '" + key + "' in run block " +
                        std::to_string(index) + ": " + e.what());
    }
  }

  if (saw_seed && saw_seeds)
    throw ConfigError("run block " + std::to_string(index) +
                      ": give 'seed' or 'seeds', not both");
  if (run.seeds.empty()) run.seeds = {run.adapt.seed};

  if (run.problem != "single" && run.problem != "double")
    throw ConfigError("run block " + std::to_string(index) +
                      ": problem must be \"single\" or \"double\"");
  if (run.method != "baseline" && run.method != "adaptive" &&
      run.method != "both")
    throw ConfigError("run block " + std::to_string(index) +
                      ": method must be \"baseline\", \"adaptive\" or \"both\"");
  try {
    run.make_problem().validate();
    run.adapt.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("run block " + std::to_string(index) + ": " + e.what());
  }
  return run;
}

}  // namespace

ProblemSpec RunConfig::make_problem() const {
  return problem == "double" ? make_double_boundary_layer(nu, bc_penalty)
                             : make_single_boundary_layer(nu, bc_penalty);
}

HarnessConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  HarnessConfig config;
  if (j.contains("runs")) {
    if (j.size() != 1)
      throw ConfigError("a config with 'runs' may contain no other keys");
    const nlohmann::json& runs = j.at("runs");
    if (!runs.is_array() || runs.empty())
      throw ConfigError("'runs' must be a nonempty array of run blocks");
    for (std::size_t i = 0; i < runs.size(); ++i)
      config.runs.push_back(parse_run_block(runs[i], i));
  } else {
    config.runs.push_back(parse_run_block(j, 0));
  }
  return config;
}

HarnessConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config parse error in " + path.string() + ": " +
                      e.what());
  }
  return parse_config(j);
}

// Stock benchmark: baseline vs. adaptive on both boundary-layer problems at
// their published hyperparameters.
const char* const kDefaultBenchConfig = R"({
  "runs": [
    {
      "problem": "single",
      "nu": 1e-4,
      "method": "both",
      "seed": 42,
      "n_neurons": 300,
      "gmm_components": 8,
      "hybrid_ratio": 0.7,
      "iterations": 3,
      "sigma_scaling": 1.1,
      "n_eval": 1500
    },
    {
      "problem": "double",
      "nu": 1e-4,
      "method": "both",
      "seed": 42,
      "n_neurons": 500,
      "gmm_components": 16,
      "hybrid_ratio": 0.7,
      "iterations": 3,
      "sigma_scaling": 1.5,
      "n_eval": 1500
    }
  ]
})";

}  // namespace pielm

// Command-line harness: `pielm solve` runs the blocks of a config file,
// `pielm bench` reproduces the stock baseline-vs-adaptive comparison.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "pielm/harness.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<int> score_grid;
  int threads = 0;  // 0 = leave the OpenMP default alone
  bool reproducible = false;
};

void add_common_options(CLI::App& cmd, CliOptions& opts) {
  cmd.add_option("--out", opts.out_dir, "Output directory for reports and CSVs")
      ->capture_default_str();
  cmd.add_option("--seed", opts.seed,
                 "Override the seed list of every run block");
  cmd.add_option("--score-grid", opts.score_grid,
                 "Score reported RMSE on a denser n-point grid")
      ->check(CLI::Range(2, 1000000));
  cmd.add_option("--threads", opts.threads, "OpenMP thread count (0 = default)")
      ->check(CLI::Range(0, 1024));
  cmd.add_flag("--reproducible", opts.reproducible,
               "Write wall times as 0 so identical configs produce "
               "byte-identical reports");
}

int dispatch(const CliOptions& opts, bool use_default_config) {
#ifdef _OPENMP
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
#endif
  pielm::HarnessOptions harness;
  harness.out_dir = opts.out_dir;
  harness.seed_override = opts.seed;
  harness.score_grid = opts.score_grid;
  harness.reproducible = opts.reproducible;

  if (use_default_config) {
    pielm::HarnessConfig config;
    try {
      config = pielm::parse_config(nlohmann::json::parse(pielm::kDefaultBenchConfig));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return pielm::kExitConfigError;
    }
    return pielm::run_benchmark(config, harness);
  }
  return pielm::run_benchmark(std::filesystem::path(opts.config_path), harness);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive RBF-PIELM solver for 1D boundary-layer problems"};
  app.require_subcommand(1);

  CliOptions solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "Run the blocks of a config file");
  solve->add_option("--config", solve_opts.config_path, "JSON run configuration")
      ->required()
      ->check(CLI::ExistingFile);
  add_common_options(*solve, solve_opts);

  CliOptions bench_opts;
  CLI::App* bench = app.add_subcommand(
      "bench", "Baseline vs. adaptive on the stock boundary-layer problems");
  bench->add_option("--config", bench_opts.config_path,
                    "Replace the bundled benchmark configuration")
      ->check(CLI::ExistingFile);
  add_common_options(*bench, bench_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pielm::kExitConfigError;
  }

  if (solve->parsed()) return dispatch(solve_opts, false);
  return dispatch(bench_opts, bench_opts.config_path.empty());
}

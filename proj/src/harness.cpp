#include "pielm/harness.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "pielm/report.hpp"
#include "pielm/residual_density.hpp"

namespace pielm {

namespace {

struct RunJob {
  std::string id;
  ProblemSpec spec;
  RunConfig config;
  AdaptConfig adapt;  // config.adapt with the job's seed applied
  bool adaptive = false;
};

std::vector<RunJob> expand_jobs(const HarnessConfig& config,
                                const HarnessOptions& opts) {
  std::vector<RunJob> jobs;
  for (std::size_t b = 0; b < config.runs.size(); ++b) {
    const RunConfig& run = config.runs[b];
    const std::string prefix =
        run.run_id.empty() ? std::to_string(b) + "_" + run.problem
                           : run.run_id;
    std::vector<std::uint64_t> seeds = run.seeds;
    if (opts.seed_override) seeds = {*opts.seed_override};

    std::vector<std::string> methods;
    if (run.method == "both")
      methods = {"baseline", "adaptive"};
    else
      methods = {run.method};

    for (std::uint64_t seed : seeds) {
      for (const std::string& method : methods) {
        RunJob job;
        job.id = prefix + "_" + method + "_s" + std::to_string(seed);
        job.spec = run.make_problem();
        job.config = run;
        job.adapt = run.adapt;
        job.adapt.seed = seed;
        job.adaptive = method == "adaptive";
        jobs.push_back(std::move(job));
      }
    }
  }
  return jobs;
}

RunReport summarize(const RunJob& job, const RunResult& result,
                    const HarnessOptions& opts) {
  RunReport report;
  report.run_id = job.id;
  report.problem = job.config.problem;
  report.nu = job.config.nu;
  report.method = job.adaptive ? "adaptive" : "baseline";
  report.n_neurons = job.adapt.n_neurons;
  report.gmm_components = job.adapt.gmm_components;
  report.hybrid_ratio = job.adapt.hybrid_ratio;
  report.iterations = job.adapt.iterations;
  report.sigma_scaling = job.adapt.sigma_scaling;
  report.seed = job.adapt.seed;
  report.trace = result.trace;

  report.rmse = result.trace.back().rmse;
  if (opts.score_grid) {
    const std::vector<double> xs = evaluation_grid(
        job.spec.domain_lo, job.spec.domain_hi, *opts.score_grid);
    const std::vector<double> predicted = predict(result.solution, xs);
    std::vector<double> exact(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      exact[i] = exact_solution(job.spec, xs[i]);
    report.rmse = rmse(predicted, exact);
  }
  report.condition_number = result.solution.condition_number;
  for (const IterationRecord& rec : result.trace)
    report.wall_time_s += rec.wall_time_s;
  return report;
}

void write_run_csvs(const RunJob& job, const RunResult& result,
                    const std::filesystem::path& out_dir) {
  const std::vector<double> grid = evaluation_grid(
      job.spec.domain_lo, job.spec.domain_hi, job.adapt.n_eval);
  const std::vector<double> predicted = predict(result.solution, grid);
  std::vector<double> exact(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    exact[i] = exact_solution(job.spec, grid[i]);
  const std::vector<double> residuals =
      residual_field(result.solution, job.spec, grid);
  const ResidualField density = build_density(grid, residuals);

  write_solution_csv(out_dir / ("solution_" + job.id + ".csv"), grid, exact,
                     predicted, density.weights);
  write_centers_csv(out_dir / ("centers_" + job.id + ".csv"), result.trace);
}

}  // namespace

int run_benchmark(const HarnessConfig& config, const HarnessOptions& opts) {
  if (opts.score_grid && *opts.score_grid < 2) {
    std::cerr << "error: --score-grid must be >= 2\n";
    return kExitConfigError;
  }

  std::error_code ec;
  std::filesystem::create_directories(opts.out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory "
              << opts.out_dir.string() << ": " << ec.message() << '\n';
    return kExitConfigError;
  }

  const std::vector<RunJob> jobs = expand_jobs(config, opts);
  std::vector<RunReport> reports;
  reports.reserve(jobs.size());

  for (const RunJob& job : jobs) {
    try {
      const RunResult result = job.adaptive ? run(job.spec, job.adapt)
                                            : run_baseline(job.spec, job.adapt);
      const RunReport report = summarize(job, result, opts);
      char line[160];
      std::snprintf(line, sizeof(line),
                    "%-40s rmse=%.3e  kappa=%.3e  time=%.3fs", job.id.c_str(),
                    report.rmse, report.condition_number, report.wall_time_s);
      std::cout << line << '\n';
      write_run_csvs(job, result, opts.out_dir);
      reports.push_back(report);
    } catch (const std::exception& e) {
      std::cerr << "error: run " << job.id << ": " << e.what() << '\n';
      return kExitNumericError;
    }
  }

  try {
    write_report_json(opts.out_dir / "report.json", reports, opts.reproducible);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumericError;
  }
  std::cout << "wrote " << (opts.out_dir / "report.json").string() << " ("
            << reports.size() << " runs)\n";
  return kExitOk;
}

int run_benchmark(const std::filesystem::path& config_path,
                  const HarnessOptions& opts) {
  HarnessConfig config;
  try {
    config = load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return run_benchmark(config, opts);
}

}  // namespace pielm

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pielm/adaptive_loop.hpp"

using namespace pielm;

namespace {

AdaptConfig small_config() {
  AdaptConfig cfg;
  cfg.n_neurons = 40;
  cfg.gmm_components = 4;
  cfg.iterations = 1;
  cfg.n_eval = 150;
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST_SUITE("adaptive_loop") {

TEST_CASE("config validation") {
  AdaptConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  cfg = AdaptConfig{};
  cfg.gmm_components = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = AdaptConfig{};
  cfg.n_neurons = cfg.gmm_components - 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = AdaptConfig{};
  cfg.hybrid_ratio = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = AdaptConfig{};
  cfg.iterations = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = AdaptConfig{};
  cfg.sigma_scaling = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = AdaptConfig{};
  cfg.knn_k = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = AdaptConfig{};
  cfg.width_eps = -1e-3;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = AdaptConfig{};
  cfg.n_eval = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = AdaptConfig{};
  cfg.n_eval = 100;
  cfg.n_neurons = 200;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("width epsilon defaults to 1e-4 of the domain length") {
  AdaptConfig cfg;
  CHECK(cfg.resolved_width_eps(0.0, 1.0) == 1e-4);
  CHECK(cfg.resolved_width_eps(-2.0, 2.0) == 4e-4);
  cfg.width_eps = 0.05;
  CHECK(cfg.resolved_width_eps(0.0, 1.0) == 0.05);
}

TEST_CASE("evaluation grid is uniform and strictly interior") {
  const std::vector<double> grid = evaluation_grid(0.0, 1.0, 3);
  REQUIRE(grid.size() == 3);
  CHECK(grid[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(grid[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(grid[2] == doctest::Approx(0.75).epsilon(1e-15));

  const std::vector<double> fine = evaluation_grid(0.0, 1.0, 1500);
  CHECK(fine.front() > 0.0);
  CHECK(fine.back() < 1.0);
  for (std::size_t i = 1; i < fine.size(); ++i) CHECK(fine[i - 1] < fine[i]);

  CHECK_THROWS_AS(evaluation_grid(0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(evaluation_grid(1.0, 0.0, 5), std::invalid_argument);
}

TEST_CASE("hybrid resampling splits counts by floor(alpha n)") {
  const GmmParams gmm{{1.0}, {0.5}, {1e-8}};  // a near-delta at 0.5
  std::mt19937_64 rng(55);

  const std::vector<double> mixed = hybrid_resample(gmm, 300, 0.7, 0.0, 1.0, rng);
  REQUIRE(mixed.size() == 300);
  // The first floor(0.7 * 300) = 210 draws come from the mixture block.
  for (int i = 0; i < 210; ++i) CHECK(std::abs(mixed[i] - 0.5) < 0.01);
  int uniform_far = 0;
  for (int i = 210; i < 300; ++i)
    if (std::abs(mixed[i] - 0.5) > 0.05) ++uniform_far;
  CHECK(uniform_far > 50);  // the tail is uniform, not mixture draws
  for (double x : mixed) {
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
  }

  CHECK(hybrid_resample(gmm, 10, 0.0, 0.0, 1.0, rng).size() == 10);
  const std::vector<double> all_gmm = hybrid_resample(gmm, 10, 1.0, 0.0, 1.0, rng);
  for (double x : all_gmm) CHECK(std::abs(x - 0.5) < 0.01);

  CHECK_THROWS_AS(hybrid_resample(gmm, 0, 0.5, 0.0, 1.0, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(hybrid_resample(gmm, 10, -0.1, 0.0, 1.0, rng),
                  std::invalid_argument);
}

TEST_CASE("adaptive run produces a full trace with constant basis size") {
  const ProblemSpec spec = make_single_boundary_layer(0.05);
  AdaptConfig cfg = small_config();
  cfg.iterations = 2;

  const RunResult result = run(spec, cfg);
  REQUIRE(result.trace.size() == 3);  // T + 1 solves
  for (const IterationRecord& rec : result.trace) {
    CHECK(rec.centers.size() == 40);
    CHECK(rec.widths.size() == 40);
    CHECK(std::isfinite(rec.rmse));
    CHECK(rec.condition_number >= 1.0);
    CHECK(rec.wall_time_s > 0.0);
  }
  CHECK(result.trace[0].adapted);
  CHECK(result.trace[0].gmm.has_value());
  CHECK(result.trace[1].adapted);
  CHECK_FALSE(result.trace[2].adapted);  // the final solve never adapts
  CHECK_FALSE(result.trace[2].gmm.has_value());
  CHECK(static_cast<std::size_t>(result.solution.beta.size()) == 40);
  // The final basis belongs to the final solve.
  CHECK(result.solution.basis.centers == result.trace[2].centers);
}

TEST_CASE("identical config and seed reproduce the run exactly") {
  const ProblemSpec spec = make_single_boundary_layer(0.05);
  const AdaptConfig cfg = small_config();
  const RunResult a = run(spec, cfg);
  const RunResult b = run(spec, cfg);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t t = 0; t < a.trace.size(); ++t) {
    CHECK(a.trace[t].rmse == b.trace[t].rmse);
    CHECK(a.trace[t].centers == b.trace[t].centers);
    CHECK(a.trace[t].widths == b.trace[t].widths);
  }
  CHECK(a.solution.beta == b.solution.beta);
}

TEST_CASE("baseline shares the adaptive run's initialization") {
  const ProblemSpec spec = make_single_boundary_layer(0.05);
  AdaptConfig cfg = small_config();
  cfg.hybrid_ratio = 0.0;

  const RunResult baseline = run_baseline(spec, cfg);
  REQUIRE(baseline.trace.size() == 1);
  CHECK_FALSE(baseline.trace[0].adapted);

  // Iteration 0 of the adaptive run solves the identical system.
  const RunResult adaptive = run(spec, cfg);
  CHECK(adaptive.trace[0].centers == baseline.trace[0].centers);
  CHECK(adaptive.trace[0].widths == baseline.trace[0].widths);
  CHECK(adaptive.trace[0].rmse == baseline.trace[0].rmse);
  CHECK(adaptive.trace[0].condition_number ==
        baseline.trace[0].condition_number);

  // Same-seed baseline is itself reproducible.
  const RunResult again = run_baseline(spec, cfg);
  CHECK(again.trace[0].rmse == baseline.trace[0].rmse);
  CHECK(again.solution.beta == baseline.solution.beta);
}

TEST_CASE("smooth-regime baseline is already accurate") {
  const ProblemSpec spec = make_single_boundary_layer(0.1);
  AdaptConfig cfg;
  cfg.n_neurons = 100;
  cfg.n_eval = 500;
  cfg.seed = 42;
  // Randomly placed narrow kernels cannot reproduce a smooth profile: local
  // center-density fluctuations leave gaps no narrow basis function spans.
  // Widths of ~10x the mean spacing give the quasi-interpolation regime where
  // a gentle problem is solved to near machine precision.
  cfg.overlap_init = 10.0;
  const RunResult result = run_baseline(spec, cfg);
  CHECK(result.trace[0].rmse < 1e-4);
}

}  // TEST_SUITE

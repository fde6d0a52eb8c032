#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pielm/residual_density.hpp"

using namespace pielm;

TEST_SUITE("residual_density") {

TEST_CASE("trapezoid on hand-worked samples") {
  const std::vector<double> xs{0.0, 1.0, 3.0};
  const std::vector<double> ys{1.0, 2.0, 4.0};
  CHECK(trapezoid(xs, ys) == doctest::Approx(7.5).epsilon(1e-15));

  const std::vector<double> flat(11, 3.0);
  std::vector<double> grid(11);
  for (int i = 0; i <= 10; ++i) grid[i] = i / 10.0;
  CHECK(trapezoid(grid, flat) == doctest::Approx(3.0).epsilon(1e-15));

  CHECK_THROWS_AS(trapezoid(std::vector<double>{0.0}, std::vector<double>{1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trapezoid(xs, flat), std::invalid_argument);
}

TEST_CASE("weights are log-compressed residual magnitudes") {
  const std::vector<double> grid{0.0, 0.5, 1.0};
  const std::vector<double> residuals{-1.0, 0.0, std::exp(1.0) - 1.0};
  const ResidualField field = build_density(grid, residuals);
  CHECK(field.weights[0] == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(field.weights[1] == 0.0);
  CHECK(field.weights[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(field.degenerate);
  CHECK(field.z > 0.0);
}

TEST_CASE("density integrates to one on random non-degenerate fields") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss(0.0, 2.0);
  std::uniform_int_distribution<int> size(10, 200);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = size(rng);
    std::vector<double> grid(n), residuals(n);
    for (int i = 0; i < n; ++i) {
      grid[i] = static_cast<double>(i) / (n - 1);
      residuals[i] = gauss(rng);
    }
    residuals[n / 2] += 1.0;  // guarantee a nonzero entry

    const ResidualField field = build_density(grid, residuals);
    REQUIRE_FALSE(field.degenerate);
    std::vector<double> density(n);
    for (int i = 0; i < n; ++i) density[i] = field.density_at(i);
    CHECK(std::abs(trapezoid(grid, density) - 1.0) <= 1e-12);
  }
}

TEST_CASE("constant residual e-1 yields the unit density") {
  const int n = 101;
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = static_cast<double>(i) / (n - 1);
  const std::vector<double> residuals(n, std::exp(1.0) - 1.0);

  const ResidualField field = build_density(grid, residuals);
  for (int i = 0; i < n; ++i)
    CHECK(std::abs(field.density_at(i) - 1.0) <= 1e-12);
}

TEST_CASE("an identically zero residual field is degenerate") {
  const std::vector<double> grid{0.1, 0.2, 0.3};
  const ResidualField field = build_density(grid, std::vector<double>(3, 0.0));
  CHECK(field.degenerate);
  CHECK(field.z == 0.0);
  CHECK_THROWS_AS(field.density_at(0), std::logic_error);
}

TEST_CASE("index and shape validation") {
  const std::vector<double> grid{0.0, 0.5, 1.0};
  const std::vector<double> residuals{1.0, 2.0, 3.0};
  const ResidualField field = build_density(grid, residuals);
  CHECK_THROWS_AS(field.density_at(3), std::out_of_range);

  CHECK_THROWS_AS(build_density(grid, std::vector<double>{1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_density(std::vector<double>{0.0}, std::vector<double>{1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      build_density(std::vector<double>{0.0, 0.5, 0.5},
                    std::vector<double>{1.0, 2.0, 3.0}),
      std::invalid_argument);
}

}  // TEST_SUITE

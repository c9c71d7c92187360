#include <doctest.h>

#include <omp.h>

#include <random>

#include "cfdyn/sweep.hpp"
#include "oracles.hpp"

using namespace cfdyn;

// The OpenMP kernels must reproduce the serial reference bit for bit,
// whatever the thread count.
TEST_CASE("parallel kernels equal the serial reference") {
  std::mt19937_64 gen(99);
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (int trial = 0; trial < 10; ++trial) {
      const auto cfg = oracle::random_config(gen, 2000);
      const auto table = build_fitness_table(cfg);
      CHECK(table == serial::build_fitness_table(cfg));
      const auto par = build_kernel(cfg, table);
      const auto ser = serial::build_kernel(cfg, table);
      CHECK(par.t_plus == ser.t_plus);
      CHECK(par.t_minus == ser.t_minus);
    }
    const auto grid = linear_grid(0.0, 1.0, 9);
    const auto cfg = oracle::stag_hunt_defaults();
    const auto par = sweep_chi(cfg, grid);
    const auto ser = serial::sweep_chi(cfg, grid);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].chi == grid[i]);
      CHECK(par[i].summary.expected_cooperators == ser[i].summary.expected_cooperators);
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("sweep endpoints equal the pure modes") {
  auto cfg = oracle::stag_hunt_defaults();
  const std::vector<double> ends{0.0, 1.0};
  const auto rows = sweep_chi(cfg, ends);
  const double sl = solve_cooperation(cfg).expected_cooperators;
  cfg.mode = UpdateMode::Counterfactual;
  const double ct = solve_cooperation(cfg).expected_cooperators;
  CHECK(rows[0].summary.expected_cooperators == ct);
  CHECK(rows[1].summary.expected_cooperators == sl);
}

TEST_CASE("sweep input checks") {
  auto cfg = oracle::stag_hunt_defaults();
  const std::vector<double> bad{0.5, 1.5};
  CHECK_THROWS_AS(sweep_chi(cfg, bad), std::invalid_argument);
  cfg.mutation = 0.0;
  const std::vector<double> ok{0.5};
  CHECK_THROWS_AS(sweep_chi(cfg, ok), ReducibleChainError);
  CHECK_THROWS_AS(linear_grid(0.0, 1.0, 1), std::invalid_argument);
  const auto g = linear_grid(0.0, 1.0, 21);
  CHECK(g.size() == 21);
  CHECK(g[1] == doctest::Approx(0.05));
  CHECK(g.back() == 1.0);
}

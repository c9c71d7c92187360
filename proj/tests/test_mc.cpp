#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cfdyn/markov.hpp"
#include "cfdyn/mc.hpp"
#include "oracles.hpp"

using namespace cfdyn;

namespace {

struct StepCounts {
  long up = 0, down = 0, stay = 0;
};

StepCounts sample_steps(const Simulator& sim, int k, long trials, std::uint64_t seed) {
  Rng rng(seed);
  StepCounts c;
  for (long t = 0; t < trials; ++t) {
    const int next = sim.step(k, rng);
    if (next == k + 1) ++c.up;
    else if (next == k - 1) ++c.down;
    else if (next == k) ++c.stay;
  }
  return c;
}

bool within_se(long hits, long trials, double p, double z) {
  const double se = std::sqrt(p * (1 - p) / trials);
  return std::abs(double(hits) / trials - p) <= z * se + 1e-12;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d / 2;
}

}  // namespace

TEST_CASE("rng is reproducible and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform01();
    CHECK(x == b.uniform01());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    const auto idx = a.uniform_index(7);
    CHECK(idx == b.uniform_index(7));
    CHECK(idx < 7u);
  }
  // first output of mt19937_64 with the default seed is documented by the standard
  std::mt19937_64 ref(5489u);
  ref.discard(9999);
  CHECK(ref() == 9981545732273789042ull);
}

TEST_CASE("no mutation, no social learning move out of all-defect") {
  auto cfg = oracle::stag_hunt_defaults();
  cfg.mutation = 0.0;
  const Simulator sim(cfg);
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) CHECK(sim.step(0, rng) == 0);
  Rng rng2(2);
  for (int i = 0; i < 10000; ++i) CHECK(sim.step(50, rng2) == 50);
}

TEST_CASE("steps move by at most one") {
  auto cfg = oracle::stag_hunt_defaults(UpdateMode::Mixed);
  cfg.chi = 0.3;
  const Simulator sim(cfg);
  Rng rng(5);
  int k = 25;
  for (int i = 0; i < 20000; ++i) {
    const int next = sim.step(k, rng);
    CHECK(std::abs(next - k) <= 1);
    CHECK(next >= 0);
    CHECK(next <= 50);
    k = next;
  }
}

TEST_CASE("one-step frequencies match the analytic kernel") {
  for (auto mode : {UpdateMode::SocialLearning, UpdateMode::Counterfactual, UpdateMode::Mixed}) {
    for (bool exact : {false, true}) {
      auto cfg = oracle::stag_hunt_defaults(mode);
      cfg.chi = 0.5;
      cfg.exact_pairing = exact;
      const auto table = build_fitness_table(cfg);
      const auto kernel = build_kernel(cfg, table);
      const Simulator sim(cfg, table);
      for (int k : {0, 12, 30, 50}) {
        const long trials = 200000;
        const auto c = sample_steps(sim, k, trials, 1000 + k);
        CHECK(c.up + c.down + c.stay == trials);
        CAPTURE(k);
        // 48 comparisons here, so 4 standard errors keeps the family-wise false alarm rate low
        CHECK(within_se(c.up, trials, kernel.t_plus[k], 4.0));
        CHECK(within_se(c.down, trials, kernel.t_minus[k], 4.0));
      }
    }
  }
}

TEST_CASE("pure mutation run approaches the binomial") {
  PopulationConfig cfg;
  cfg.population_size = 30;
  cfg.mutation = 1.0;
  const auto report = Simulator(cfg).run(0, 2'000'000, default_burn_in(cfg), 17);
  CHECK(total_variation(report.empirical_distribution, oracle::binomial_half(30)) < 0.02);
}

TEST_CASE("run reports and determinism") {
  const auto cfg = oracle::stag_hunt_defaults(UpdateMode::Counterfactual);
  const Simulator sim(cfg);
  const auto a = sim.run(25, 50000, 500, 9);
  const auto b = sim.run(25, 50000, 500, 9);
  CHECK(a.empirical_distribution == b.empirical_distribution);
  CHECK(a.final_state == b.final_state);
  CHECK(a.steps == 50000);
  CHECK(a.burn_in == 500);
  CHECK(a.seed == 9);
  CHECK(std::accumulate(a.empirical_distribution.begin(), a.empirical_distribution.end(), 0.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const auto c = sim.run(25, 50000, 500, 10);
  CHECK(c.empirical_distribution != a.empirical_distribution);
}

TEST_CASE("single recorded sample is a point mass") {
  const Simulator sim(oracle::stag_hunt_defaults());
  const auto r = sim.run(20, 101, 100, 3);
  int nonzero = 0;
  for (double f : r.empirical_distribution) nonzero += f != 0.0;
  CHECK(nonzero == 1);
  CHECK(r.empirical_distribution[r.final_state] == 1.0);
}

TEST_CASE("run argument checks") {
  const Simulator sim(oracle::stag_hunt_defaults());
  CHECK_THROWS_AS(sim.run(-1, 10, 0, 1), std::domain_error);
  CHECK_THROWS_AS(sim.run(51, 10, 0, 1), std::domain_error);
  CHECK_THROWS_AS(sim.run(10, 10, 10, 1), std::invalid_argument);
}

TEST_CASE("counterfactual run converges to the analytic stationary distribution") {
  const auto cfg = oracle::stag_hunt_defaults(UpdateMode::Counterfactual);
  const auto table = build_fitness_table(cfg);
  const auto analytic = stationary_distribution(build_kernel(cfg, table));
  const auto report = Simulator(cfg, table).run(25, 10'000'000, default_burn_in(cfg), 2024);
  CHECK(total_variation(report.empirical_distribution, analytic.s) < 0.02);
}

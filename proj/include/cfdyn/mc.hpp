#ifndef CFDYN_MC_HPP
#define CFDYN_MC_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cfdyn/fitness.hpp"

namespace cfdyn {

// 64-bit Mersenne Twister (std::mt19937_64) with its own integer/real
// mappings, so a seed replays the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on {0, ..., n-1} by rejection; n >= 1.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t x;
    do x = engine_(); while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

struct SimulationReport {
  std::vector<double> empirical_distribution;  // visit frequencies over k = 0..Z
  std::int64_t steps = 0;
  std::int64_t burn_in = 0;
  std::uint64_t seed = 0;
  int final_state = 0;
};

// Agent-level revision process. One step picks a single focal agent that
// mutates, imitates a random role model (social learning) or weighs its
// counterfactual payoff.
class Simulator {
 public:
  explicit Simulator(PopulationConfig cfg);
  Simulator(PopulationConfig cfg, const FitnessTable& table);

  const PopulationConfig& config() const { return cfg_; }

  // Returns k-1, k or k+1.
  int step(int k, Rng& rng) const;

  SimulationReport run(int initial_k, std::int64_t steps, std::int64_t burn_in, std::uint64_t seed) const;

 private:
  PopulationConfig cfg_;
  // Switching probabilities per state, precomputed from the fitness table.
  std::vector<double> sl_d_to_c_, sl_c_to_d_, ct_d_to_c_, ct_c_to_d_;
};

inline std::int64_t default_burn_in(const PopulationConfig& cfg) { return 10LL * cfg.population_size; }

}  // namespace cfdyn

#endif  // CFDYN_MC_HPP

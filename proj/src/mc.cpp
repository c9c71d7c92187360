#include "cfdyn/mc.hpp"

#include <stdexcept>
#include <string>

#include "cfdyn/dynamics.hpp"

namespace cfdyn {

Simulator::Simulator(PopulationConfig cfg) : Simulator(cfg, build_fitness_table(cfg)) {}

Simulator::Simulator(PopulationConfig cfg, const FitnessTable& table) : cfg_(std::move(cfg)) {
  cfg_.validate();
  const int Z = cfg_.population_size;
  if (table.population_size() != Z) throw std::invalid_argument("Simulator: fitness table size mismatch");
  const auto n = static_cast<std::size_t>(Z) + 1;
  sl_d_to_c_.assign(n, 0.0);
  sl_c_to_d_.assign(n, 0.0);
  ct_d_to_c_.assign(n, 0.0);
  ct_c_to_d_.assign(n, 0.0);
  for (int k = 1; k < Z; ++k) {
    const double gain = table.cooperator(k) - table.defector(k);
    sl_d_to_c_[k] = fermi(cfg_.beta_sl, gain);
    sl_c_to_d_[k] = fermi(cfg_.beta_sl, -gain);
  }
  for (int k = 0; k < Z; ++k) ct_d_to_c_[k] = fermi(cfg_.beta_ct, table.cooperator(k + 1) - table.defector(k));
  for (int k = 1; k <= Z; ++k) ct_c_to_d_[k] = fermi(cfg_.beta_ct, table.defector(k - 1) - table.cooperator(k));
}

int Simulator::step(int k, Rng& rng) const {
  const int Z = cfg_.population_size;
  const bool focal_c = rng.uniform_index(static_cast<std::uint64_t>(Z)) < static_cast<std::uint64_t>(k);
  const int flipped = focal_c ? k - 1 : k + 1;

  if (rng.uniform01() < cfg_.mutation) return flipped;

  const double w = cfg_.social_learning_weight();
  const bool social = w == 1.0 || (w > 0.0 && rng.uniform01() < w);
  double p_switch;
  if (social) {
    bool model_c;
    if (cfg_.exact_pairing) {
      const int other_c = focal_c ? k - 1 : k;
      model_c = rng.uniform_index(static_cast<std::uint64_t>(Z - 1)) < static_cast<std::uint64_t>(other_c);
    } else {
      // self-inclusive draw; picking oneself changes nothing
      model_c = rng.uniform_index(static_cast<std::uint64_t>(Z)) < static_cast<std::uint64_t>(k);
    }
    if (model_c == focal_c) return k;
    p_switch = focal_c ? sl_c_to_d_[k] : sl_d_to_c_[k];
  } else {
    p_switch = focal_c ? ct_c_to_d_[k] : ct_d_to_c_[k];
  }
  return rng.uniform01() < p_switch ? flipped : k;
}

SimulationReport Simulator::run(int initial_k, std::int64_t steps, std::int64_t burn_in,
                                std::uint64_t seed) const {
  const int Z = cfg_.population_size;
  if (initial_k < 0 || initial_k > Z)
    throw std::domain_error("simulate: initial state k=" + std::to_string(initial_k) + " outside [0, Z]");
  if (burn_in < 0 || steps <= burn_in) throw std::invalid_argument("simulate: requires steps > burn_in >= 0");

  Rng rng(seed);
  std::vector<std::int64_t> visits(static_cast<std::size_t>(Z) + 1, 0);
  int k = initial_k;
  for (std::int64_t t = 0; t < steps; ++t) {
    k = step(k, rng);
    if (t >= burn_in) ++visits[k];
  }

  SimulationReport report;
  report.steps = steps;
  report.burn_in = burn_in;
  report.seed = seed;
  report.final_state = k;
  const double samples = static_cast<double>(steps - burn_in);
  report.empirical_distribution.reserve(visits.size());
  for (auto v : visits) report.empirical_distribution.push_back(static_cast<double>(v) / samples);
  return report;
}

}  // namespace cfdyn

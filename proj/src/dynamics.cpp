#include "cfdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cfdyn {

double fermi(double beta, double fitness_gain) {
  const double x = beta * fitness_gain;
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

TransitionPair sl_transitions(int k, const FitnessTable& table, const PopulationConfig& cfg) {
  const int Z = cfg.population_size;
  if (k < 0 || k > Z) throw std::domain_error("sl_transitions: k outside [0, Z]");
  if (k == 0 || k == Z) return {};
  const double pairing = cfg.exact_pairing ? double(Z) * (Z - 1) : double(Z) * Z;
  const double meet = double(k) * (Z - k) / pairing;
  const double gain = table.cooperator(k) - table.defector(k);
  return {meet * fermi(cfg.beta_sl, gain), meet * fermi(cfg.beta_sl, -gain)};
}

TransitionPair ct_transitions(int k, const FitnessTable& table, const PopulationConfig& cfg) {
  const int Z = cfg.population_size;
  if (k < 0 || k > Z) throw std::domain_error("ct_transitions: k outside [0, Z]");
  TransitionPair t;
  // A defector compares against being the (k+1)-th cooperator, a cooperator
  // against being one of Z-k+1 defectors.
  if (k < Z) t.up = double(Z - k) / Z * fermi(cfg.beta_ct, table.cooperator(k + 1) - table.defector(k));
  if (k > 0) t.down = double(k) / Z * fermi(cfg.beta_ct, table.defector(k - 1) - table.cooperator(k));
  return t;
}

double with_mutation(double t, int k, Direction direction, const PopulationConfig& cfg) {
  const int Z = cfg.population_size;
  const double mu = cfg.mutation;
  const double switchers = direction == Direction::Up ? double(Z - k) / Z : double(k) / Z;
  return (1.0 - mu) * t + mu * switchers;
}

void TransitionKernel::validate() const {
  if (t_plus.size() != t_minus.size() || t_plus.size() < 2)
    throw std::logic_error("kernel: t_plus and t_minus must both cover k = 0..Z");
  const int Z = population_size();
  if (t_plus[Z] != 0.0 || t_minus[0] != 0.0)
    throw std::logic_error("kernel: T+(Z) and T-(0) must be zero");
  for (int k = 0; k <= Z; ++k) {
    const double up = t_plus[k], down = t_minus[k];
    if (!(up >= 0.0 && up <= 1.0 && down >= 0.0 && down <= 1.0 && up + down <= 1.0))
      throw std::logic_error("kernel: transition probabilities out of range at k=" + std::to_string(k));
    if (includes_mutation && ((k < Z && up <= 0.0) || (k > 0 && down <= 0.0)))
      throw std::logic_error("kernel: chain with mutation is not irreducible at k=" + std::to_string(k));
  }
}

namespace {

TransitionPair kernel_entry(int k, const PopulationConfig& cfg, const FitnessTable& table) {
  const double w = cfg.social_learning_weight();
  TransitionPair t;
  if (w == 1.0) {
    t = sl_transitions(k, table, cfg);
  } else if (w == 0.0) {
    t = ct_transitions(k, table, cfg);
  } else {
    const auto sl = sl_transitions(k, table, cfg);
    const auto ct = ct_transitions(k, table, cfg);
    t = {w * sl.up + (1.0 - w) * ct.up, w * sl.down + (1.0 - w) * ct.down};
  }
  return {with_mutation(t.up, k, Direction::Up, cfg), with_mutation(t.down, k, Direction::Down, cfg)};
}

TransitionKernel empty_kernel(const PopulationConfig& cfg, const FitnessTable& table) {
  cfg.validate();
  if (table.population_size() != cfg.population_size)
    throw std::invalid_argument("build_kernel: fitness table built for a different population size");
  TransitionKernel kernel;
  kernel.t_plus.assign(static_cast<std::size_t>(cfg.population_size) + 1, 0.0);
  kernel.t_minus.assign(kernel.t_plus.size(), 0.0);
  kernel.mode = cfg.mode;
  kernel.includes_mutation = cfg.mutation > 0.0;
  return kernel;
}

}  // namespace

TransitionKernel build_kernel(const PopulationConfig& cfg, const FitnessTable& table) {
  auto kernel = empty_kernel(cfg, table);
  const int Z = cfg.population_size;
#pragma omp parallel for schedule(static)
  for (int k = 0; k <= Z; ++k) {
    const auto t = kernel_entry(k, cfg, table);
    kernel.t_plus[k] = t.up;
    kernel.t_minus[k] = t.down;
  }
  return kernel;
}

namespace serial {

TransitionKernel build_kernel(const PopulationConfig& cfg, const FitnessTable& table) {
  auto kernel = empty_kernel(cfg, table);
  for (int k = 0; k <= cfg.population_size; ++k) {
    const auto t = kernel_entry(k, cfg, table);
    kernel.t_plus[k] = t.up;
    kernel.t_minus[k] = t.down;
  }
  return kernel;
}

}  // namespace serial

GradientProfile gradient(const TransitionKernel& kernel) {
  GradientProfile profile;
  profile.mode = kernel.mode;
  profile.g.resize(kernel.t_plus.size());
  std::transform(kernel.t_plus.begin(), kernel.t_plus.end(), kernel.t_minus.begin(), profile.g.begin(),
                 [](double up, double down) { return up - down; });
  return profile;
}

std::vector<FixedPoint> classify_fixed_points(const GradientProfile& profile) {
  const auto& g = profile.g;
  const int Z = static_cast<int>(g.size()) - 1;
  std::vector<FixedPoint> points;
  auto push = [&](double location, Stability kind) {
    points.push_back({location, kind, location >= 1.0 && location <= Z - 1.0});
  };
  for (int k = 0; k < Z; ++k) {
    // exact zero at an interior state, judged by its neighbours
    if (k > 0 && g[k] == 0.0) {
      if (g[k - 1] > 0.0 && g[k + 1] < 0.0) push(k, Stability::Stable);
      if (g[k - 1] < 0.0 && g[k + 1] > 0.0) push(k, Stability::Unstable);
      continue;
    }
    if (g[k] > 0.0 && g[k + 1] < 0.0) push(k + g[k] / (g[k] - g[k + 1]), Stability::Stable);
    if (g[k] < 0.0 && g[k + 1] > 0.0) push(k + g[k] / (g[k] - g[k + 1]), Stability::Unstable);
  }
  return points;
}

std::vector<FixedPoint> interior_fixed_points(const GradientProfile& profile) {
  auto points = classify_fixed_points(profile);
  std::erase_if(points, [](const FixedPoint& p) { return !p.interior; });
  return points;
}

}  // namespace cfdyn

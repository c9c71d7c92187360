#include "cfdyn/sweep.hpp"

#include <stdexcept>

namespace cfdyn {

Analysis analyze(const PopulationConfig& cfg) {
  const auto table = build_fitness_table(cfg);
  Analysis a;
  a.kernel = build_kernel(cfg, table);
  a.profile = gradient(a.kernel);
  a.fixed_points = classify_fixed_points(a.profile);
  return a;
}

CooperationSummary solve_cooperation(const PopulationConfig& cfg) {
  const auto table = build_fitness_table(cfg);
  return cooperation_index(stationary_distribution(build_kernel(cfg, table)));
}

std::vector<double> linear_grid(double start, double stop, int points) {
  if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(stop > start)) throw std::invalid_argument("grid stop must exceed start");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[i] = start + (stop - start) * i / (points - 1);
  grid.back() = stop;
  return grid;
}

namespace {

PopulationConfig mixed_at(PopulationConfig cfg, double chi) {
  cfg.mode = UpdateMode::Mixed;
  cfg.chi = chi;
  return cfg;
}

ChiSweepRow sweep_point(const PopulationConfig& base, const FitnessTable& table, double chi) {
  const auto cfg = mixed_at(base, chi);
  return {chi, cooperation_index(stationary_distribution(serial::build_kernel(cfg, table)))};
}

// Nothing may throw inside the parallel loop, so reject bad input up front.
void check_sweep(const PopulationConfig& base, std::span<const double> chis) {
  base.validate();
  if (base.mutation <= 0.0)
    throw ReducibleChainError("sweep_chi: stationary cooperation requires mu > 0 (chain is reducible)");
  for (double chi : chis)
    if (!(chi >= 0.0 && chi <= 1.0)) throw std::invalid_argument("sweep_chi: chi values must lie in [0, 1]");
}

}  // namespace

std::vector<ChiSweepRow> sweep_chi(const PopulationConfig& base, std::span<const double> chis) {
  check_sweep(base, chis);
  // chi does not enter the fitness
  const auto table = build_fitness_table(base);
  std::vector<ChiSweepRow> rows(chis.size());
  const auto n = static_cast<long>(chis.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) rows[i] = sweep_point(base, table, chis[i]);
  return rows;
}

namespace serial {

std::vector<ChiSweepRow> sweep_chi(const PopulationConfig& base, std::span<const double> chis) {
  check_sweep(base, chis);
  const auto table = serial::build_fitness_table(base);
  std::vector<ChiSweepRow> rows;
  rows.reserve(chis.size());
  for (double chi : chis) rows.push_back(sweep_point(base, table, chi));
  return rows;
}

}  // namespace serial

}  // namespace cfdyn

#ifndef CFDYN_SWEEP_HPP
#define CFDYN_SWEEP_HPP

#include <span>
#include <vector>

#include "cfdyn/markov.hpp"

namespace cfdyn {

// Full analytic chain for one parameter point.
struct Analysis {
  TransitionKernel kernel;
  GradientProfile profile;
  std::vector<FixedPoint> fixed_points;
};

Analysis analyze(const PopulationConfig& cfg);

// Stationary cooperation of one configuration (requires mu > 0).
CooperationSummary solve_cooperation(const PopulationConfig& cfg);

// `points` evenly spaced values from start to stop inclusive.
std::vector<double> linear_grid(double start, double stop, int points);

struct ChiSweepRow {
  double chi = 0.0;
  CooperationSummary summary;
};

// Mixed-mode cooperation index at each chi; points are independent and run
// on OpenMP threads, rows come back in input order.
std::vector<ChiSweepRow> sweep_chi(const PopulationConfig& base, std::span<const double> chis);

namespace serial {
std::vector<ChiSweepRow> sweep_chi(const PopulationConfig& base, std::span<const double> chis);
}  // namespace serial

}  // namespace cfdyn

#endif  // CFDYN_SWEEP_HPP

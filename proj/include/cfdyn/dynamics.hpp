#ifndef CFDYN_DYNAMICS_HPP
#define CFDYN_DYNAMICS_HPP

#include <vector>

#include "cfdyn/fitness.hpp"

namespace cfdyn {

// Probability of adopting the alternative, [1 + exp(-beta * delta)]^-1.
// Evaluated without overflow for any finite argument.
double fermi(double beta, double fitness_gain);

struct TransitionPair {
  double up = 0.0;    // k -> k+1
  double down = 0.0;  // k -> k-1
};

// Raw (mutation-free) transition probabilities at state k.
TransitionPair sl_transitions(int k, const FitnessTable& table, const PopulationConfig& cfg);
TransitionPair ct_transitions(int k, const FitnessTable& table, const PopulationConfig& cfg);

enum class Direction { Up, Down };

// Mixes a fitness-driven transition with random strategy exploration.
double with_mutation(double t, int k, Direction direction, const PopulationConfig& cfg);

// Birth-death kernel over k = 0..Z.
struct TransitionKernel {
  std::vector<double> t_plus;
  std::vector<double> t_minus;
  UpdateMode mode = UpdateMode::SocialLearning;
  bool includes_mutation = false;

  int population_size() const { return static_cast<int>(t_plus.size()) - 1; }

  // Throws std::logic_error if bounds, boundary zeros or (with mutation)
  // irreducibility are violated.
  void validate() const;
};

TransitionKernel build_kernel(const PopulationConfig& cfg, const FitnessTable& table);

namespace serial {
TransitionKernel build_kernel(const PopulationConfig& cfg, const FitnessTable& table);
}  // namespace serial

struct GradientProfile {
  std::vector<double> g;
  UpdateMode mode = UpdateMode::SocialLearning;
};

GradientProfile gradient(const TransitionKernel& kernel);

enum class Stability { Stable, Unstable };

struct FixedPoint {
  double location = 0.0;  // interpolated k
  Stability kind = Stability::Stable;
  // False for crossings inside [0,1) or (Z-1,Z]: with mutation the absorbing
  // monomorphic states turn into such near-boundary roots.
  bool interior = true;
};

// Sign changes of G between consecutive states, in increasing k.
std::vector<FixedPoint> classify_fixed_points(const GradientProfile& profile);

std::vector<FixedPoint> interior_fixed_points(const GradientProfile& profile);

}  // namespace cfdyn

#endif  // CFDYN_DYNAMICS_HPP

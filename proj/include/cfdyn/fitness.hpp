#ifndef CFDYN_FITNESS_HPP
#define CFDYN_FITNESS_HPP

#include <string_view>
#include <vector>

#include "cfdyn/game.hpp"

namespace cfdyn {

enum class UpdateMode { SocialLearning, Counterfactual, Mixed };

std::string_view to_string(UpdateMode mode);

// Accepts "sl", "ct" or "mixed"; throws std::invalid_argument otherwise.
UpdateMode parse_update_mode(std::string_view text);

struct PopulationConfig {
  int population_size = 50;  // Z
  GameSpec game;
  double mutation = 0.01;
  double beta_sl = 5.0;
  double beta_ct = 5.0;
  double chi = 1.0;  // probability that a revision uses social learning (MIXED only)
  UpdateMode mode = UpdateMode::SocialLearning;
  // Social-learning role models drawn from the other Z-1 agents instead of all Z.
  bool exact_pairing = false;

  void validate() const;

  // Weight of social learning in a revision, as implied by `mode`.
  double social_learning_weight() const;
};

enum class Focal { Cooperator, Defector };

// Probability that the N-1 co-players of a focal agent contain exactly `j`
// cooperators, sampled without replacement from the other Z-1 agents of a
// population with k cooperators.
double hypergeometric_weight(int population_size, int cooperators, int group_size, int j, Focal focal);

double fitness_defector(int cooperators, const PopulationConfig& cfg);
double fitness_cooperator(int cooperators, const PopulationConfig& cfg);

// Average fitness of both strategies over the whole state space. Cooperator
// fitness exists for k = 1..Z, defector fitness for k = 0..Z-1.
class FitnessTable {
 public:
  FitnessTable(std::vector<double> cooperator, std::vector<double> defector);

  int population_size() const { return static_cast<int>(defector_.size()); }

  // Both throw std::domain_error when the strategy is absent at state k.
  double cooperator(int k) const;
  double defector(int k) const;

  friend bool operator==(const FitnessTable&, const FitnessTable&) = default;

 private:
  std::vector<double> cooperator_;  // index k-1
  std::vector<double> defector_;    // index k
};

// OpenMP-parallel over k.
FitnessTable build_fitness_table(const PopulationConfig& cfg);

namespace serial {
// Single-threaded reference; produces bit-identical tables.
FitnessTable build_fitness_table(const PopulationConfig& cfg);
}  // namespace serial

}  // namespace cfdyn

#endif  // CFDYN_FITNESS_HPP

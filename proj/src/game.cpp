#include "cfdyn/game.hpp"

#include <stdexcept>
#include <string>

namespace cfdyn {

void GameSpec::validate() const {
  if (group_size < 2)
    throw std::invalid_argument("group size N must be >= 2 (got N=" + std::to_string(group_size) + ")");
  if (threshold < 1 || threshold > group_size)
    throw std::invalid_argument("threshold M must satisfy 1 <= M <= N (got M=" + std::to_string(threshold) +
                                ", N=" + std::to_string(group_size) + ")");
  if (!(enhancement > 0.0))
    throw std::invalid_argument("enhancement factor F must be > 0");
  if (!(cost > 0.0))
    throw std::invalid_argument("cost c must be > 0");
}

double payoff_defector(int cooperators, const GameSpec& game) {
  if (cooperators < 0 || cooperators > game.group_size)
    throw std::domain_error("payoff_defector: cooperator count " + std::to_string(cooperators) +
                            " outside [0, N]");
  // Heaviside with H(0) = 1
  if (cooperators < game.threshold) return 0.0;
  return cooperators * game.enhancement * game.cost / game.group_size;
}

double payoff_cooperator(int cooperators, const GameSpec& game) {
  if (cooperators < 1 || cooperators > game.group_size)
    throw std::domain_error("payoff_cooperator: cooperator count " + std::to_string(cooperators) +
                            " outside [1, N]");
  return payoff_defector(cooperators, game) - game.cost;
}

}  // namespace cfdyn

#ifndef CFDYN_GAME_HPP
#define CFDYN_GAME_HPP

// N-person Stag-Hunt: a group of N produces the public good only when at
// least M members cooperate. M = 1 is the plain Public Goods Game.

namespace cfdyn {

struct GameSpec {
  int group_size = 6;      // N
  int threshold = 3;       // M
  double enhancement = 5.5;  // F
  double cost = 1.0;       // c

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

// Payoff of a defector in a group with `cooperators` contributors.
double payoff_defector(int cooperators, const GameSpec& game);

// Payoff of a cooperator; `cooperators` counts the focal player, so it must be >= 1.
double payoff_cooperator(int cooperators, const GameSpec& game);

}  // namespace cfdyn

#endif  // CFDYN_GAME_HPP

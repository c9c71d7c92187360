#ifndef CFDYN_EXPERIMENT_HPP
#define CFDYN_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfdyn/fitness.hpp"

namespace cfdyn {

enum class Command { Gradient, Stationary, CoopIndex, SweepChi, Simulate };

// Bad command line or out-of-domain parameters; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --help was given; what() carries the help text (exit status 0).
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentRequest {
  Command command = Command::Gradient;
  PopulationConfig cfg;  // defaults reproduce the default stag-hunt setting
  int points = 21;       // sweep-chi grid size over [0, 1]
  std::uint64_t seed = 1;
  std::int64_t steps = 1'000'000;
  std::int64_t burn_in = 0;
  int initial_k = 0;
  std::optional<std::string> out;  // stdout when empty
};

ExperimentRequest parse_args(const std::vector<std::string>& argv);

// CSV text: a '#' line echoing every parameter, a header row, data rows.
std::string run_experiment(const ExperimentRequest& req);

// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

}  // namespace cfdyn

#endif  // CFDYN_EXPERIMENT_HPP

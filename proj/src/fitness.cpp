#include "cfdyn/fitness.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cfdyn {

std::string_view to_string(UpdateMode mode) {
  switch (mode) {
    case UpdateMode::SocialLearning: return "sl";
    case UpdateMode::Counterfactual: return "ct";
    case UpdateMode::Mixed: return "mixed";
  }
  return "?";
}

UpdateMode parse_update_mode(std::string_view text) {
  if (text == "sl") return UpdateMode::SocialLearning;
  if (text == "ct") return UpdateMode::Counterfactual;
  if (text == "mixed") return UpdateMode::Mixed;
  throw std::invalid_argument("unknown update mode '" + std::string(text) + "' (expected sl, ct or mixed)");
}

void PopulationConfig::validate() const {
  game.validate();
  if (population_size < game.group_size)
    throw std::invalid_argument("population size Z must be >= group size N (got Z=" +
                                std::to_string(population_size) + ", N=" + std::to_string(game.group_size) + ")");
  if (!(mutation >= 0.0 && mutation <= 1.0))
    throw std::invalid_argument("mutation mu must lie in [0, 1]");
  if (!(beta_sl >= 0.0) || !std::isfinite(beta_sl))
    throw std::invalid_argument("selection intensity beta_sl must be finite and >= 0");
  if (!(beta_ct >= 0.0) || !std::isfinite(beta_ct))
    throw std::invalid_argument("selection intensity beta_ct must be finite and >= 0");
  if (!(chi >= 0.0 && chi <= 1.0))
    throw std::invalid_argument("mix weight chi must lie in [0, 1]");
}

double PopulationConfig::social_learning_weight() const {
  switch (mode) {
    case UpdateMode::SocialLearning: return 1.0;
    case UpdateMode::Counterfactual: return 0.0;
    case UpdateMode::Mixed: return chi;
  }
  return chi;
}

namespace {

// log(n!) for n = 0..max, so every binomial in a table build comes from the
// same numbers as the single-state entry points.
class LogFactorials {
 public:
  explicit LogFactorials(int max) : values_(static_cast<std::size_t>(max) + 1) {
    for (int n = 0; n <= max; ++n) values_[n] = std::lgamma(n + 1.0);
  }

  // Returns false for the C(n, r) = 0 cases.
  bool log_binomial(int n, int r, double& out) const {
    if (n < 0 || r < 0 || r > n) return false;
    out = values_[n] - values_[r] - values_[n - r];
    return true;
  }

 private:
  std::vector<double> values_;
};

double weight(const LogFactorials& lf, int Z, int k, int N, int j, Focal focal) {
  // Population seen by the focal agent: Z-1 others, of which `others_c` cooperate.
  const int others_c = focal == Focal::Cooperator ? k - 1 : k;
  const int others_d = (Z - 1) - others_c;
  double a = 0, b = 0, norm = 0;
  if (!lf.log_binomial(others_c, j, a)) return 0.0;
  if (!lf.log_binomial(others_d, N - 1 - j, b)) return 0.0;
  lf.log_binomial(Z - 1, N - 1, norm);
  return std::exp(a + b - norm);
}

void check_state(int Z, int k, Focal focal, const char* who) {
  const bool ok = focal == Focal::Cooperator ? (k >= 1 && k <= Z) : (k >= 0 && k <= Z - 1);
  if (!ok)
    throw std::domain_error(std::string(who) + ": no " +
                            (focal == Focal::Cooperator ? "cooperator" : "defector") + " exists at k=" +
                            std::to_string(k) + " with Z=" + std::to_string(Z));
}

double average_defector(const LogFactorials& lf, int k, const PopulationConfig& cfg) {
  const auto& g = cfg.game;
  double f = 0.0;
  for (int j = 0; j < g.group_size; ++j)
    f += weight(lf, cfg.population_size, k, g.group_size, j, Focal::Defector) * payoff_defector(j, g);
  return f;
}

double average_cooperator(const LogFactorials& lf, int k, const PopulationConfig& cfg) {
  const auto& g = cfg.game;
  double f = 0.0;
  for (int j = 0; j < g.group_size; ++j)
    f += weight(lf, cfg.population_size, k, g.group_size, j, Focal::Cooperator) * payoff_cooperator(j + 1, g);
  return f;
}

}  // namespace

double hypergeometric_weight(int Z, int k, int N, int j, Focal focal) {
  if (N < 1 || Z < N) throw std::domain_error("hypergeometric_weight: requires 1 <= N <= Z");
  if (j < 0 || j > N - 1) throw std::domain_error("hypergeometric_weight: j outside [0, N-1]");
  check_state(Z, k, focal, "hypergeometric_weight");
  return weight(LogFactorials(Z), Z, k, N, j, focal);
}

double fitness_defector(int k, const PopulationConfig& cfg) {
  check_state(cfg.population_size, k, Focal::Defector, "fitness_defector");
  return average_defector(LogFactorials(cfg.population_size), k, cfg);
}

double fitness_cooperator(int k, const PopulationConfig& cfg) {
  check_state(cfg.population_size, k, Focal::Cooperator, "fitness_cooperator");
  return average_cooperator(LogFactorials(cfg.population_size), k, cfg);
}

FitnessTable::FitnessTable(std::vector<double> cooperator, std::vector<double> defector)
    : cooperator_(std::move(cooperator)), defector_(std::move(defector)) {
  if (cooperator_.size() != defector_.size() || cooperator_.empty())
    throw std::invalid_argument("FitnessTable: both strategies need Z entries");
  for (std::size_t i = 0; i < defector_.size(); ++i)
    if (!std::isfinite(cooperator_[i]) || !std::isfinite(defector_[i]))
      throw std::invalid_argument("FitnessTable: non-finite fitness entry");
}

double FitnessTable::cooperator(int k) const {
  if (k < 1 || k > population_size())
    throw std::domain_error("cooperator fitness undefined at k=" + std::to_string(k));
  return cooperator_[static_cast<std::size_t>(k - 1)];
}

double FitnessTable::defector(int k) const {
  if (k < 0 || k > population_size() - 1)
    throw std::domain_error("defector fitness undefined at k=" + std::to_string(k));
  return defector_[static_cast<std::size_t>(k)];
}

FitnessTable build_fitness_table(const PopulationConfig& cfg) {
  cfg.validate();
  const int Z = cfg.population_size;
  const LogFactorials lf(Z);
  std::vector<double> fc(static_cast<std::size_t>(Z)), fd(static_cast<std::size_t>(Z));
#pragma omp parallel for schedule(static)
  for (int k = 0; k < Z; ++k) {
    fc[k] = average_cooperator(lf, k + 1, cfg);
    fd[k] = average_defector(lf, k, cfg);
  }
  return FitnessTable(std::move(fc), std::move(fd));
}

namespace serial {

FitnessTable build_fitness_table(const PopulationConfig& cfg) {
  cfg.validate();
  const int Z = cfg.population_size;
  const LogFactorials lf(Z);
  std::vector<double> fc(static_cast<std::size_t>(Z)), fd(static_cast<std::size_t>(Z));
  for (int k = 0; k < Z; ++k) {
    fc[k] = average_cooperator(lf, k + 1, cfg);
    fd[k] = average_defector(lf, k, cfg);
  }
  return FitnessTable(std::move(fc), std::move(fd));
}

}  // namespace serial

}  // namespace cfdyn

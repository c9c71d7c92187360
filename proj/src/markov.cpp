#include "cfdyn/markov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cfdyn {

double TridiagonalMatrix::at(int row, int col) const {
  if (col == row) return diag[row];
  if (col == row + 1) return upper[row];
  if (col == row - 1) return lower[row];
  return 0.0;
}

TridiagonalMatrix transition_matrix(const TransitionKernel& kernel) {
  kernel.validate();
  TridiagonalMatrix m;
  m.upper = kernel.t_plus;
  m.lower = kernel.t_minus;
  m.diag.resize(m.upper.size());
  // 1 - (up + down) makes (up + down) + diag round to exactly 1.
  for (std::size_t k = 0; k < m.diag.size(); ++k) m.diag[k] = 1.0 - (m.upper[k] + m.lower[k]);
  return m;
}

StationaryDistribution stationary_distribution(const TransitionKernel& kernel) {
  if (!kernel.includes_mutation)
    throw ReducibleChainError(
        "stationary distribution requires mu > 0: without mutation the chain is reducible "
        "(k=0 and k=Z absorb); analyse absorption/fixation instead");
  kernel.validate();
  const int Z = kernel.population_size();
  std::vector<double> log_s(static_cast<std::size_t>(Z) + 1, 0.0);
  for (int k = 0; k < Z; ++k) {
    const double up = kernel.t_plus[k], down = kernel.t_minus[k + 1];
    if (!(up > 0.0 && down > 0.0))
      throw ReducibleChainError("stationary distribution: zero transition between k=" + std::to_string(k) +
                                " and k=" + std::to_string(k + 1));
    log_s[k + 1] = log_s[k] + std::log(up) - std::log(down);
  }
  const double peak = *std::max_element(log_s.begin(), log_s.end());
  StationaryDistribution dist;
  dist.s.resize(log_s.size());
  double total = 0.0;
  for (std::size_t k = 0; k < log_s.size(); ++k) total += dist.s[k] = std::exp(log_s[k] - peak);
  for (double& v : dist.s) v /= total;
  return dist;
}

CooperationSummary cooperation_index(const StationaryDistribution& dist) {
  const int Z = static_cast<int>(dist.s.size()) - 1;
  if (Z < 1) throw std::invalid_argument("cooperation_index: distribution must cover k = 0..Z with Z >= 1");
  double mean = 0.0;
  for (int k = 0; k <= Z; ++k) mean += k * dist.s[k];
  return {mean, mean / Z};
}

}  // namespace cfdyn

#ifndef CFDYN_MARKOV_HPP
#define CFDYN_MARKOV_HPP

#include <stdexcept>
#include <vector>

#include "cfdyn/dynamics.hpp"

namespace cfdyn {

// Row-stochastic tridiagonal matrix: row k has lower[k] at column k-1,
// diag[k] at column k and upper[k] at column k+1.
struct TridiagonalMatrix {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  int size() const { return static_cast<int>(diag.size()); }
  double at(int row, int col) const;
};

TridiagonalMatrix transition_matrix(const TransitionKernel& kernel);

// Raised for chains without mutation: the monomorphic states absorb and the
// stationary distribution is not unique.
class ReducibleChainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct StationaryDistribution {
  std::vector<double> s;  // s[k], k = 0..Z
};

// Detailed-balance product s_k ~ prod_{i<k} T+(i)/T-(i+1), accumulated in log space.
StationaryDistribution stationary_distribution(const TransitionKernel& kernel);

struct CooperationSummary {
  double expected_cooperators = 0.0;
  double normalized_index = 0.0;
};

CooperationSummary cooperation_index(const StationaryDistribution& dist);

}  // namespace cfdyn

#endif  // CFDYN_MARKOV_HPP

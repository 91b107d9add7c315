#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stopmax/distribution.hpp"
#include "stopmax/policy.hpp"

namespace stopmax {

// One instance of the proportion-of-the-maximum game.
struct GameSpec {
  int n = 1;        // horizon, >= 1
  double alpha = 0.5;  // proportion in (0,1)
};

// Win probability of stopping at step k on observation x with running max m
// (m includes x): cdf(x/alpha)^(n-k) if x is a candidate (x >= alpha*m),
// else 0.
double stop_value(const Distribution& d, const GameSpec& spec, int k, double x,
                  double m);

// Backward-induction solution. The state per step is the running maximum:
// cont[k-1][i] is the value of taking at least one more observation at step k
// with running max state_grid[i]; cont[n-1] is identically zero. For
// continuous families the states are quantile-spaced with linear
// interpolation in probability space.
struct AlphaDPSolution {
  GameSpec spec;
  Distribution dist;
  bool continuous = false;
  std::vector<double> state_grid;
  std::vector<double> state_u;  // cdf of state_grid (continuous only)
  std::vector<std::vector<double>> cont;
  double optimal_value = 1.0;

  double stop_value(int k, double x, double m) const;
  double continue_value(int k, double m) const;
  // Ties resolve to stop.
  bool should_stop(int k, double x, double prev_max) const;
  // Smallest first observation on which the rule stops.
  double first_step_threshold() const;
  StoppingPolicy policy() const;
};

// Exact DP over the atom values. Throws if the atom list is missing or has
// more than max_states entries.
AlphaDPSolution solve_discrete(const Distribution& d, const GameSpec& spec,
                               std::size_t max_states = 10000);

// Discretized DP for continuous families on a quantile-spaced grid (grid+1
// nodes), trapezoid quadrature. The inner loops run under OpenMP when
// parallel is set; serial and parallel paths produce identical tables.
AlphaDPSolution solve_continuous(const Distribution& d, const GameSpec& spec,
                                 int grid = 4096, bool parallel = true);

// Solves with whichever DP matches the family.
AlphaDPSolution solve(const Distribution& d, const GameSpec& spec,
                      int grid = 4096, bool parallel = true);

// Value of continuing at step k with running max m (solves, then queries).
double continue_value(const Distribution& d, const GameSpec& spec, int k,
                      double m, int grid = 4096);

// n = 2, uniform(0,1): (first-step threshold, optimal win probability)
//   threshold = alpha / (1 + alpha^2),  value = 1 - alpha^3 / (2 (alpha^2+1)).
std::pair<double, double> uniform_n2_closed_form(double alpha);

// True iff the game can be won with certainty for every n >= 2: bounded
// support [m, M] with m > 0 and either alpha^2 <= m/M or no mass in the open
// interval (m/alpha, alpha*M).
bool certainty_condition(const Distribution& d, double alpha);

// optimal_value(d, spec) - gm_value(spec.n); nonnegative up to numerical
// tolerance for every distribution.
double theorem_gap(const Distribution& d, const GameSpec& spec, int grid = 4096,
                   int gm_grid = 8192);

}  // namespace stopmax

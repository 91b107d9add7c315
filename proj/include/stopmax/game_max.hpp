#pragma once

#include <vector>

#include "stopmax/policy.hpp"

namespace stopmax {

// CDF thresholds for stopping on a running maximum, indexed by the number of
// observations still to come: b[0] = 0 (forced stop), b[1] = 1/2, ...
struct DecisionNumbers {
  int horizon = 1;
  std::vector<double> b;
};

// Indifference threshold with m observations remaining: the root in (0,1) of
//   sum_{j=1..m} (b^-j - 1)/j = 1,
// found by bisection. Throws on non-convergence within the iteration cap.
double decision_number(int m, double tol = 1e-12);

DecisionNumbers decision_numbers(int horizon, double tol = 1e-12);

// Stop at the first observation that is the running maximum with CDF value at
// least the decision number for the remaining count (ties stop); forced stop
// at the horizon. Distribution-free: the CDF is taken from the distribution
// the policy is played against.
StoppingPolicy gm_policy(int n);

// Optimal win probabilities of the stop-at-the-maximum game for horizons
// 1..max_n, by backward induction on the CDF of the running maximum
// (trapezoid quadrature, grid+1 nodes on [0,1]).
std::vector<double> gm_values(int max_n, int grid = 8192);

double gm_value(int n, int grid = 8192);

}  // namespace stopmax

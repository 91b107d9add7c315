#pragma once

#include <cstdint>

namespace stopmax {

// Probability that n i.i.d. uniforms on {1..k} have a strictly unique
// maximum: n * sum_{j=2..k} (1/k) ((j-1)/k)^(n-1)   (1 for n = 1).
double unique_max_probability(int n, int k);

// Left Riemann sum of t^(n-1) on [0,1] with k cells, last cell dropped:
// sum_{j=1..k-1} (1/k) (j/k)^(n-1). Increases toward 1/n.
double riemann_sum(int n, int k);

// Smallest k >= 1 with riemann_sum(n, k) > (1-delta)/n (strict).
int k_delta(int n, double delta);

struct GapReport {
  int n = 1;
  double alpha = 0.5;
  double delta = 0.1;
  int k_used = 1;
  double eps_used = 0.0;
  double v_alpha_est = 0.0;
  double v_alpha_stderr = 0.0;
  double v_max_est = 0.0;
  double v_max_stderr = 0.0;
  double gap_est = 0.0;  // v_alpha_est - v_max_est
  long long samples = 0;
  std::uint64_t seed = 0;
};

// Sharpness demonstration: builds the spread-out distribution with
// k = k_delta(n, delta) slabs and eps = 0.9 * max_epsilon(alpha), derives the
// alpha-game optimal policy by DP, and Monte Carlo-scores both games under
// that single policy on shared trajectories. The gap estimate stays below
// delta up to sampling error.
GapReport gap_demo(int n, double alpha, double delta, long long samples,
                   std::uint64_t seed, int grid = 4096, bool parallel = true);

}  // namespace stopmax

#include "stopmax/bound.hpp"

#include <stdexcept>

#include "stopmax/distribution.hpp"
#include "stopmax/game_alpha.hpp"
#include "stopmax/numeric.hpp"
#include "stopmax/sim.hpp"

namespace stopmax {

double unique_max_probability(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1 and k >= 1");
  if (n == 1) return 1.0;  // a single observation is its own unique maximum
  double s = 0.0;
  for (int j = 2; j <= k; ++j)
    s += pow_int(static_cast<double>(j - 1) / k, n - 1);
  return n * s / k;
}

double riemann_sum(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1 and k >= 1");
  double s = 0.0;
  for (int j = 1; j <= k - 1; ++j)
    s += pow_int(static_cast<double>(j) / k, n - 1);
  return s / k;
}

int k_delta(int n, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0,1)");
  const double target = (1.0 - delta) / n;
  for (int k = 1;; ++k)
    if (riemann_sum(n, k) > target) return k;
}

GapReport gap_demo(int n, double alpha, double delta, long long samples,
                   std::uint64_t seed, int grid, bool parallel) {
  const int k = k_delta(n, delta);
  const double eps = 0.9 * max_epsilon(alpha);
  const auto d = Distribution::spread(alpha, k, eps);
  const GameSpec spec{n, alpha};
  const auto sol = solve_continuous(d, spec, grid, parallel);
  const auto pr = simulate_paired(d, sol.policy(), alpha, samples, seed,
                                  parallel);

  GapReport r;
  r.n = n;
  r.alpha = alpha;
  r.delta = delta;
  r.k_used = k;
  r.eps_used = eps;
  r.v_alpha_est = pr.alpha_report.estimate;
  r.v_alpha_stderr = pr.alpha_report.std_error;
  r.v_max_est = pr.max_report.estimate;
  r.v_max_stderr = pr.max_report.std_error;
  r.gap_est = r.v_alpha_est - r.v_max_est;
  r.samples = samples;
  r.seed = seed;
  return r;
}

}  // namespace stopmax

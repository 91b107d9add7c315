#include "stopmax/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "stopmax/numeric.hpp"
#include "stopmax/rng.hpp"

namespace stopmax {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double binomial_stderr(double p, long long samples) {
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / samples);
}

// Runs the policy on one trajectory, returns the stopped observation.
double stopped_value(const StoppingPolicy& policy, const Distribution& d,
                     const std::vector<double>& xs) {
  const int n = policy.horizon;
  double running = kNegInf;
  for (int i = 0; i < n; ++i) {
    const double x = xs[i];
    if (i == n - 1 || policy.decide(i + 1, x, running, d)) return x;
    running = std::max(running, x);
  }
  return xs[n - 1];
}

}  // namespace

SimulationReport simulate(const Distribution& d, const StoppingPolicy& policy,
                          Game game, double alpha, long long samples,
                          std::uint64_t seed, bool parallel) {
  if (samples < 1) throw std::invalid_argument("simulate: samples >= 1");
  const int n = policy.horizon;
  long long wins = 0;

#pragma omp parallel reduction(+ : wins) if (parallel)
  {
    std::vector<double> xs(n);
#pragma omp for schedule(static)
    for (long long t = 0; t < samples; ++t) {
      for (int i = 0; i < n; ++i)
        xs[i] = d.quantile(
            counter_double(seed, static_cast<std::uint64_t>(t) * n + i));
      const double x = stopped_value(policy, d, xs);
      const double m = *std::max_element(xs.begin(), xs.end());
      const bool win =
          game == Game::Max ? x >= m : approx_geq(x, alpha * m);
      wins += win ? 1 : 0;
    }
  }

  SimulationReport r;
  r.game = game;
  r.alpha = game == Game::Alpha ? alpha : 0.0;
  r.samples = samples;
  r.seed = seed;
  r.estimate = static_cast<double>(wins) / samples;
  r.std_error = binomial_stderr(r.estimate, samples);
  return r;
}

PairedResult simulate_paired(const Distribution& d,
                             const StoppingPolicy& policy, double alpha,
                             long long samples, std::uint64_t seed,
                             bool parallel) {
  if (samples < 1) throw std::invalid_argument("simulate: samples >= 1");
  const int n = policy.horizon;
  long long wins_max = 0, wins_alpha = 0, violations = 0;

#pragma omp parallel reduction(+ : wins_max, wins_alpha, violations) \
    if (parallel)
  {
    std::vector<double> xs(n);
#pragma omp for schedule(static)
    for (long long t = 0; t < samples; ++t) {
      for (int i = 0; i < n; ++i)
        xs[i] = d.quantile(
            counter_double(seed, static_cast<std::uint64_t>(t) * n + i));
      const double x = stopped_value(policy, d, xs);
      const double m = *std::max_element(xs.begin(), xs.end());
      const bool win_max = x >= m;
      const bool win_alpha = approx_geq(x, alpha * m);
      wins_max += win_max ? 1 : 0;
      wins_alpha += win_alpha ? 1 : 0;
      violations += (win_max && !win_alpha) ? 1 : 0;
    }
  }

  PairedResult pr;
  pr.max_report = {Game::Max, 0.0,
                   static_cast<double>(wins_max) / samples,
                   binomial_stderr(static_cast<double>(wins_max) / samples,
                                   samples),
                   samples, seed};
  pr.alpha_report = {Game::Alpha, alpha,
                     static_cast<double>(wins_alpha) / samples,
                     binomial_stderr(static_cast<double>(wins_alpha) / samples,
                                     samples),
                     samples, seed};
  pr.dominance_violations = violations;
  return pr;
}

namespace {

// Win probability when committed to the observation x with running max m and
// `remaining` draws still to come, by full enumeration of the completions.
double win_if_stop(const std::vector<Atom>& atoms, double alpha, double x,
                   double m, int remaining) {
  if (remaining == 0) return approx_geq(x, alpha * m) ? 1.0 : 0.0;
  double v = 0.0;
  for (const auto& a : atoms)
    v += a.prob *
         win_if_stop(atoms, alpha, x, std::max(m, a.value), remaining - 1);
  return v;
}

// Optimal value after observing k values ending at x with running max m.
double best_from(const std::vector<Atom>& atoms, const GameSpec& spec, int k,
                 double x, double m) {
  const double stop = win_if_stop(atoms, spec.alpha, x, m, spec.n - k);
  if (k == spec.n) return stop;
  double cont = 0.0;
  for (const auto& a : atoms)
    cont +=
        a.prob * best_from(atoms, spec, k + 1, a.value, std::max(m, a.value));
  return std::max(stop, cont);
}

}  // namespace

double brute_force_optimal(const Distribution& d, const GameSpec& spec) {
  if (!d.has_atoms())
    throw std::invalid_argument("brute_force_optimal: needs atoms");
  const auto& atoms = d.atoms();
  double states = 1.0;
  for (int i = 0; i < spec.n; ++i) states *= static_cast<double>(atoms.size());
  if (states > 1e7)
    throw std::invalid_argument("brute_force_optimal: instance too large");

  double v = 0.0;
  for (const auto& a : atoms)
    v += a.prob * best_from(atoms, spec, 1, a.value, a.value);
  return v;
}

}  // namespace stopmax

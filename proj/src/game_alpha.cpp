#include "stopmax/game_alpha.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "stopmax/game_max.hpp"
#include "stopmax/numeric.hpp"

namespace stopmax {

namespace {

void check_spec(const GameSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("game spec: n must be >= 1");
  if (!(spec.alpha > 0.0 && spec.alpha < 1.0))
    throw std::invalid_argument("game spec: alpha must lie in (0,1)");
}

}  // namespace

double stop_value(const Distribution& d, const GameSpec& spec, int k, double x,
                  double m) {
  if (!approx_geq(x, spec.alpha * m)) return 0.0;
  return pow_int(d.cdf(x / spec.alpha), spec.n - k);
}

double AlphaDPSolution::stop_value(int k, double x, double m) const {
  return stopmax::stop_value(dist, spec, k, x, m);
}

double AlphaDPSolution::continue_value(int k, double m) const {
  if (k < 1 || k >= spec.n) return 0.0;
  const auto& row = cont[k - 1];
  if (!continuous) {
    // m is an observed atom; take the largest state at or below it.
    const double ms = m + 1e-9 * std::max(1.0, std::fabs(m));
    auto it = std::upper_bound(state_grid.begin(), state_grid.end(), ms);
    if (it == state_grid.begin()) return row.front();
    return row[static_cast<std::size_t>(it - state_grid.begin()) - 1];
  }
  const double u = dist.cdf(m);
  const int g = static_cast<int>(row.size()) - 1;
  const double pos = std::clamp(u * g, 0.0, static_cast<double>(g));
  const int i = std::min(g - 1, static_cast<int>(std::floor(pos)));
  const double t = pos - i;
  return (1.0 - t) * row[i] + t * row[i + 1];
}

bool AlphaDPSolution::should_stop(int k, double x, double prev_max) const {
  if (k >= spec.n) return true;
  const double m = std::max(prev_max, x);
  return approx_geq(stop_value(k, x, m), continue_value(k, m));
}

double AlphaDPSolution::first_step_threshold() const {
  if (spec.n == 1) return state_grid.front();
  const double neg_inf = -std::numeric_limits<double>::infinity();
  if (!continuous) {
    for (double v : state_grid)
      if (should_stop(1, v, neg_inf)) return v;
    return state_grid.back();
  }
  // Scan nodes, then place the crossing by linear interpolation of
  // stop - continue between the bracketing nodes.
  const auto& row = cont[0];
  double prev_f = stop_value(1, state_grid[0], state_grid[0]) - row[0];
  if (prev_f >= 0.0) return state_grid[0];
  for (std::size_t i = 1; i < state_grid.size(); ++i) {
    const double f = stop_value(1, state_grid[i], state_grid[i]) - row[i];
    if (f >= 0.0) {
      const double t = prev_f / (prev_f - f);
      return state_grid[i - 1] + t * (state_grid[i] - state_grid[i - 1]);
    }
    prev_f = f;
  }
  return state_grid.back();
}

StoppingPolicy AlphaDPSolution::policy() const {
  return {spec.n, [sol = *this](int step, double x, double prev_max,
                                const Distribution&) {
            return sol.should_stop(step, x, prev_max);
          }};
}

AlphaDPSolution solve_discrete(const Distribution& d, const GameSpec& spec,
                               std::size_t max_states) {
  check_spec(spec);
  if (!d.has_atoms())
    throw std::invalid_argument("solve_discrete: distribution has no atoms");
  const auto& atoms = d.atoms();
  if (atoms.size() > max_states)
    throw std::invalid_argument("solve_discrete: atom list exceeds state cap");

  const int n = spec.n;
  const double a = spec.alpha;
  const int s = static_cast<int>(atoms.size());

  AlphaDPSolution sol;
  sol.spec = spec;
  sol.dist = d;
  sol.continuous = false;
  sol.state_grid.resize(s);
  for (int i = 0; i < s; ++i) sol.state_grid[i] = atoms[i].value;
  sol.cont.assign(n, std::vector<double>(s, 0.0));

  std::vector<double> sv(s);  // cdf(v/alpha)^(n-k-1) per observed atom
  for (int k = n - 1; k >= 1; --k) {
    const auto& next = sol.cont[k];
    auto& cur = sol.cont[k - 1];
    const int e = n - k - 1;
    for (int j = 0; j < s; ++j)
      sv[j] = pow_int(d.cdf(atoms[j].value / a), e);
    for (int i = 0; i < s; ++i) {
      double acc = 0.0;
      for (int j = 0; j < s; ++j) {
        const int mi = std::max(i, j);
        const double stop =
            approx_geq(atoms[j].value, a * sol.state_grid[mi]) ? sv[j] : 0.0;
        acc += atoms[j].prob * std::max(stop, next[mi]);
      }
      cur[i] = acc;
    }
  }

  double value = 0.0;
  for (int j = 0; j < s; ++j) {
    const double stop = pow_int(d.cdf(atoms[j].value / a), n - 1);
    value += atoms[j].prob * std::max(stop, sol.cont[0][j]);
  }
  sol.optimal_value = value;
  return sol;
}

AlphaDPSolution solve_continuous(const Distribution& d, const GameSpec& spec,
                                 int grid, bool parallel) {
  check_spec(spec);
  if (d.has_atoms())
    throw std::invalid_argument("solve_continuous: discrete distribution");
  if (grid < 2) throw std::invalid_argument("solve_continuous: grid >= 2");

  const int n = spec.n;
  const double a = spec.alpha;
  const int g = grid;
  const double h = 1.0 / g;

  AlphaDPSolution sol;
  sol.spec = spec;
  sol.dist = d;
  sol.continuous = true;
  sol.state_u.resize(g + 1);
  sol.state_grid.resize(g + 1);
  for (int i = 0; i <= g; ++i) {
    sol.state_u[i] = static_cast<double>(i) / g;
    sol.state_grid[i] = d.quantile(sol.state_u[i]);
  }
  const auto& x = sol.state_grid;
  sol.cont.assign(n, std::vector<double>(g + 1, 0.0));

  auto weight = [g, h](int j) { return (j == 0 || j == g) ? 0.5 * h : h; };

  std::vector<double> sv(g + 1);
  for (int k = n - 1; k >= 1; --k) {
    const auto& next = sol.cont[k];
    auto& cur = sol.cont[k - 1];
    const int e = n - k - 1;
    for (int j = 0; j <= g; ++j) sv[j] = pow_int(d.cdf(x[j] / a), e);
#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i <= g; ++i) {
      double acc = 0.0;
      for (int j = 0; j <= g; ++j) {
        const int mi = std::max(i, j);
        const double stop = approx_geq(x[j], a * x[mi]) ? sv[j] : 0.0;
        acc += weight(j) * std::max(stop, next[mi]);
      }
      cur[i] = acc;
    }
  }

  double value = 0.0;
  for (int j = 0; j <= g; ++j) {
    const double stop = pow_int(d.cdf(x[j] / a), n - 1);
    value += weight(j) * std::max(stop, sol.cont[0][j]);
  }
  sol.optimal_value = value;
  return sol;
}

AlphaDPSolution solve(const Distribution& d, const GameSpec& spec, int grid,
                      bool parallel) {
  return d.has_atoms() ? solve_discrete(d, spec)
                       : solve_continuous(d, spec, grid, parallel);
}

double continue_value(const Distribution& d, const GameSpec& spec, int k,
                      double m, int grid) {
  check_spec(spec);
  if (k < 1 || k >= spec.n) return 0.0;
  return solve(d, spec, grid).continue_value(k, m);
}

std::pair<double, double> uniform_n2_closed_form(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0,1)");
  const double a2 = alpha * alpha;
  return {alpha / (1.0 + a2), 1.0 - alpha * a2 / (2.0 * (a2 + 1.0))};
}

bool certainty_condition(const Distribution& d, double alpha) {
  const double m = d.support_min();
  const double big_m = d.support_max();
  if (!(m > 0.0) || !std::isfinite(big_m)) return false;
  if (alpha * alpha <= m / big_m + 1e-12) return true;
  return d.mass_between(m / alpha, alpha * big_m) <= 1e-15;
}

double theorem_gap(const Distribution& d, const GameSpec& spec, int grid,
                   int gm_grid) {
  return solve(d, spec, grid).optimal_value - gm_value(spec.n, gm_grid);
}

}  // namespace stopmax

#include "stopmax/game_max.hpp"

#include <cmath>
#include <stdexcept>

#include "stopmax/distribution.hpp"

namespace stopmax {

double decision_number(int m, double tol) {
  if (m < 0) throw std::invalid_argument("decision_number: m must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("decision_number: tol must be > 0");
  if (m == 0) return 0.0;

  // g is strictly decreasing on (0,1): +inf at 0+, -1 at 1.
  auto g = [m](double b) {
    double s = 0.0, binv = 1.0;
    for (int j = 1; j <= m; ++j) {
      binv /= b;
      s += (binv - 1.0) / j;
    }
    return s - 1.0;
  };

  double lo = 1e-9, hi = 1.0;
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  if (hi - lo > tol)
    throw std::runtime_error("decision_number: bisection did not converge");
  return 0.5 * (lo + hi);
}

DecisionNumbers decision_numbers(int horizon, double tol) {
  if (horizon < 1) throw std::invalid_argument("decision_numbers: horizon >= 1");
  DecisionNumbers dn;
  dn.horizon = horizon;
  dn.b.resize(horizon);
  for (int m = 0; m < horizon; ++m) dn.b[m] = decision_number(m, tol);
  return dn;
}

StoppingPolicy gm_policy(int n) {
  auto dn = decision_numbers(n);
  return {n, [dn = std::move(dn)](int step, double x, double prev_max,
                                  const Distribution& d) {
            if (!(x >= prev_max)) return false;  // not the running maximum
            return d.cdf(x) >= dn.b[dn.horizon - step];
          }};
}

std::vector<double> gm_values(int max_n, int grid) {
  if (max_n < 1) throw std::invalid_argument("gm_values: max_n >= 1");
  if (grid < 2) throw std::invalid_argument("gm_values: grid >= 2");

  // Work on the probability-integral transform: state u = cdf of the running
  // maximum. C(u) is the optimal continuation value with m draws remaining;
  // the next draw y is uniform, a new maximum (y > u) may be taken for
  // y^(m-1) or continued from.
  const int g = grid;
  const double h = 1.0 / g;
  std::vector<double> u(g + 1), c(g + 1, 0.0), integrand(g + 1), suffix(g + 1),
      values;
  values.reserve(max_n);
  for (int i = 0; i <= g; ++i) u[i] = static_cast<double>(i) / g;

  for (int m = 1; m <= max_n; ++m) {
    for (int i = 0; i <= g; ++i)
      integrand[i] = std::max(std::pow(u[i], m - 1), c[i]);
    suffix[g] = 0.0;
    for (int i = g - 1; i >= 0; --i)
      suffix[i] = suffix[i + 1] + 0.5 * h * (integrand[i] + integrand[i + 1]);
    for (int i = 0; i <= g; ++i) c[i] = u[i] * c[i] + suffix[i];
    values.push_back(c[0]);  // no observations yet: u = 0
  }
  return values;
}

double gm_value(int n, int grid) { return gm_values(n, grid).back(); }

}  // namespace stopmax

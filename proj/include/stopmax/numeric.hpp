#pragma once

#include <algorithm>
#include <cmath>

namespace stopmax {

// Comparison slack for game arithmetic. Atom/alpha products like 0.4*5 miss
// the exact rational boundary by a few ulp; the slack restores the intended
// tie semantics. It is relative, so it stays harmless for the spread family
// whose values span many orders of magnitude.
inline double rel_slack(double a, double b) {
  return 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline bool approx_geq(double a, double b) { return a >= b - rel_slack(a, b); }

// Strict membership in the open interval (lo, hi), boundary-snapped.
inline bool strictly_inside(double v, double lo, double hi) {
  return v > lo + rel_slack(v, lo) && v < hi - rel_slack(v, hi);
}

inline double pow_int(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace stopmax

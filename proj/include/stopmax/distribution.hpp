#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stopmax/rng.hpp"

namespace stopmax {

struct Atom {
  double value;
  double prob;
};

// Smallest integer N with alpha > 1/N (strict).
int n_alpha(double alpha);

// Strict upper bound for the slab half-width of the spread-out family:
// with eps below this bound, every value in slab j stays strictly below
// alpha times every value in slab j+1.
double max_epsilon(double alpha);

// Immutable distribution over the nonnegative reals. Three families:
// continuous uniform, finite-support (atoms), and the geometrically
// spread-out slab family. Safe for concurrent reads; sampling state is
// owned by the caller.
class Distribution {
 public:
  enum class Kind { Uniform, Discrete, Spread };

  // Default-constructs as uniform(0,1).
  Distribution() = default;

  static Distribution uniform(double lo, double hi);
  static Distribution discrete(std::vector<Atom> atoms);
  static Distribution duniform(long lo, long hi);
  // eps omitted -> 0.9 * max_epsilon(alpha).
  static Distribution spread(double alpha, int k,
                             std::optional<double> eps = std::nullopt);

  Kind kind() const { return kind_; }
  bool has_atoms() const { return kind_ == Kind::Discrete; }
  double support_min() const { return support_min_; }
  double support_max() const { return support_max_; }
  const std::vector<Atom>& atoms() const;

  // P(X <= x); clamps to 0/1 outside the support.
  double cdf(double x) const;
  // Generalized inverse: min{x : cdf(x) >= p}; quantile(0) = support_min.
  double quantile(double p) const;
  // Inverse-transform draw; atoms are produced exactly.
  double sample(Rng& rng) const { return quantile(rng.next()); }
  // Mass of the open interval (lo, hi).
  double mass_between(double lo, double hi) const;

  // Spread-family accessors.
  double spread_alpha() const;
  int spread_k() const;
  double spread_eps() const;
  double spread_base() const;
  // 1-based slab containing x, or nullopt in a gap.
  std::optional<int> slab_index(double x) const;

 private:
  Kind kind_ = Kind::Uniform;
  double support_min_ = 0.0;
  double support_max_ = 1.0;
  // uniform
  double lo_ = 0.0, hi_ = 1.0;
  // discrete
  std::vector<Atom> atoms_;
  std::vector<double> cum_;
  // spread
  double alpha_ = 0.0;
  int k_ = 0;
  double eps_ = 0.0;
  double base_ = 0.0;
  std::vector<double> centers_;
};

// Parses the ASCII spec grammar:
//   uniform:A,B | duniform:LO..HI | cat:v1=p1,v2=p2,... |
//   spread:alpha=A,k=K[,eps=E]
// Throws std::invalid_argument on malformed input.
Distribution parse_dist_spec(const std::string& spec);

}  // namespace stopmax

#include "stopmax/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stopmax/numeric.hpp"

namespace stopmax {

namespace {

[[noreturn]] void bad_spec(const std::string& msg) {
  throw std::invalid_argument("distribution spec: " + msg);
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0,1)");
}

}  // namespace

int n_alpha(double alpha) {
  require_alpha(alpha);
  int n = static_cast<int>(std::floor(1.0 / alpha)) + 1;
  // Repair floating-point drift of 1/alpha around integer values.
  while (n > 2 && alpha > 1.0 / (n - 1)) --n;
  while (!(alpha > 1.0 / n)) ++n;
  return n;
}

double max_epsilon(double alpha) {
  const int n = n_alpha(alpha);
  // Binding case is the gap between the first two slabs.
  return (n + 1) * (alpha * n + alpha - 1.0) / (alpha + 1.0);
}

Distribution Distribution::uniform(double lo, double hi) {
  if (!(lo >= 0.0)) throw std::invalid_argument("uniform: negative support");
  if (!(lo < hi)) throw std::invalid_argument("uniform: requires lo < hi");
  Distribution d;
  d.kind_ = Kind::Uniform;
  d.lo_ = lo;
  d.hi_ = hi;
  d.support_min_ = lo;
  d.support_max_ = hi;
  return d;
}

Distribution Distribution::discrete(std::vector<Atom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("discrete: no atoms");
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  double sum = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!(atoms[i].value >= 0.0))
      throw std::invalid_argument("discrete: negative support value");
    if (!(atoms[i].prob > 0.0))
      throw std::invalid_argument("discrete: atom probability must be > 0");
    if (i > 0 && atoms[i].value == atoms[i - 1].value)
      throw std::invalid_argument("discrete: duplicate atom value");
    sum += atoms[i].prob;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("discrete: probabilities do not sum to 1");
  for (auto& a : atoms) a.prob /= sum;

  Distribution d;
  d.kind_ = Kind::Discrete;
  d.atoms_ = std::move(atoms);
  d.cum_.resize(d.atoms_.size());
  double c = 0.0;
  for (std::size_t i = 0; i < d.atoms_.size(); ++i) {
    c += d.atoms_[i].prob;
    d.cum_[i] = c;
  }
  d.cum_.back() = 1.0;
  d.support_min_ = d.atoms_.front().value;
  d.support_max_ = d.atoms_.back().value;
  return d;
}

Distribution Distribution::duniform(long lo, long hi) {
  if (lo < 0) throw std::invalid_argument("duniform: negative support");
  if (lo > hi) throw std::invalid_argument("duniform: requires lo <= hi");
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(hi - lo + 1));
  const double p = 1.0 / static_cast<double>(hi - lo + 1);
  for (long v = lo; v <= hi; ++v)
    atoms.push_back({static_cast<double>(v), p});
  return discrete(std::move(atoms));
}

Distribution Distribution::spread(double alpha, int k,
                                  std::optional<double> eps) {
  require_alpha(alpha);
  if (k < 1) throw std::invalid_argument("spread: k must be >= 1");
  const double bound = max_epsilon(alpha);
  const double e = eps.value_or(0.9 * bound);
  if (!(e > 0.0 && e < bound))
    throw std::invalid_argument("spread: eps must lie in (0, max_epsilon)");

  Distribution d;
  d.kind_ = Kind::Spread;
  d.alpha_ = alpha;
  d.k_ = k;
  d.eps_ = e;
  d.base_ = static_cast<double>(n_alpha(alpha) + 1);
  d.centers_.resize(k);
  double c = 1.0;
  for (int j = 0; j < k; ++j) {
    c *= d.base_;
    d.centers_[j] = c;
  }
  d.support_min_ = d.centers_.front() - e;
  d.support_max_ = d.centers_.back() + e;
  return d;
}

const std::vector<Atom>& Distribution::atoms() const {
  if (kind_ != Kind::Discrete)
    throw std::logic_error("atoms() on a non-discrete family");
  return atoms_;
}

double Distribution::cdf(double x) const {
  switch (kind_) {
    case Kind::Uniform: {
      const double t = (x - lo_) / (hi_ - lo_);
      return std::clamp(t, 0.0, 1.0);
    }
    case Kind::Discrete: {
      // Atoms within relative slack of x count as <= x (exact rational
      // boundaries like 5 = 2/0.4 land a few ulp off).
      const double xs = x + 1e-9 * std::max(1.0, std::fabs(x));
      auto it = std::upper_bound(
          atoms_.begin(), atoms_.end(), xs,
          [](double v, const Atom& a) { return v < a.value; });
      const auto i = static_cast<std::size_t>(it - atoms_.begin());
      return i == 0 ? 0.0 : cum_[i - 1];
    }
    case Kind::Spread: {
      if (x < support_min_) return 0.0;
      if (x >= support_max_) return 1.0;
      // Last slab whose left edge is at or below x.
      auto it = std::upper_bound(centers_.begin(), centers_.end(), x + eps_);
      const int j = static_cast<int>(it - centers_.begin());  // 1-based count
      if (j == 0) return 0.0;
      const double left = centers_[j - 1] - eps_;
      const double within = std::min(1.0, (x - left) / (2.0 * eps_));
      return (static_cast<double>(j - 1) + within) / k_;
    }
  }
  return 0.0;
}

double Distribution::quantile(double p) const {
  if (p <= 0.0) return support_min_;
  if (p >= 1.0) return support_max_;
  switch (kind_) {
    case Kind::Uniform:
      return lo_ + (hi_ - lo_) * p;
    case Kind::Discrete: {
      auto it = std::lower_bound(cum_.begin(), cum_.end(), p - 1e-12);
      return atoms_[static_cast<std::size_t>(it - cum_.begin())].value;
    }
    case Kind::Spread: {
      const double scaled = p * k_;
      int j = static_cast<int>(std::floor(scaled));
      // cdf first reaches j/k at the top of slab j; the generalized inverse
      // must not jump across the gap.
      if (j >= 1 && scaled == static_cast<double>(j))
        return centers_[j - 1] + eps_;
      j = std::min(k_ - 1, j);
      const double t = scaled - j;  // position within slab, in [0,1)
      return centers_[j] - eps_ + 2.0 * eps_ * t;
    }
  }
  return support_min_;
}

double Distribution::mass_between(double lo, double hi) const {
  if (!(lo < hi)) return 0.0;
  if (kind_ == Kind::Discrete) {
    double m = 0.0;
    for (const auto& a : atoms_)
      if (strictly_inside(a.value, lo, hi)) m += a.prob;
    return m;
  }
  return std::max(0.0, cdf(hi) - cdf(lo));
}

double Distribution::spread_alpha() const {
  if (kind_ != Kind::Spread) throw std::logic_error("not a spread family");
  return alpha_;
}
int Distribution::spread_k() const {
  if (kind_ != Kind::Spread) throw std::logic_error("not a spread family");
  return k_;
}
double Distribution::spread_eps() const {
  if (kind_ != Kind::Spread) throw std::logic_error("not a spread family");
  return eps_;
}
double Distribution::spread_base() const {
  if (kind_ != Kind::Spread) throw std::logic_error("not a spread family");
  return base_;
}

std::optional<int> Distribution::slab_index(double x) const {
  if (kind_ != Kind::Spread) throw std::logic_error("not a spread family");
  auto it = std::upper_bound(centers_.begin(), centers_.end(), x + eps_);
  const int j = static_cast<int>(it - centers_.begin());
  if (j == 0 || x > centers_[j - 1] + eps_) return std::nullopt;
  return j;
}

namespace {

double parse_number(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    bad_spec("bad " + what + " '" + s + "'");
  }
  if (pos != s.size()) bad_spec("trailing characters in " + what + " '" + s + "'");
  return v;
}

long parse_long(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    bad_spec("bad " + what + " '" + s + "'");
  }
  if (pos != s.size()) bad_spec("trailing characters in " + what + " '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Distribution parse_dist_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) bad_spec("missing ':' in '" + spec + "'");
  const std::string family = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);

  if (family == "uniform") {
    const auto parts = split(body, ',');
    if (parts.size() != 2) bad_spec("uniform needs 'A,B'");
    return Distribution::uniform(parse_number(parts[0], "uniform bound"),
                                 parse_number(parts[1], "uniform bound"));
  }
  if (family == "duniform") {
    const std::size_t dots = body.find("..");
    if (dots == std::string::npos) bad_spec("duniform needs 'LO..HI'");
    return Distribution::duniform(
        parse_long(body.substr(0, dots), "duniform bound"),
        parse_long(body.substr(dots + 2), "duniform bound"));
  }
  if (family == "cat") {
    std::vector<Atom> atoms;
    for (const auto& part : split(body, ',')) {
      const std::size_t eq = part.find('=');
      if (eq == std::string::npos) bad_spec("cat entries are 'value=prob'");
      atoms.push_back({parse_number(part.substr(0, eq), "cat value"),
                       parse_number(part.substr(eq + 1), "cat probability")});
    }
    return Distribution::discrete(std::move(atoms));
  }
  if (family == "spread") {
    std::optional<double> alpha, eps;
    std::optional<int> k;
    for (const auto& part : split(body, ',')) {
      const std::size_t eq = part.find('=');
      if (eq == std::string::npos) bad_spec("spread entries are 'key=value'");
      const std::string key = part.substr(0, eq);
      const std::string val = part.substr(eq + 1);
      if (key == "alpha")
        alpha = parse_number(val, "spread alpha");
      else if (key == "k")
        k = static_cast<int>(parse_long(val, "spread k"));
      else if (key == "eps")
        eps = parse_number(val, "spread eps");
      else
        bad_spec("unknown spread key '" + key + "'");
    }
    if (!alpha || !k) bad_spec("spread needs alpha=A,k=K");
    return Distribution::spread(*alpha, *k, eps);
  }
  bad_spec("unknown family '" + family + "'");
}

}  // namespace stopmax

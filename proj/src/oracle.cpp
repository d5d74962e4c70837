#include "disperse/oracle.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace disperse {
namespace {

// Bounded draws are raw mt19937_64 outputs reduced modulo the range size;
// the bias is irrelevant for test corpora and the derivation is portable.
class DrawSource {
public:
  explicit DrawSource(std::uint64_t seed) : rng_(seed) {}

  long below_inclusive(long bound) {
    return static_cast<long>(rng_() % (static_cast<std::uint64_t>(bound) + 1));
  }

private:
  std::mt19937_64 rng_;
};

long ceil_to_units(const Rational& r, long units_per_one) {
  mpz_class num = r.numerator() * units_per_one;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.denominator().get_mpz_t());
  if (!q.fits_slong_p()) throw ValidationError("unsatisfiable generator config: min_gap too large");
  return q.get_si();
}

Rational units_to_coord(long units, long units_per_one) {
  return Rational(units, units_per_one);
}

}  // namespace

Instance gen_instance(const GeneratorConfig& config) {
  if (config.n < 1) throw ValidationError("unsatisfiable generator config: n must be at least 1");
  if (config.coordinate_max < 0 ||
      (config.kind == GeneratorConfig::Kind::cycle && config.coordinate_max == 0))
    throw ValidationError("unsatisfiable generator config: coordinate range must be positive");
  if (config.min_gap.sign() < 0)
    throw ValidationError("unsatisfiable generator config: min_gap must be nonnegative");

  const long n = config.n;
  const long units_per_one = config.rational_coords ? 100 : 1;
  const long range_units = config.coordinate_max * units_per_one;
  const long gap_units = ceil_to_units(config.min_gap, units_per_one);
  const long intra = config.allow_degenerate ? 0 : 1;
  long inter = std::max(gap_units, config.allow_touching ? 0L : 1L);

  const bool is_cycle = config.kind == GeneratorConfig::Kind::cycle;
  // Equal starts are invalid on a cycle, so a degenerate interval may not
  // also touch its successor there.
  if (is_cycle && intra == 0) inter = std::max(inter, 1L);

  // Fixed offsets consume the mandatory spacing; the rest is drawn uniformly.
  const long wrap = is_cycle ? std::max(inter, 1L) : 0;
  const long base = n * intra + (n - 1) * inter + wrap;
  const long slack = range_units - base;
  if (slack < 0)
    throw ValidationError("unsatisfiable generator config: " + std::to_string(config.n) +
                          " intervals with the requested gaps do not fit in the coordinate range");

  DrawSource draws(config.seed);
  std::vector<long> v(static_cast<std::size_t>(2 * n));
  for (auto& x : v) x = draws.below_inclusive(slack);
  std::sort(v.begin(), v.end());

  std::vector<long> endpoint(v.size());
  for (long i = 0; i < n; ++i) {
    const long shift = i * (intra + inter);
    endpoint[2 * i] = v[2 * i] + shift;
    endpoint[2 * i + 1] = v[2 * i + 1] + shift + intra;
  }

  if (!is_cycle) {
    std::vector<Interval> iv;
    iv.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
      iv.push_back({units_to_coord(endpoint[2 * i], units_per_one),
                    units_to_coord(endpoint[2 * i + 1], units_per_one)});
    return LineInstance(std::move(iv));
  }
  std::vector<CycleInterval> iv;
  iv.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    iv.push_back({units_to_coord(endpoint[2 * i], units_per_one),
                  units_to_coord(endpoint[2 * i + 1] - endpoint[2 * i], units_per_one)});
  return CycleInstance(Rational(config.coordinate_max), std::move(iv));
}

ExtendedValue oracle_line_optimum(const LineInstance& instance) {
  const int n = instance.size();
  if (n == 1) return ExtendedValue::unbounded();
  std::optional<Rational> best;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Rational cand = (instance.right(j) - instance.left(i)) / (j - i);
      if (!best || cand < *best) best = std::move(cand);
    }
  }
  return *std::move(best);
}

std::pair<bool, std::vector<Rational>> feasible_line(const LineInstance& instance,
                                                     const Rational& d) {
  if (d.sign() < 0) throw ValidationError("feasibility is defined for d >= 0");
  const int n = instance.size();
  std::vector<Rational> q;
  q.reserve(static_cast<std::size_t>(n));
  q.push_back(instance.left(1));
  for (int i = 2; i <= n; ++i) {
    Rational next = q.back() + d;
    if (next < instance.left(i)) next = instance.left(i);
    if (next > instance.right(i)) return {false, {}};
    q.push_back(std::move(next));
  }
  return {true, std::move(q)};
}

ExtendedValue oracle_line_via_candidates(const LineInstance& instance) {
  const int n = instance.size();
  if (n < 2) throw ValidationError("candidate oracle requires n >= 2");
  std::vector<Rational> candidates;
  candidates.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      candidates.push_back((instance.right(j) - instance.left(i)) / (j - i));
  std::sort(candidates.begin(), candidates.end(),
            [](const Rational& a, const Rational& b) { return b < a; });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Rational& c : candidates)
    if (feasible_line(instance, c).first) return c;
  // Unreachable: the smallest candidate equals the optimum and is feasible.
  throw std::logic_error("no feasible candidate value");
}

ExtendedValue oracle_cycle_optimum(const CycleInstance& instance) {
  const int n = instance.size();
  if (n == 1) return ExtendedValue::unbounded();
  const Rational& circ = instance.circumference();

  // Clockwise coordinates measured from l_1; local arithmetic only, no
  // solver machinery involved.
  std::vector<Rational> lefts(static_cast<std::size_t>(n)), rights(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    lefts[i - 1] = instance.start(i) - instance.start(1);
    rights[i - 1] = lefts[i - 1] + instance.length(i);
  }

  Rational best = circ / n;
  for (int i = 1; i <= n; ++i) {
    for (int m = 1; m <= n - 1; ++m) {
      const int j = (i - 1 + m) % n + 1;
      Rational arc = j > i ? rights[j - 1] - lefts[i - 1] : rights[j - 1] + circ - lefts[i - 1];
      Rational cand = std::move(arc) / m;
      if (cand < best) best = std::move(cand);
    }
  }
  return best;
}

}  // namespace disperse

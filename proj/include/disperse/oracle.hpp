#pragma once

#include "disperse/instance.hpp"
#include "disperse/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace disperse {

/// Deterministic instance generator. The PRNG is std::mt19937_64 seeded with
/// `seed`; every bounded draw takes the next raw 64-bit output modulo the
/// range size, so a (seed, config) pair reproduces the same instance
/// byte-for-byte on any platform.
struct GeneratorConfig {
  enum class Kind { line, cycle };

  std::uint64_t seed = 0;
  int n = 1;
  /// Line: largest allowed coordinate. Cycle: the circumference.
  long coordinate_max = 1000;
  /// Minimum gap between consecutive intervals (and across the cycle wrap),
  /// rounded up to the coordinate grid.
  Rational min_gap = Rational(0);
  bool allow_touching = false;
  bool allow_degenerate = false;
  /// Draw coordinates in hundredths instead of integers.
  bool rational_coords = false;
  Kind kind = Kind::line;
};

/// Throws ValidationError when the configuration cannot be satisfied
/// (n < 1, or the coordinate range cannot hold n intervals with the
/// requested gaps).
Instance gen_instance(const GeneratorConfig& config);

/// min over all i < j of (r_j - l_i) / (j - i), the exact optimum: each value
/// bounds every placement from above (j - i gaps must fit between l_i and
/// r_j), and the scan's certificate attains one of them. Unbounded for n = 1.
/// O(n^2).
ExtendedValue oracle_line_optimum(const LineInstance& instance);

/// Leftmost-greedy decision procedure: q_1 = l_1, q_i = max(l_i, q_{i-1} + d),
/// feasible iff every q_i <= r_i. Returns the witness when feasible.
/// Monotone in d.
std::pair<bool, std::vector<Rational>> feasible_line(const LineInstance& instance,
                                                     const Rational& d);

/// Independent route to the same optimum: enumerates every candidate value
/// (r_j - l_i) / (j - i) and returns the largest one the greedy decision
/// procedure accepts. Requires n >= 2.
ExtendedValue oracle_line_via_candidates(const LineInstance& instance);

/// min of circumference / n and every window bound arc(l_i -> r_j) / m over
/// clockwise step counts m in [1, n-1]. Unbounded for n = 1. O(n^2).
ExtendedValue oracle_cycle_optimum(const CycleInstance& instance);

}  // namespace disperse

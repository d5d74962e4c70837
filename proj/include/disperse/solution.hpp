#pragma once

#include "disperse/rational.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace disperse {

/// Work counters for one solver run. Every interval is pushed onto the
/// critical list exactly once and popped at most once, and every point is
/// finalized exactly once, so total() <= 3n (the contract allows 6n).
struct SolverStats {
  std::uint64_t intervals = 0;
  std::uint64_t pushes = 0;
  std::uint64_t pops = 0;
  std::uint64_t finalizations = 0;
  std::uint64_t total() const { return pushes + pops + finalizations; }
};

/// A pair (i*, j*) certifying d = (r_{j*} - l_{i*}) / (j* - i*): the j* - i*
/// gaps between points of intervals i*..j* fit inside [l_{i*}, r_{j*}], so no
/// placement can beat d, and a feasible solution attaining it is optimal.
struct LinePairCert {
  int i_star = 0;
  int j_star = 0;
  Rational value;
};

/// Cyclic analogue of the pair certificate: m clockwise steps from the point
/// in interval i to the point in interval j fit inside the clockwise arc from
/// l_i to r_j, so d = arc / m bounds every placement.
struct CycleWindowCert {
  int i = 0;
  int j = 0;
  int m = 0;
  Rational value;
};

/// n points on a cycle of circumference C cannot be pairwise farther apart
/// than C / n; a solution attaining that spacing is optimal.
struct CycleUniformCert {
  Rational value;
};

/// Single interval: no pairwise distance exists, the objective is unbounded.
struct UnboundedCert {};

/// An externally imposed cap on the objective that the scan never beat.
/// Certifies d_min = min(bound, optimum), not optimality by itself.
struct InitialBoundCert {
  Rational value;
};

using Certificate =
    std::variant<UnboundedCert, LinePairCert, CycleWindowCert, CycleUniformCert, InitialBoundCert>;

enum class ProblemKind { line, cycle };

struct Solution {
  ProblemKind kind = ProblemKind::line;
  std::vector<Rational> points;  // one per interval, in interval order
  ExtendedValue d_min = ExtendedValue::unbounded();
  Certificate certificate = UnboundedCert{};
  SolverStats stats;
};

}  // namespace disperse

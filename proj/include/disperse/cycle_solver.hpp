#pragma once

#include "disperse/instance.hpp"
#include "disperse/line_solver.hpp"
#include "disperse/solution.hpp"

#include <stdexcept>
#include <vector>

namespace disperse {

/// A postcondition of the cycle reduction failed to hold; this indicates an
/// implementation bug, never bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// The cycle's intervals copied twice onto a line: the first copy rotated so
/// l_1 sits at coordinate 0, the second copy shifted by the circumference.
struct DoubledInstance {
  LineInstance line;  // 2n intervals
  Rational origin;    // cycle coordinate of l_1, undone by map_back
  int n = 0;          // original interval count
};

DoubledInstance double_instance(const CycleInstance& cycle);

/// Maps line points p'_k .. p'_{k+n-1} back onto the cycle: interval i takes
/// the offset of its first-copy point for i >= k and of its second-copy point
/// for i < k. Requires p'_k to sit on its left endpoint.
std::vector<Rational> map_back(const std::vector<Rational>& line_points, int k,
                               const CycleInstance& cycle, const DoubledInstance& doubled);

/// Solves the doubled line instance with initial bound circumference / n and
/// extracts the optimal cycle placement from a window of n consecutive
/// points. Options may request instrumentation; the initial bound is fixed
/// by the reduction and must be left empty.
Solution solve_cycle(const CycleInstance& cycle, const SolveOptions& options = {});

}  // namespace disperse

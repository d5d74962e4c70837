#pragma once

#include "disperse/instance.hpp"
#include "disperse/solution.hpp"

#include <string>
#include <vector>

namespace disperse {

/// Outcome of checking a solution against its instance with exact arithmetic.
/// feasible: every point inside its interval and every adjacent (cyclic) gap
/// at least d_min. certificate_tight: the certificate value recomputed from
/// the instance equals d_min. proves_optimality is false only for
/// initial-bound certificates, which witness a cap rather than an optimum.
struct VerificationReport {
  bool feasible = false;
  bool certificate_tight = false;
  bool proves_optimality = false;
  bool optimal = false;  // feasible && certificate_tight && proves_optimality
  std::vector<std::string> notes;

  /// The accept criterion for the verify command: feasible and tight.
  bool accepted() const { return feasible && certificate_tight; }
};

/// Throws ValidationError on a dimension or kind mismatch between the
/// instance and the solution; everything else is report content.
VerificationReport verify_solution(const Instance& instance, const Solution& solution);

}  // namespace disperse

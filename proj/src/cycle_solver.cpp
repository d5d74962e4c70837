#include "disperse/cycle_solver.hpp"

#include <utility>

namespace disperse {

DoubledInstance double_instance(const CycleInstance& cycle) {
  const int n = cycle.size();
  const Rational& circ = cycle.circumference();
  const Rational origin = cycle.start(1);

  std::vector<Interval> iv;
  iv.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    Rational l = cycle.start(i) - origin;  // clockwise arc from l_1 to l_i
    Rational r = l + cycle.length(i);
    iv.push_back({std::move(l), std::move(r)});
  }
  for (int i = 0; i < n; ++i) iv.push_back({iv[i].left + circ, iv[i].right + circ});
  return DoubledInstance{LineInstance(std::move(iv)), origin, n};
}

std::vector<Rational> map_back(const std::vector<Rational>& line_points, int k,
                               const CycleInstance& cycle, const DoubledInstance& doubled) {
  const int n = doubled.n;
  const Rational& circ = cycle.circumference();
  if (!(line_points[k - 1] == doubled.line.left(k)))
    throw InternalError("map_back requires p'_k on its left endpoint");

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int src = i >= k ? i : i + n;
    Rational coord = cycle.start(i) + (line_points[src - 1] - doubled.line.left(src));
    if (coord >= circ) coord -= circ;  // offsets stay below |I_i| < circ, one wrap suffices
    out.push_back(std::move(coord));
  }
  return out;
}

Solution solve_cycle(const CycleInstance& cycle, const SolveOptions& options) {
  if (options.initial_bound)
    throw ValidationError("the cycle reduction fixes its own initial bound");
  const int n = cycle.size();
  const Rational& circ = cycle.circumference();

  if (n == 1) {
    // A lone point has no pairwise distance.
    Solution sol;
    sol.kind = ProblemKind::cycle;
    sol.points = {cycle.start(1)};
    sol.d_min = ExtendedValue::unbounded();
    sol.certificate = UnboundedCert{};
    sol.stats.intervals = 1;
    return sol;
  }

  DoubledInstance doubled = double_instance(cycle);
  SolveOptions inner = options;
  inner.initial_bound = circ / n;
  Solution line_sol = solve_line(doubled.line, inner);

  // Largest k in [1, n] whose point sits on its left endpoint; k = 1 always
  // qualifies. Its second copy must then sit on a left endpoint too, which
  // is what makes the window k .. k+n-1 wrap consistently.
  int k = 1;
  for (int i = n; i >= 1; --i) {
    if (line_sol.points[i - 1] == doubled.line.left(i)) {
      k = i;
      break;
    }
  }
  if (!(line_sol.points[k + n - 1] == doubled.line.left(k + n)))
    throw InternalError("cycle reduction postcondition failed: p'_{k+n} is off its left endpoint");

  Solution sol;
  sol.kind = ProblemKind::cycle;
  sol.points = map_back(line_sol.points, k, cycle, doubled);
  sol.stats = line_sol.stats;

  if (const auto* pair = std::get_if<LinePairCert>(&line_sol.certificate)) {
    const int m = pair->j_star - pair->i_star;
    if (!(1 <= m && m <= n - 1))
      throw InternalError("certificate window spans a full turn");
    const int ci = (pair->i_star - 1) % n + 1;
    const int cj = (pair->j_star - 1) % n + 1;
    sol.d_min = pair->value;
    sol.certificate = CycleWindowCert{ci, cj, m, pair->value};
  } else if (std::holds_alternative<InitialBoundCert>(line_sol.certificate)) {
    // The bound |C| / n was never beaten, so uniform spacing is optimal.
    Rational uniform = circ / n;
    sol.d_min = uniform;
    sol.certificate = CycleUniformCert{std::move(uniform)};
  } else {
    throw InternalError("doubled run produced an unexpected certificate kind");
  }
  return sol;
}

}  // namespace disperse

#include "disperse/verify.hpp"

#include <string>
#include <variant>

namespace disperse {
namespace {

std::string idx(int i) { return std::to_string(i); }

void check_point_count(int n, const Solution& sol) {
  if (static_cast<int>(sol.points.size()) != n)
    throw ValidationError("dimension mismatch: instance has " + idx(n) + " intervals, solution has " +
                          idx(static_cast<int>(sol.points.size())) + " points");
}

struct Tightness {
  bool tight = false;
  bool proves = false;
};

VerificationReport assemble(bool feasible, Tightness t, std::vector<std::string> notes) {
  VerificationReport rep;
  rep.feasible = feasible;
  rep.certificate_tight = t.tight;
  rep.proves_optimality = t.proves;
  rep.optimal = feasible && t.tight && t.proves;
  rep.notes = std::move(notes);
  return rep;
}

VerificationReport verify_line(const LineInstance& inst, const Solution& sol) {
  const int n = inst.size();
  check_point_count(n, sol);
  std::vector<std::string> notes;
  if (sol.kind != ProblemKind::line)
    throw ValidationError("kind mismatch: line instance with a cycle solution");

  bool feasible = true;
  for (int i = 1; i <= n; ++i) {
    if (!(inst.left(i) <= sol.points[i - 1] && sol.points[i - 1] <= inst.right(i))) {
      feasible = false;
      notes.push_back("point " + idx(i) + " lies outside interval " + idx(i));
    }
  }
  if (sol.d_min.is_unbounded()) {
    if (n > 1) {
      feasible = false;
      notes.push_back("unbounded d_min is impossible with " + idx(n) + " intervals");
    }
  } else {
    for (int i = 2; i <= n; ++i) {
      if (sol.points[i - 1] - sol.points[i - 2] < sol.d_min.finite()) {
        feasible = false;
        notes.push_back("gap between points " + idx(i - 1) + " and " + idx(i) + " is below d_min");
      }
    }
  }

  Tightness t;
  if (const auto* pair = std::get_if<LinePairCert>(&sol.certificate)) {
    if (!(1 <= pair->i_star && pair->i_star < pair->j_star && pair->j_star <= n)) {
      notes.push_back("certificate indices (" + idx(pair->i_star) + ", " + idx(pair->j_star) +
                      ") out of range");
    } else {
      const Rational recomputed =
          (inst.right(pair->j_star) - inst.left(pair->i_star)) / (pair->j_star - pair->i_star);
      if (recomputed != pair->value)
        notes.push_back("certificate value does not match (r_" + idx(pair->j_star) + " - l_" +
                        idx(pair->i_star) + ") / " + idx(pair->j_star - pair->i_star));
      else if (sol.d_min.is_unbounded() || sol.d_min.finite() != pair->value)
        notes.push_back("d_min does not equal the certificate value");
      else {
        t.tight = true;
        t.proves = true;
      }
    }
  } else if (const auto* bound = std::get_if<InitialBoundCert>(&sol.certificate)) {
    if (!sol.d_min.is_unbounded() && sol.d_min.finite() == bound->value)
      t.tight = true;  // witnesses the cap, not optimality
    else
      notes.push_back("d_min does not equal the recorded initial bound");
  } else if (std::holds_alternative<UnboundedCert>(sol.certificate)) {
    if (n == 1 && sol.d_min.is_unbounded()) {
      t.tight = true;
      t.proves = true;
    } else {
      notes.push_back("unbounded certificate requires a single interval");
    }
  } else {
    notes.push_back("certificate kind does not apply to line instances");
  }
  return assemble(feasible, t, std::move(notes));
}

VerificationReport verify_cycle(const CycleInstance& inst, const Solution& sol) {
  const int n = inst.size();
  check_point_count(n, sol);
  std::vector<std::string> notes;
  if (sol.kind != ProblemKind::cycle)
    throw ValidationError("kind mismatch: cycle instance with a line solution");
  const Rational& circ = inst.circumference();

  bool feasible = true;
  for (int i = 1; i <= n; ++i) {
    const Rational& p = sol.points[i - 1];
    if (p.sign() < 0 || !(p < circ)) {
      feasible = false;
      notes.push_back("point " + idx(i) + " is outside [0, circumference)");
      continue;
    }
    Rational offset = p - inst.start(i);  // clockwise offset into the interval
    if (offset.sign() < 0) offset += circ;
    if (!(offset <= inst.length(i))) {
      feasible = false;
      notes.push_back("point " + idx(i) + " lies outside interval " + idx(i));
    }
  }
  if (sol.d_min.is_unbounded()) {
    if (n > 1) {
      feasible = false;
      notes.push_back("unbounded d_min is impossible with " + idx(n) + " intervals");
    }
  } else if (n > 1) {
    for (int i = 1; i <= n; ++i) {
      const Rational& a = sol.points[i - 1];
      const Rational& b = sol.points[i % n];
      Rational gap = b - a;  // clockwise arc to the next point
      if (gap.sign() < 0) gap += circ;
      if (gap < sol.d_min.finite()) {
        feasible = false;
        notes.push_back("cyclic gap after point " + idx(i) + " is below d_min");
      }
    }
  }

  Tightness t;
  if (const auto* win = std::get_if<CycleWindowCert>(&sol.certificate)) {
    const bool range_ok = 1 <= win->i && win->i <= n && 1 <= win->j && win->j <= n &&
                          1 <= win->m && win->m <= n - 1;
    if (!range_ok || win->j != (win->i - 1 + win->m) % n + 1) {
      notes.push_back("certificate window (i=" + idx(win->i) + ", j=" + idx(win->j) +
                      ", m=" + idx(win->m) + ") is inconsistent");
    } else {
      Rational arc = win->j > win->i ? inst.end(win->j) - inst.start(win->i)
                                     : inst.end(win->j) + circ - inst.start(win->i);
      if (std::move(arc) / win->m != win->value)
        notes.push_back("certificate value does not match the clockwise arc over m steps");
      else if (sol.d_min.is_unbounded() || sol.d_min.finite() != win->value)
        notes.push_back("d_min does not equal the certificate value");
      else {
        t.tight = true;
        t.proves = true;
      }
    }
  } else if (const auto* uni = std::get_if<CycleUniformCert>(&sol.certificate)) {
    if (uni->value != circ / n)
      notes.push_back("uniform certificate value is not circumference / n");
    else if (sol.d_min.is_unbounded() || sol.d_min.finite() != uni->value)
      notes.push_back("d_min does not equal the certificate value");
    else {
      t.tight = true;
      t.proves = true;
    }
  } else if (std::holds_alternative<UnboundedCert>(sol.certificate)) {
    if (n == 1 && sol.d_min.is_unbounded()) {
      t.tight = true;
      t.proves = true;
    } else {
      notes.push_back("unbounded certificate requires a single interval");
    }
  } else {
    notes.push_back("certificate kind does not apply to cycle instances");
  }
  return assemble(feasible, t, std::move(notes));
}

}  // namespace

VerificationReport verify_solution(const Instance& instance, const Solution& solution) {
  if (const auto* line = std::get_if<LineInstance>(&instance)) return verify_line(*line, solution);
  return verify_cycle(std::get<CycleInstance>(instance), solution);
}

}  // namespace disperse

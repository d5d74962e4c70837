#include "disperse/line_solver.hpp"

#include <utility>

namespace disperse {
namespace {

// (dl1 / di1) > (dl2 / di2) with di1, di2 > 0, decided by cross-multiplication.
bool slope_greater(const Rational& dl1, long di1, const Rational& dl2, long di2) {
  return dl1 * di2 > dl2 * di1;
}

ExtendedValue bound_value(const SolverState& st) {
  return st.kind == BoundKind::infinite ? ExtendedValue::unbounded() : ExtendedValue(st.d);
}

}  // namespace

SolverState begin_scan(const LineInstance& instance, std::optional<Rational> initial_bound) {
  if (initial_bound && initial_bound->sign() <= 0)
    throw ValidationError("initial bound must be positive");
  SolverState st;
  st.n = instance.size();
  st.critical = CriticalList(st.n);
  st.points.assign(static_cast<std::size_t>(st.n), Rational());
  if (initial_bound) {
    st.kind = BoundKind::initial;
    st.d = *initial_bound;
    st.initial_bound = std::move(initial_bound);
  }
  st.points[0] = instance.left(1);
  st.prev_point = st.points[0];
  st.finalized = 1;
  st.critical.push_back(1);
  st.processed = 1;
  st.stats.intervals = 1;
  st.stats.pushes = 1;
  st.stats.finalizations = 1;
  return st;
}

void rear_processing(SolverState& st, const LineInstance& inst, int i) {
  const Rational& l_i = inst.left(i);
  while (st.critical.size() > 1) {
    const int kt = st.critical.back();
    const int kt1 = st.critical.second_back();
    if (slope_greater(inst.left(kt) - inst.left(kt1), kt - kt1, l_i - inst.left(kt1), i - kt1))
      break;
    st.critical.pop_back();
    ++st.stats.pops;
  }
  st.critical.push_back(i);
  ++st.stats.pushes;
}

void front_processing(SolverState& st, const LineInstance& inst, int i) {
  const Rational& r_i = inst.right(i);
  while (st.critical.size() > 1) {
    const int ks = st.critical.front();
    const int ks1 = st.critical.second();
    const Rational dl = inst.left(ks1) - inst.left(ks);
    if (!slope_greater(dl, ks1 - ks, r_i - inst.left(ks), i - ks)) break;
    // p_{k_s} cannot move; fix k_s+1 .. k_{s+1} along the front slope.
    // The last of them lands exactly on l_{k_{s+1}}.
    const Rational slope = dl / (ks1 - ks);
    Rational p = inst.left(ks);
    for (int j = ks + 1; j <= ks1; ++j) {
      p += slope;
      st.points[j - 1] = p;
    }
    st.stats.finalizations += static_cast<std::uint64_t>(ks1 - ks);
    st.finalized = ks1;
    st.critical.pop_front();
    ++st.stats.pops;
  }
}

void step(SolverState& st, const LineInstance& inst, int i) {
  const Rational& l_i = inst.left(i);
  const Rational& r_i = inst.right(i);

  // Where p_{i-1} + d_min falls relative to [l_i, r_i] picks the branch;
  // an infinite d_min always overshoots.
  int branch = 2;
  Rational cand;
  if (st.kind != BoundKind::infinite) {
    cand = st.prev_point + st.d;
    branch = cand <= l_i ? 0 : (cand <= r_i ? 1 : 2);
  }

  switch (branch) {
    case 0: {
      // p_i starts fresh at l_i; everything pending settles at spacing d_min.
      const int ks = st.critical.front();
      Rational p = st.points[ks - 1];
      for (int j = ks + 1; j <= i - 1; ++j) {
        p += st.d;
        st.points[j - 1] = p;
      }
      st.points[i - 1] = l_i;
      st.prev_point = l_i;
      st.stats.finalizations += static_cast<std::uint64_t>(i - ks);
      st.finalized = i;
      st.stats.pops += static_cast<std::uint64_t>(st.critical.size());
      st.critical.clear();
      st.critical.push_back(i);
      ++st.stats.pushes;
      break;
    }
    case 1: {
      st.prev_point = std::move(cand);
      rear_processing(st, inst, i);
      break;
    }
    case 2: {
      st.prev_point = r_i;
      front_processing(st, inst, i);
      const int ks = st.critical.front();
      st.d = (r_i - inst.left(ks)) / (i - ks);
      st.kind = BoundKind::pair;
      st.i_star = ks;
      st.j_star = i;
      rear_processing(st, inst, i);
      break;
    }
  }
  st.processed = i;
  ++st.stats.intervals;
}

Solution finalize_tail(SolverState&& st) {
  const int n = st.n;
  const int ks = st.critical.front();
  if (ks < n) {
    Rational p = st.points[ks - 1];
    for (int j = ks + 1; j <= n; ++j) {
      p += st.d;
      st.points[j - 1] = p;
    }
    st.stats.finalizations += static_cast<std::uint64_t>(n - ks);
    st.finalized = n;
  }

  Solution sol;
  sol.kind = ProblemKind::line;
  sol.points = std::move(st.points);
  sol.stats = st.stats;
  switch (st.kind) {
    case BoundKind::infinite:
      sol.d_min = ExtendedValue::unbounded();
      sol.certificate = UnboundedCert{};
      break;
    case BoundKind::initial:
      sol.d_min = st.d;
      sol.certificate = InitialBoundCert{st.d};
      break;
    case BoundKind::pair:
      sol.d_min = st.d;
      sol.certificate = LinePairCert{st.i_star, st.j_star, st.d};
      break;
  }
  return sol;
}

InvariantReport check_invariants(const SolverState& st, const LineInstance& inst) {
  InvariantReport rep;
  rep.after_interval = st.processed;
  auto add = [&rep](const char* name, bool pass, std::string detail = {}) {
    rep.checks.push_back({name, pass, pass ? std::string() : std::move(detail)});
  };
  const int last = st.processed;
  const bool has_d = st.kind != BoundKind::infinite;

  if (st.critical.empty()) {
    add("I3", false, "critical list is empty");
    return rep;
  }

  // (1) the temporary location of the last processed point is known; when it
  // is already finalized the two records must agree.
  add("I1", st.finalized < last || st.points[last - 1] == st.prev_point,
      "finalized p_" + std::to_string(last) + " diverges from the temporary point");

  // (2) d_min carries its own witness.
  switch (st.kind) {
    case BoundKind::pair: {
      bool range_ok = 1 <= st.i_star && st.i_star < st.j_star && st.j_star <= last;
      bool value_ok =
          range_ok &&
          st.d == (inst.right(st.j_star) - inst.left(st.i_star)) / (st.j_star - st.i_star);
      add("I2", value_ok,
          "d_min != (r_" + std::to_string(st.j_star) + " - l_" + std::to_string(st.i_star) +
              ") / " + std::to_string(st.j_star - st.i_star));
      break;
    }
    case BoundKind::initial:
      add("I2", st.initial_bound && st.d == *st.initial_bound,
          "d_min diverged from the initial bound without a certificate pair");
      break;
    case BoundKind::infinite:
      add("I2", true);
      break;
  }

  // (3) the rear of the critical list is the last processed index.
  add("I3", st.critical.back() == last,
      "rear is " + std::to_string(st.critical.back()) + ", expected " + std::to_string(last));

  const int ks = st.critical.front();

  // (4) the front's point sits on its left endpoint.
  add("I4", ks >= 1 && ks <= st.finalized && st.points[ks - 1] == inst.left(ks),
      "p_" + std::to_string(ks) + " != l_" + std::to_string(ks));

  // (5) finalized points are exactly 1..k_s.
  add("I5", st.finalized == ks,
      "finalized prefix is 1.." + std::to_string(st.finalized) + ", front is " + std::to_string(ks));

  // (6) finalized points lie in their intervals.
  {
    bool ok = true;
    std::string detail;
    for (int j = 1; j <= st.finalized && j <= st.n; ++j) {
      const Rational& p = st.points[j - 1];
      if (!(inst.left(j) <= p && p <= inst.right(j))) {
        ok = false;
        detail = "p_" + std::to_string(j) + " = " + p.fraction_str() + " outside interval";
        break;
      }
    }
    add("I6", ok, std::move(detail));
  }

  // (7) adjacent finalized gaps are at least d_min.
  {
    bool ok = true;
    std::string detail;
    if (!has_d) {
      ok = st.finalized <= 1;
      if (!ok) detail = "several finalized points while d_min is infinite";
    } else {
      for (int j = 2; j <= st.finalized; ++j) {
        if (st.points[j - 1] - st.points[j - 2] < st.d) {
          ok = false;
          detail = "gap before p_" + std::to_string(j) + " is below d_min";
          break;
        }
      }
    }
    add("I7", ok, std::move(detail));
  }

  // (8) the implicit chain l_{k_s} + d_min * (j - k_s) stays inside its
  // intervals up through `last` and matches the stored temporary point.
  {
    bool ok = true;
    std::string detail;
    if (ks < last) {
      if (!has_d) {
        ok = false;
        detail = "pending implicit points while d_min is infinite";
      } else {
        Rational p = inst.left(ks);
        for (int j = ks + 1; j <= last; ++j) {
          p += st.d;
          if (!(inst.left(j) <= p && p <= inst.right(j))) {
            ok = false;
            detail = "implicit p_" + std::to_string(j) + " = " + p.fraction_str() + " outside interval";
            break;
          }
        }
        if (ok && p != st.prev_point) {
          ok = false;
          detail = "temporary point diverges from the implicit chain";
        }
      }
    }
    add("I8", ok, std::move(detail));
  }

  // (9) priority property over every index, non-strict: exact slope ties are
  // reachable (collinear left endpoints) and resolved arbitrarily by eviction,
  // so equality with an evicted index is legitimate.
  {
    bool ok = true;
    std::string detail;
    for (int h = 0; ok && h + 1 < st.critical.size(); ++h) {
      const int a = st.critical.at(h);
      const int b = st.critical.at(h + 1);
      const Rational dl_ab = inst.left(b) - inst.left(a);
      for (int j = a + 1; j <= last; ++j) {
        if (j == b) continue;
        if (slope_greater(inst.left(j) - inst.left(a), j - a, dl_ab, b - a)) {
          ok = false;
          detail = "slope from " + std::to_string(a) + " to " + std::to_string(j) +
                   " exceeds the slope to " + std::to_string(b);
          break;
        }
      }
    }
    add("I9", ok, std::move(detail));
  }

  // Slopes along the list strictly decrease (rear eviction takes equality,
  // so this holds strictly even with endpoint ties).
  {
    bool ok = true;
    std::string detail;
    for (int h = 0; h + 2 < st.critical.size(); ++h) {
      const int a = st.critical.at(h);
      const int b = st.critical.at(h + 1);
      const int c = st.critical.at(h + 2);
      if (!slope_greater(inst.left(b) - inst.left(a), b - a, inst.left(c) - inst.left(b), c - b)) {
        ok = false;
        detail = "slopes at positions " + std::to_string(h) + ".." + std::to_string(h + 2) +
                 " are not strictly decreasing";
        break;
      }
    }
    add("slope_monotone", ok, std::move(detail));
  }

  return rep;
}

Solution solve_line(const LineInstance& instance, const SolveOptions& options) {
  SolverState st = begin_scan(instance, options.initial_bound);

  ExtendedValue prev_d = ExtendedValue::unbounded();
  auto emit = [&](const SolverState& s) {
    InvariantReport rep = check_invariants(s, instance);
    const ExtendedValue cur = bound_value(s);
    rep.checks.push_back({"d_min_monotone", cur <= prev_d,
                          cur <= prev_d ? std::string() : "d_min increased during the run"});
    prev_d = cur;
    if (options.invariant_sink)
      options.invariant_sink(rep);
    else if (!rep.all_pass())
      throw InvariantViolation(std::move(rep));
  };

  if (options.check_invariants) emit(st);
  for (int i = 2; i <= st.n; ++i) {
    step(st, instance, i);
    if (options.check_invariants) emit(st);
  }
  return finalize_tail(std::move(st));
}

}  // namespace disperse

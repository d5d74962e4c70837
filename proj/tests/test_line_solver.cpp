#include <doctest.h>

#include "helpers.hpp"

#include "disperse/instance.hpp"
#include "disperse/line_solver.hpp"
#include "disperse/oracle.hpp"

#include <thread>
#include <variant>
#include <vector>

using namespace disperse;
using testutil::make_line;
using testutil::R;

namespace {

std::vector<int> list_contents(const CriticalList& crit) {
  std::vector<int> out;
  for (int p = 0; p < crit.size(); ++p) out.push_back(crit.at(p));
  return out;
}

Rational min_adjacent_gap(const std::vector<Rational>& pts) {
  Rational best = pts[1] - pts[0];
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (pts[i] - pts[i - 1] < best) best = pts[i] - pts[i - 1];
  return best;
}

}  // namespace

TEST_CASE("critical list is a strict deque") {
  CriticalList crit(8);
  crit.push_back(1);
  crit.push_back(4);
  crit.push_back(7);
  CHECK(crit.size() == 3);
  CHECK(crit.front() == 1);
  CHECK(crit.second() == 4);
  CHECK(crit.back() == 7);
  CHECK(crit.second_back() == 4);
  crit.pop_front();
  CHECK(crit.front() == 4);
  crit.pop_back();
  CHECK(crit.back() == 4);
  CHECK(crit.size() == 1);
  crit.clear();
  CHECK(crit.empty());
}

TEST_CASE("single interval: point at the left endpoint, unbounded objective") {
  const Solution sol = solve_line(make_line({{R(0), R(1)}}));
  REQUIRE(sol.points.size() == 1);
  CHECK(sol.points[0] == R(0));
  CHECK(sol.d_min.is_unbounded());
  CHECK(std::holds_alternative<UnboundedCert>(sol.certificate));
  CHECK(sol.stats.pushes == 1);
  CHECK(sol.stats.pops == 0);
  CHECK(sol.stats.finalizations == 1);
}

TEST_CASE("rear-processing golden: three intervals, no eviction") {
  const Solution sol = solve_line(make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}}));
  REQUIRE(sol.points.size() == 3);
  CHECK(sol.points[0] == R(0));
  CHECK(sol.points[1] == R(3));
  CHECK(sol.points[2] == R(6));
  CHECK(sol.d_min == ExtendedValue(R(3)));
  const auto& cert = std::get<LinePairCert>(sol.certificate);
  CHECK(cert.i_star == 1);
  CHECK(cert.j_star == 3);
  CHECK(cert.value == R(3));
}

TEST_CASE("front-processing golden: the first index is evicted") {
  const LineInstance inst = make_line({{R(0), R(1)}, {R(10), R(11)}, {R(12), R(13)}});
  const Solution sol = solve_line(inst);
  CHECK(sol.points[0] == R(0));
  CHECK(sol.points[1] == R(10));
  CHECK(sol.points[2] == R(13));
  CHECK(sol.d_min == ExtendedValue(R(3)));
  const auto& cert = std::get<LinePairCert>(sol.certificate);
  CHECK(cert.i_star == 2);
  CHECK(cert.j_star == 3);
}

TEST_CASE("initial bound caps the objective and is reported as such") {
  const Solution sol =
      solve_line(make_line({{R(0), R(5)}, {R(6), R(10)}}), {.initial_bound = R(2)});
  CHECK(sol.points[0] == R(0));
  CHECK(sol.points[1] == R(6));
  CHECK(sol.d_min == ExtendedValue(R(2)));
  CHECK(std::get<InitialBoundCert>(sol.certificate).value == R(2));
}

TEST_CASE("initial bound must be positive") {
  CHECK_THROWS_AS(solve_line(make_line({{R(0), R(1)}}), {.initial_bound = R(0)}),
                  ValidationError);
  CHECK_THROWS_AS(solve_line(make_line({{R(0), R(1)}}), {.initial_bound = R(-1)}),
                  ValidationError);
}

TEST_CASE("step: overshoot takes the right endpoint and pins the pair") {
  const LineInstance inst = make_line({{R(0), R(1)}, {R(10), R(11)}});
  SolverState st = begin_scan(inst);
  CHECK(st.kind == BoundKind::infinite);
  step(st, inst, 2);
  CHECK(st.prev_point == R(11));
  CHECK(st.kind == BoundKind::pair);
  CHECK(st.d == R(11));
  CHECK(st.i_star == 1);
  CHECK(st.j_star == 2);
  CHECK(list_contents(st.critical) == std::vector<int>{1, 2});
}

TEST_CASE("step: in-interval placement extends the chain and keeps the list") {
  // p_2 = 3 with d_min = 3 via an initial bound; I_3 = [3.5, 10]
  const LineInstance inst =
      make_line({{R(0), R(1)}, {R(2), R(3)}, {testutil::dec("3.5"), R(10)}});
  SolverState st = begin_scan(inst, R(3));
  step(st, inst, 2);
  CHECK(st.prev_point == R(3));
  CHECK(list_contents(st.critical) == std::vector<int>{1, 2});
  step(st, inst, 3);
  CHECK(st.prev_point == R(6));  // p_2 + d
  CHECK(st.kind == BoundKind::initial);
  // slope test 2 > 7/4 keeps index 2
  CHECK(list_contents(st.critical) == std::vector<int>{1, 2, 3});
}

TEST_CASE("step: a far interval resets the list and finalizes the backlog") {
  const LineInstance inst =
      make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}, {R(100), R(101)}});
  SolverState st = begin_scan(inst);
  step(st, inst, 2);
  step(st, inst, 3);
  // state after I_3: d = 3, pair (1, 3), list {1, 3}, p_3 = 6
  CHECK(st.d == R(3));
  CHECK(list_contents(st.critical) == std::vector<int>{1, 3});
  CHECK(st.finalized == 1);
  step(st, inst, 4);
  CHECK(st.prev_point == R(100));
  CHECK(list_contents(st.critical) == std::vector<int>{4});
  CHECK(st.finalized == 4);
  CHECK(st.points[1] == R(3));
  CHECK(st.points[2] == R(6));
  CHECK(st.points[3] == R(100));
  CHECK(st.d == R(3));  // unchanged by branch one
}

TEST_CASE("rear_processing evicts on non-strict slope ties") {
  const LineInstance evict = make_line({{R(0), R(1)}, {R(2), R(3)}, {R(5), R(6)}});
  SolverState st = begin_scan(evict, R(1));
  st.critical.push_back(2);
  st.stats.pushes++;
  rear_processing(st, evict, 3);
  CHECK(list_contents(st.critical) == std::vector<int>{1, 3});  // 2 beaten: 2 > 5/2 is false

  const LineInstance keep = make_line({{R(0), R(1)}, {R(2), R(3)}, {testutil::dec("3.5"), R(10)}});
  SolverState st2 = begin_scan(keep, R(1));
  st2.critical.push_back(2);
  st2.stats.pushes++;
  rear_processing(st2, keep, 3);
  CHECK(list_contents(st2.critical) == std::vector<int>{1, 2, 3});  // 2 > 7/4 holds

  const LineInstance single = make_line({{R(0), R(1)}, {R(2), R(3)}});
  SolverState st3 = begin_scan(single);
  rear_processing(st3, single, 2);
  CHECK(list_contents(st3.critical) == std::vector<int>{1, 2});
}

TEST_CASE("front_processing finalizes along the slope before evicting") {
  const LineInstance inst = make_line({{R(0), R(1)}, {R(10), R(11)}, {R(12), R(13)}});
  SolverState st = begin_scan(inst);
  st.critical.push_back(2);
  st.stats.pushes++;
  front_processing(st, inst, 3);  // slope 10 > (13 - 0) / 2
  CHECK(list_contents(st.critical) == std::vector<int>{2});
  CHECK(st.finalized == 2);
  CHECK(st.points[1] == R(10));  // p_2 landed on l_2

  const LineInstance stay = make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}});
  SolverState st2 = begin_scan(stay);
  st2.critical.push_back(2);
  st2.stats.pushes++;
  front_processing(st2, stay, 3);  // 2 > 3 fails, nothing moves
  CHECK(list_contents(st2.critical) == std::vector<int>{1, 2});
  CHECK(st2.finalized == 1);

  SolverState st3 = begin_scan(stay);
  front_processing(st3, stay, 3);  // single element, no-op
  CHECK(list_contents(st3.critical) == std::vector<int>{1});
}

TEST_CASE("one step can evict several fronts, finalizing along each slope") {
  // At I_4: slope 10 beats (25 - 0) / 3, then slope 8 beats (25 - 10) / 2.
  const LineInstance inst =
      make_line({{R(0), R(1)}, {R(10), R(12)}, {R(18), R(24)}, {R(24), R(25)}});
  SolverState st = begin_scan(inst);
  step(st, inst, 2);
  step(st, inst, 3);  // boundary case: p_2 + d lands exactly on r_3
  CHECK(st.prev_point == R(24));
  CHECK(list_contents(st.critical) == std::vector<int>{1, 2, 3});
  step(st, inst, 4);
  CHECK(list_contents(st.critical) == std::vector<int>{3, 4});
  CHECK(st.finalized == 3);
  CHECK(st.points[1] == R(10));  // along slope(1 -> 2)
  CHECK(st.points[2] == R(18));  // along slope(2 -> 3)
  CHECK(st.d == R(7));
  CHECK(st.i_star == 3);
  CHECK(st.j_star == 4);

  const Solution sol = solve_line(inst, {.check_invariants = true});
  CHECK(sol.points == std::vector<Rational>{R(0), R(10), R(18), R(25)});
  CHECK(sol.d_min == oracle_line_optimum(inst));
  CHECK(sol.d_min == oracle_line_via_candidates(inst));
}

TEST_CASE("finalize_tail fills the pending suffix at spacing d_min") {
  const LineInstance inst = make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}});
  SolverState st = begin_scan(inst);
  step(st, inst, 2);
  step(st, inst, 3);
  CHECK(st.finalized == 1);
  const Solution sol = finalize_tail(std::move(st));
  CHECK(sol.points[1] == R(3));
  CHECK(sol.points[2] == R(6));
  CHECK(sol.stats.finalizations == 3);
}

TEST_CASE("check_invariants passes on a healthy run and flags injected faults") {
  const LineInstance inst = make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}});
  SolverState st = begin_scan(inst);
  step(st, inst, 2);
  step(st, inst, 3);
  CHECK(check_invariants(st, inst).all_pass());

  SolverState corrupted = st;
  corrupted.d = R(2);  // pair (1, 3) actually certifies 3
  const InvariantReport rep = check_invariants(corrupted, inst);
  CHECK_FALSE(rep.all_pass());
  bool i2_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "I2" && !c.pass) i2_failed = true;
  CHECK(i2_failed);
}

TEST_CASE("check_invariants flags a critical list with increasing slopes") {
  const LineInstance inst = make_line({{R(0), R(1)}, {R(2), R(3)}, {R(5), R(6)}});
  SolverState st = begin_scan(inst, R(2));
  st.critical.push_back(2);
  st.critical.push_back(3);
  st.processed = 3;
  st.prev_point = R(4);  // keep I8's chain endpoint consistent: 0 + 2 * 2
  const InvariantReport rep = check_invariants(st, inst);
  bool slope_check_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "slope_monotone" && !c.pass) slope_check_failed = true;
  CHECK(slope_check_failed);  // slopes 2 then 3 are not decreasing
}

TEST_CASE("instrumented solve reports every step through the sink") {
  const LineInstance inst = make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}});
  int reports = 0;
  SolveOptions opts;
  opts.check_invariants = true;
  opts.invariant_sink = [&](const InvariantReport& rep) {
    ++reports;
    CHECK(rep.all_pass());
  };
  solve_line(inst, opts);
  CHECK(reports == 3);
}

TEST_CASE("collinear left endpoints keep the scan exact") {
  // slopes tie exactly: lefts 0, 10, 20
  const LineInstance inst = make_line({{R(0), R(1)}, {R(10), R(12)}, {R(20), R(30)}});
  const Solution sol = solve_line(inst, {.check_invariants = true});
  CHECK(sol.d_min == oracle_line_optimum(inst));
}

TEST_CASE("solver agrees with both oracles on a seeded corpus, ties included") {
  for (std::uint64_t i = 0; i < 800; ++i) {
    GeneratorConfig cfg = testutil::corpus_config(i, 2, 12, 200, GeneratorConfig::Kind::line);
    cfg.rational_coords = i % 7 == 0;
    const auto inst = std::get<LineInstance>(gen_instance(cfg));
    const Solution sol = solve_line(inst);
    const ExtendedValue oracle = oracle_line_optimum(inst);
    REQUIRE(sol.d_min == oracle);
    REQUIRE(sol.d_min == oracle_line_via_candidates(inst));
    // feasibility and exact tightness of the minimum gap
    for (int j = 1; j <= inst.size(); ++j) {
      REQUIRE(inst.left(j) <= sol.points[j - 1]);
      REQUIRE(sol.points[j - 1] <= inst.right(j));
    }
    REQUIRE(min_adjacent_gap(sol.points) == oracle.finite());
  }
}

TEST_CASE("instrumented corpus: every invariant after every interval") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    GeneratorConfig cfg = testutil::corpus_config(i, 2, 40, 200, GeneratorConfig::Kind::line);
    const auto inst = std::get<LineInstance>(gen_instance(cfg));
    SolveOptions opts;
    opts.check_invariants = true;  // throws on the first violation
    CHECK_NOTHROW(solve_line(inst, opts));
  }
}

TEST_CASE("work counters: n pushes, n finalizations, at most n pops") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    GeneratorConfig cfg = testutil::corpus_config(i, 1, 30, 500, GeneratorConfig::Kind::line);
    const auto inst = std::get<LineInstance>(gen_instance(cfg));
    const Solution sol = solve_line(inst);
    const auto n = static_cast<std::uint64_t>(inst.size());
    CHECK(sol.stats.intervals == n);
    CHECK(sol.stats.pushes == n);
    CHECK(sol.stats.finalizations == n);
    CHECK(sol.stats.pops <= n);
    CHECK(sol.stats.total() <= 6 * n);
  }
}

TEST_CASE("with an initial bound the result is min(bound, optimum)") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    GeneratorConfig cfg = testutil::corpus_config(i, 2, 10, 120, GeneratorConfig::Kind::line);
    const auto inst = std::get<LineInstance>(gen_instance(cfg));
    const Rational opt = oracle_line_optimum(inst).finite();
    for (const Rational& bound : {R(1, 3), opt, opt + R(5)}) {
      if (bound.sign() <= 0) continue;
      const Solution sol = solve_line(inst, {.initial_bound = bound});
      REQUIRE(sol.d_min == ExtendedValue(min(bound, opt)));
      REQUIRE(min_adjacent_gap(sol.points) >= sol.d_min.finite());
      if (opt < bound) {
        CHECK(std::holds_alternative<LinePairCert>(sol.certificate));
      } else {
        CHECK(std::holds_alternative<InitialBoundCert>(sol.certificate));
      }
    }
  }
}

TEST_CASE("single interval with a bound reports the bound") {
  const Solution sol = solve_line(make_line({{R(0), R(1)}}), {.initial_bound = R(7)});
  CHECK(sol.d_min == ExtendedValue(R(7)));
  CHECK(std::holds_alternative<InitialBoundCert>(sol.certificate));
}

TEST_CASE("coordinates beyond 64 bits stay exact") {
  const Rational big(mpz_class("340282366920938463463374607431768211456"), mpz_class(1));  // 2^128
  const LineInstance inst = make_line({{R(0), R(1)}, {big, big + R(1)}, {big * 2, big * 2 + R(1)}});
  const Solution sol = solve_line(inst);
  CHECK(sol.d_min == oracle_line_optimum(inst));
  CHECK(sol.d_min == oracle_line_via_candidates(inst));
}

TEST_CASE("concurrent solves on a shared instance agree") {
  GeneratorConfig cfg = testutil::corpus_config(99, 200, 400, 100000, GeneratorConfig::Kind::line);
  const auto inst = std::get<LineInstance>(gen_instance(cfg));
  const Solution reference = solve_line(inst);
  std::vector<std::thread> workers;
  std::vector<int> agree(4, 0);
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      const Solution sol = solve_line(inst);
      agree[t] = sol.points == reference.points && sol.d_min == reference.d_min;
    });
  for (auto& w : workers) w.join();
  for (int t = 0; t < 4; ++t) CHECK(agree[t] == 1);
}

TEST_CASE("d_min never increases over an instrumented run") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    GeneratorConfig cfg = testutil::corpus_config(i, 2, 25, 300, GeneratorConfig::Kind::line);
    const auto inst = std::get<LineInstance>(gen_instance(cfg));
    SolveOptions opts;
    opts.check_invariants = true;
    bool monotone = true;
    opts.invariant_sink = [&](const InvariantReport& rep) {
      for (const auto& c : rep.checks)
        if (c.name == "d_min_monotone" && !c.pass) monotone = false;
    };
    solve_line(inst, opts);
    CHECK(monotone);
  }
}

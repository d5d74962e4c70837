#include <doctest.h>

#include "helpers.hpp"

#include "disperse/cycle_solver.hpp"
#include "disperse/json_io.hpp"
#include "disperse/line_solver.hpp"
#include "disperse/oracle.hpp"
#include "disperse/verify.hpp"

#include <string>
#include <variant>

using namespace disperse;
using testutil::make_cycle;
using testutil::make_line;
using testutil::R;

namespace {

Solution line_solution(std::vector<Rational> pts, ExtendedValue d, Certificate cert) {
  Solution sol;
  sol.kind = ProblemKind::line;
  sol.points = std::move(pts);
  sol.d_min = std::move(d);
  sol.certificate = std::move(cert);
  return sol;
}

}  // namespace

TEST_CASE("a tight feasible pair certificate verifies as optimal") {
  const Instance inst = make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}});
  const Solution sol =
      line_solution({R(0), R(3), R(6)}, R(3), LinePairCert{1, 3, R(3)});
  const VerificationReport rep = verify_solution(inst, sol);
  CHECK(rep.feasible);
  CHECK(rep.certificate_tight);
  CHECK(rep.optimal);
  CHECK(rep.accepted());
}

TEST_CASE("tight but infeasible: inflated d_min fails the gap check") {
  const Instance inst = make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}});
  const Solution sol =
      line_solution({R(0), R(3), R(6)}, R(4), LinePairCert{1, 2, R(4)});
  const VerificationReport rep = verify_solution(inst, sol);
  CHECK_FALSE(rep.feasible);
  CHECK(rep.certificate_tight);  // (r_2 - l_1) / 1 really is 4
  CHECK_FALSE(rep.optimal);
  CHECK_FALSE(rep.accepted());
}

TEST_CASE("single interval with an unbounded certificate is optimal") {
  const Instance inst = make_line({{R(0), R(1)}});
  const VerificationReport rep =
      verify_solution(inst, line_solution({R(0)}, ExtendedValue::unbounded(), UnboundedCert{}));
  CHECK(rep.optimal);
}

TEST_CASE("dimension mismatch is an error, not a report") {
  const Instance inst = make_line({{R(0), R(1)}, {R(2), R(4)}});
  CHECK_THROWS_AS(verify_solution(inst, line_solution({R(0)}, R(1), LinePairCert{1, 2, R(1)})),
                  ValidationError);
}

TEST_CASE("a nudged point is reported by index") {
  const Instance inst = make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}});
  const Solution sol =
      line_solution({R(0), R(9, 2), R(6)}, R(3), LinePairCert{1, 3, R(3)});
  const VerificationReport rep = verify_solution(inst, sol);
  CHECK_FALSE(rep.feasible);
  bool named = false;
  for (const auto& note : rep.notes)
    if (note.find("point 2") != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("a wrong certificate value fails tightness") {
  const Instance inst = make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}});
  const Solution sol =
      line_solution({R(0), R(3), R(6)}, R(3), LinePairCert{1, 2, R(3)});  // pair (1,2) carries 4
  const VerificationReport rep = verify_solution(inst, sol);
  CHECK(rep.feasible);
  CHECK_FALSE(rep.certificate_tight);
}

TEST_CASE("initial-bound certificates verify tight but never optimal") {
  const Instance inst = make_line({{R(0), R(5)}, {R(6), R(10)}});
  const Solution sol = solve_line(std::get<LineInstance>(inst), {.initial_bound = R(2)});
  const VerificationReport rep = verify_solution(inst, sol);
  CHECK(rep.feasible);
  CHECK(rep.certificate_tight);
  CHECK_FALSE(rep.proves_optimality);
  CHECK_FALSE(rep.optimal);
  CHECK(rep.accepted());
}

TEST_CASE("kind mismatch is rejected") {
  const Instance line_inst = make_line({{R(0), R(1)}});
  Solution sol = solve_cycle(make_cycle(R(10), {{R(0), R(1)}}));
  CHECK_THROWS_AS(verify_solution(line_inst, sol), ValidationError);
}

TEST_CASE("cycle verification recomputes window arcs across the wrap") {
  const CycleInstance cyc = make_cycle(R(10), {{R(0), R(1)}, {R(2), R(1)}, {R(6), R(1)}});
  Solution sol = solve_cycle(cyc);
  CHECK(verify_solution(cyc, sol).optimal);

  // tamper with the window value
  auto& cert = std::get<CycleWindowCert>(sol.certificate);
  cert.value = R(4);
  CHECK_FALSE(verify_solution(cyc, sol).certificate_tight);
}

TEST_CASE("solution JSON round-trips solve output exactly") {
  const LineInstance line = make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}});
  const Solution sol = solve_line(line);
  const std::string text = solution_to_json(sol);
  CHECK(text == solution_to_json(sol));  // byte determinism
  const Solution back = solution_from_json(text);
  CHECK(back.kind == sol.kind);
  CHECK(back.points == sol.points);
  CHECK(back.d_min == sol.d_min);
  CHECK(solution_to_json(back) == text);

  const Solution cyc_sol = solve_cycle(make_cycle(R(10), {{R(0), R(1)}, {R(5), R(1)}}));
  CHECK(solution_to_json(solution_from_json(solution_to_json(cyc_sol))) ==
        solution_to_json(cyc_sol));
}

TEST_CASE("solution JSON carries the documented fields") {
  const Solution sol = solve_line(make_line({{R(0), R(1)}, {R(2), R(4)}, {R(5), R(6)}}));
  const std::string text = solution_to_json(sol);
  for (const char* key :
       {"\"kind\"", "\"d_min\"", "\"d_min_approx\"", "\"points\"", "\"certificate\"", "\"stats\""})
    CHECK(text.find(key) != std::string::npos);
  CHECK(text.find("\"3/1\"") != std::string::npos);

  const Solution one = solve_line(make_line({{R(0), R(1)}}));
  const std::string unbounded_text = solution_to_json(one);
  CHECK(unbounded_text.find("\"unbounded\"") != std::string::npos);
  CHECK(unbounded_text.find("null") != std::string::npos);
}

TEST_CASE("malformed solution JSON raises parse or validation errors") {
  CHECK_THROWS_AS(solution_from_json("{"), ParseError);
  CHECK_THROWS_AS(solution_from_json("[]"), ValidationError);
  CHECK_THROWS_AS(solution_from_json("{\"kind\":\"line\"}"), ValidationError);
  CHECK_THROWS_AS(
      solution_from_json(
          R"({"kind":"line","d_min":"1/1","d_min_approx":1.0,"points":["x"],"certificate":{"type":"unbounded"},"stats":{}})"),
      ValidationError);
  CHECK_THROWS_AS(
      solution_from_json(
          R"({"kind":"line","d_min":"1/1","d_min_approx":1.0,"points":[],"certificate":{"type":"wat"},"stats":{}})"),
      ValidationError);
}

TEST_CASE("verify accepts solver output across a mixed corpus") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const bool cycle_kind = i % 2 == 1;
    GeneratorConfig cfg = testutil::corpus_config(
        i, 1, 9, 100, cycle_kind ? GeneratorConfig::Kind::cycle : GeneratorConfig::Kind::line);
    const Instance inst = gen_instance(cfg);
    const Solution sol = cycle_kind ? solve_cycle(std::get<CycleInstance>(inst))
                                    : solve_line(std::get<LineInstance>(inst));
    // through the JSON layer, as the CLI round trip does
    const Solution back = solution_from_json(solution_to_json(sol));
    CHECK(verify_solution(inst, back).accepted());
  }
}

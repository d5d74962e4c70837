#include "disperse/cycle_solver.hpp"
#include "disperse/instance.hpp"
#include "disperse/json_io.hpp"
#include "disperse/line_solver.hpp"
#include "disperse/oracle.hpp"
#include "disperse/verify.hpp"

#include <CLI11.hpp>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace disperse;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

bool use_color() {
  const char* env = std::getenv("DISPERSE_COLOR");
  if (env && std::string_view(env) == "0") return false;
  return isatty(fileno(stdout)) != 0;
}

std::string bold(const std::string& s) { return use_color() ? "\033[1m" + s + "\033[0m" : s; }
std::string paint(const std::string& s, const char* code) {
  return use_color() ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  return parse_instance(in);
}

std::string describe_certificate(const Certificate& cert) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UnboundedCert>) {
          return "unbounded (single interval)";
        } else if constexpr (std::is_same_v<T, LinePairCert>) {
          return "pair (i*=" + std::to_string(v.i_star) + ", j*=" + std::to_string(v.j_star) +
                 ") value " + v.value.fraction_str();
        } else if constexpr (std::is_same_v<T, CycleWindowCert>) {
          return "window (i=" + std::to_string(v.i) + ", j=" + std::to_string(v.j) +
                 ", m=" + std::to_string(v.m) + ") value " + v.value.fraction_str();
        } else if constexpr (std::is_same_v<T, CycleUniformCert>) {
          return "uniform bound circumference/n = " + v.value.fraction_str();
        } else {
          return "initial bound " + v.value.fraction_str() + " (never beaten)";
        }
      },
      cert);
}

void print_solution_table(const Solution& sol) {
  std::cout << bold("kind:        ") << (sol.kind == ProblemKind::line ? "line" : "cycle") << "\n";
  if (sol.d_min.is_unbounded())
    std::cout << bold("d_min:       ") << "unbounded\n";
  else
    std::cout << bold("d_min:       ") << sol.d_min.finite().fraction_str() << " (= "
              << sol.d_min.finite().approx() << ")\n";
  std::cout << bold("certificate: ") << describe_certificate(sol.certificate) << "\n";
  std::cout << bold("points:") << "\n";
  for (std::size_t i = 0; i < sol.points.size(); ++i)
    std::cout << "  " << i + 1 << ": " << sol.points[i].fraction_str() << " (= "
              << sol.points[i].approx() << ")\n";
  std::cout << bold("stats:       ") << "intervals=" << sol.stats.intervals
            << " pushes=" << sol.stats.pushes << " pops=" << sol.stats.pops
            << " finalizations=" << sol.stats.finalizations << "\n";
}

struct SolveArgs {
  std::string instance_path;
  bool json = false;
  bool check_invariants = false;
  std::string initial_bound;
};

int run_solve(const SolveArgs& args) {
  try {
    Instance inst = load_instance(args.instance_path);
    SolveOptions opts;
    opts.check_invariants = args.check_invariants;
    if (!args.initial_bound.empty()) {
      auto bound = Rational::from_string(args.initial_bound);
      if (!bound) {
        std::cerr << "error: --initial-bound expects a rational like 3/2 or 1.5\n";
        return kExitBadInput;
      }
      opts.initial_bound = *std::move(bound);
    }
    Solution sol = std::visit(
        [&opts](const auto& concrete) {
          using T = std::decay_t<decltype(concrete)>;
          if constexpr (std::is_same_v<T, LineInstance>)
            return solve_line(concrete, opts);
          else
            return solve_cycle(concrete, opts);
        },
        inst);
    if (args.json)
      std::cout << solution_to_json(sol);
    else
      print_solution_table(sol);
    return kExitOk;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

int run_verify(const std::string& instance_path, const std::string& solution_path) {
  VerificationReport rep;
  try {
    Instance inst = load_instance(instance_path);
    Solution sol = solution_from_json(read_file(solution_path));
    rep = verify_solution(inst, sol);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  auto flag = [](bool ok) { return ok ? "ok" : "FAIL"; };
  std::cout << bold("feasibility:           ")
            << paint(flag(rep.feasible), rep.feasible ? "32" : "31") << "\n";
  std::cout << bold("certificate tightness: ")
            << paint(flag(rep.certificate_tight), rep.certificate_tight ? "32" : "31") << "\n";
  std::cout << bold("optimal:               ") << (rep.optimal ? "yes" : "no") << "\n";
  for (const std::string& note : rep.notes) std::cout << "  - " << note << "\n";
  return rep.accepted() ? kExitOk : kExitVerifyFailed;
}

struct GenArgs {
  std::string kind = "line";
  int n = 1;
  std::uint64_t seed = 0;
  long coord_max = 1000;
  bool allow_touching = false;
  bool allow_degenerate = false;
  bool rational_coords = false;
  std::string min_gap = "0";
  std::string out;
};

int run_gen(const GenArgs& args) {
  try {
    GeneratorConfig cfg;
    cfg.kind = args.kind == "cycle" ? GeneratorConfig::Kind::cycle : GeneratorConfig::Kind::line;
    cfg.n = args.n;
    cfg.seed = args.seed;
    cfg.coordinate_max = args.coord_max;
    cfg.allow_touching = args.allow_touching;
    cfg.allow_degenerate = args.allow_degenerate;
    cfg.rational_coords = args.rational_coords;
    auto gap = Rational::from_string(args.min_gap);
    if (!gap) {
      std::cerr << "error: --min-gap expects a rational like 1 or 3/2\n";
      return kExitBadInput;
    }
    cfg.min_gap = *std::move(gap);

    const std::string text = serialize_instance(gen_instance(cfg));
    if (args.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out_file(args.out, std::ios::binary);
      if (!out_file) throw ValidationError("cannot open output file: " + args.out);
      out_file << text;
    }
    return kExitOk;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

struct BenchArgs {
  std::string sizes;
  std::uint64_t seed = 1;
  int repeats = 1;
  bool csv = false;
};

int run_bench(const BenchArgs& args) {
  std::vector<long> sizes;
  {
    std::stringstream ss{args.sizes};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      long value = 0;
      try {
        value = std::stol(tok);
      } catch (const std::exception&) {
        value = 0;
      }
      if (value < 1) {
        std::cerr << "error: --sizes expects positive integers\n";
        return kExitBadInput;
      }
      sizes.push_back(value);
    }
  }
  if (sizes.empty() || args.repeats < 1) {
    std::cerr << "error: nothing to benchmark\n";
    return kExitBadInput;
  }
  std::sort(sizes.begin(), sizes.end());

  struct Row {
    long n;
    double wall_ms;
    double ns_per_interval;
    SolverStats stats;
  };
  std::vector<Row> rows;

  // Parse and generation stay outside the timed region; the clock sees the
  // scan alone.
  for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
    const long n = sizes[idx];
    GeneratorConfig cfg;
    cfg.kind = GeneratorConfig::Kind::line;
    cfg.n = static_cast<int>(n);
    cfg.seed = args.seed + idx;
    cfg.coordinate_max = 8 * n;
    Instance inst = gen_instance(cfg);
    const auto& line = std::get<LineInstance>(inst);

    double best_ms = 0;
    SolverStats stats;
    for (int r = 0; r < args.repeats; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      Solution sol = solve_line(line);
      const auto t1 = std::chrono::steady_clock::now();
      const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      if (r == 0) {
        best_ms = ms;
        stats = sol.stats;
      } else {
        best_ms = std::min(best_ms, ms);
        if (sol.stats.total() != stats.total()) {
          std::cerr << "internal error: counters changed between repeats\n";
          return kExitInternal;
        }
      }
    }
    if (stats.total() > 6 * static_cast<std::uint64_t>(n)) {
      std::cerr << "internal error: operation counter exceeds 6n for n=" << n << "\n";
      return kExitInternal;
    }
    rows.push_back({n, best_ms, best_ms * 1e6 / static_cast<double>(n), stats});
  }

  if (args.csv) {
    std::cout << "n,wall_ms,ns_per_interval,pushes,pops,finalizations,ratio_vs_prev\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      std::cout << r.n << "," << r.wall_ms << "," << r.ns_per_interval << "," << r.stats.pushes
                << "," << r.stats.pops << "," << r.stats.finalizations << ",";
      if (i > 0) std::cout << r.ns_per_interval / rows[i - 1].ns_per_interval;
      std::cout << "\n";
    }
  } else {
    std::cout << bold("        n    wall_ms  ns/interval     pushes       pops  finalized  ratio")
              << "\n";
    char buf[160];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      if (i > 0)
        std::snprintf(buf, sizeof buf, "%9ld %10.3f %12.2f %10llu %10llu %10llu %6.2f\n", r.n,
                      r.wall_ms, r.ns_per_interval,
                      static_cast<unsigned long long>(r.stats.pushes),
                      static_cast<unsigned long long>(r.stats.pops),
                      static_cast<unsigned long long>(r.stats.finalizations),
                      r.ns_per_interval / rows[i - 1].ns_per_interval);
      else
        std::snprintf(buf, sizeof buf, "%9ld %10.3f %12.2f %10llu %10llu %10llu      -\n", r.n,
                      r.wall_ms, r.ns_per_interval,
                      static_cast<unsigned long long>(r.stats.pushes),
                      static_cast<unsigned long long>(r.stats.pops),
                      static_cast<unsigned long long>(r.stats.finalizations));
      std::cout << buf;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-min dispersion of points on disjoint intervals, on a line or a cycle"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve an instance file and print the solution");
  solve->add_option("instance", solve_args.instance_path, "instance file")->required();
  solve->add_flag("--json", solve_args.json, "emit the solution as JSON");
  solve->add_flag("--check-invariants", solve_args.check_invariants,
                  "run the instrumented scan and fail on any invariant violation");
  solve->add_option("--initial-bound", solve_args.initial_bound,
                    "positive rational cap on d_min, e.g. 3/2");

  std::string verify_instance, verify_solution_path;
  auto* verify = app.add_subcommand("verify", "check a solution JSON against an instance");
  verify->add_option("instance", verify_instance, "instance file")->required();
  verify->add_option("solution", verify_solution_path, "solution JSON file")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random valid instance");
  gen->add_option("--kind", gen_args.kind, "line or cycle")
      ->check(CLI::IsMember({"line", "cycle"}));
  gen->add_option("--n", gen_args.n, "number of intervals")->required();
  gen->add_option("--seed", gen_args.seed, "PRNG seed");
  gen->add_option("--coord-max", gen_args.coord_max,
                  "largest coordinate (line) or the circumference (cycle)");
  gen->add_flag("--allow-touching", gen_args.allow_touching, "intervals may share endpoints");
  gen->add_flag("--allow-degenerate", gen_args.allow_degenerate, "intervals may be single points");
  gen->add_flag("--rational-coords", gen_args.rational_coords, "coordinates in hundredths");
  gen->add_option("--min-gap", gen_args.min_gap, "minimum gap between intervals");
  gen->add_option("--out", gen_args.out, "output file (default: stdout)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time the solver across instance sizes");
  bench->add_option("--sizes", bench_args.sizes, "comma-separated instance sizes")->required();
  bench->add_option("--seed", bench_args.seed, "PRNG seed");
  bench->add_option("--repeats", bench_args.repeats, "solves per size (best time wins)");
  bench->add_flag("--csv", bench_args.csv, "emit CSV instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitBadInput;
  }

  if (solve->parsed()) return run_solve(solve_args);
  if (verify->parsed()) return run_verify(verify_instance, verify_solution_path);
  if (gen->parsed()) return run_gen(gen_args);
  return run_bench(bench_args);
}

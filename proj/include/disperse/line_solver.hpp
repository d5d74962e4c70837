#pragma once

#include "disperse/instance.hpp"
#include "disperse/solution.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace disperse {

/// Deque of interval indices, strictly increasing front to rear, with O(1)
/// access and removal at both ends. Backed by a flat buffer sized once per
/// run: a full scan performs at most n pushes in total, so no reallocation
/// ever happens mid-run.
class CriticalList {
public:
  explicit CriticalList(int capacity = 0) { buf_.reserve(static_cast<std::size_t>(capacity)); }

  int size() const { return static_cast<int>(buf_.size()) - head_; }
  bool empty() const { return size() == 0; }
  int front() const { return buf_[head_]; }
  int second() const { return buf_[head_ + 1]; }
  int back() const { return buf_.back(); }
  int second_back() const { return buf_[buf_.size() - 2]; }
  int at(int pos) const { return buf_[head_ + pos]; }

  void push_back(int index) { buf_.push_back(index); }
  void pop_back() { buf_.pop_back(); }
  void pop_front() { ++head_; }
  void clear() {
    buf_.clear();
    head_ = 0;
  }

private:
  std::vector<int> buf_;
  int head_ = 0;
};

/// How the current d_min came to be: still the +infinity of a fresh scan,
/// still the caller-supplied initial bound, or pinned to a pair (i*, j*).
enum class BoundKind { infinite, initial, pair };

/// Full state of the scan after some prefix of intervals has been processed.
/// Mutable only while a single solve owns it; exposed so the per-interval
/// operations and the invariant checker can be driven directly from tests.
struct SolverState {
  int n = 0;
  int processed = 0;      // intervals handled so far; next step processes processed + 1
  Rational prev_point;    // temporary location of the last processed point
  BoundKind kind = BoundKind::infinite;
  Rational d;             // current d_min; meaningful unless kind == infinite
  std::optional<Rational> initial_bound;
  int i_star = 1;
  int j_star = 1;         // certificate pair; meaningful when kind == pair
  CriticalList critical;
  std::vector<Rational> points;  // 0-based storage for points 1..n
  int finalized = 0;             // points 1..finalized are fixed for good
  SolverStats stats;
};

/// Processes interval 1: p_1 = l_1 (finalized), critical list {1}, d_min
/// infinite or the supplied bound. The bound, if given, must be positive.
SolverState begin_scan(const LineInstance& instance,
                       std::optional<Rational> initial_bound = std::nullopt);

/// Processes interval i (>= 2): places the temporary p_i by the three-way
/// comparison of p_{i-1} + d_min against [l_i, r_i], maintaining the
/// critical list and the certificate pair.
void step(SolverState& state, const LineInstance& instance, int i);

/// Appends i to the critical list after evicting rear elements whose slope
/// no longer strictly beats the slope to l_i (equality evicts).
void rear_processing(SolverState& state, const LineInstance& instance, int i);

/// While the front slope strictly exceeds (r_i - l_{k_s}) / (i - k_s),
/// finalizes points k_s+1 .. k_{s+1} along the front slope and evicts the
/// front; the successor lands exactly on its left endpoint.
void front_processing(SolverState& state, const LineInstance& instance, int i);

/// Finalizes the pending suffix at spacing d_min and assembles the Solution.
Solution finalize_tail(SolverState&& state);

struct InvariantCheck {
  std::string name;
  bool pass = true;
  std::string detail;  // counterexample description when failing
};

struct InvariantReport {
  int after_interval = 0;
  std::vector<InvariantCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
    return {};
  }
};

/// Evaluates the nine scan invariants plus the slope monotonicity of the
/// critical list, all exactly. The full priority-property sweep makes this
/// O(n * |list|); instrumentation only, never on the solving path.
InvariantReport check_invariants(const SolverState& state, const LineInstance& instance);

struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(InvariantReport r)
      : std::logic_error("solver invariant violated after interval " +
                         std::to_string(r.after_interval) + ": " + r.first_failure()),
        report(std::move(r)) {}
  InvariantReport report;
};

struct SolveOptions {
  std::optional<Rational> initial_bound;
  /// Run check_invariants after every interval. Violations throw
  /// InvariantViolation unless invariant_sink is set, in which case every
  /// report is handed to the sink instead.
  bool check_invariants = false;
  std::function<void(const InvariantReport&)> invariant_sink;
};

/// The linear-time scan over all intervals. Without an initial bound the
/// returned d_min is the optimal objective value; with bound B it is
/// min(B, optimum) and the points are feasible for it.
Solution solve_line(const LineInstance& instance, const SolveOptions& options = {});

}  // namespace disperse

#pragma once

#include "disperse/rational.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace disperse {

/// Syntax error in an instance or solution file; line and column are 1-based.
struct ParseError : std::runtime_error {
  ParseError(int line_, int column_, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + message),
        line(line_), column(column_) {}
  int line;
  int column;
};

/// A structural invariant of an instance, configuration, or solution does
/// not hold; the message names the violated invariant and the indices.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed interval [left, right] on the line; degenerate (left == right) is allowed.
struct Interval {
  Rational left;
  Rational right;
};

/// n >= 1 pairwise disjoint intervals sorted left to right; touching
/// endpoints (right_i == left_{i+1}) are allowed. Intervals are numbered
/// 1..n throughout the library (certificates, reports, error messages).
class LineInstance {
public:
  explicit LineInstance(std::vector<Interval> intervals);

  int size() const { return static_cast<int>(intervals_.size()); }
  const Interval& interval(int i) const { return intervals_[i - 1]; }
  const Rational& left(int i) const { return intervals_[i - 1].left; }
  const Rational& right(int i) const { return intervals_[i - 1].right; }
  const std::vector<Interval>& intervals() const { return intervals_; }

private:
  std::vector<Interval> intervals_;
};

/// Arc-shaped interval on a cycle: begins at clockwise coordinate `start`
/// in [0, circumference) and extends `length` >= 0 clockwise. The last
/// interval may wrap past coordinate 0 but never past start_1.
struct CycleInterval {
  Rational start;
  Rational length;
};

class CycleInstance {
public:
  CycleInstance(Rational circumference, std::vector<CycleInterval> intervals);

  int size() const { return static_cast<int>(intervals_.size()); }
  const Rational& circumference() const { return circumference_; }
  const CycleInterval& interval(int i) const { return intervals_[i - 1]; }
  const Rational& start(int i) const { return intervals_[i - 1].start; }
  const Rational& length(int i) const { return intervals_[i - 1].length; }
  /// start + length; exceeds the circumference only when the interval wraps.
  Rational end(int i) const { return intervals_[i - 1].start + intervals_[i - 1].length; }

private:
  Rational circumference_;
  std::vector<CycleInterval> intervals_;
};

using Instance = std::variant<LineInstance, CycleInstance>;

/// Text format (UTF-8, newline-delimited, '#' starts a comment line):
///   line <n>                 followed by n lines  <left> <right>
///   cycle <n> <circumference>  followed by n lines  <start> <length>
/// Numbers are integers or decimals with optional sign, converted exactly.
Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance; exact round trip. Requires every coordinate
/// to have a finite decimal expansion (all instances this library produces do).
std::string serialize_instance(const Instance& instance);

}  // namespace disperse

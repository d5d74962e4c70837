#include "disperse/instance.hpp"

#include <istream>
#include <sstream>
#include <utility>

namespace disperse {

LineInstance::LineInstance(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw ValidationError("instance must contain at least one interval");
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (!(intervals_[i].left <= intervals_[i].right))
      throw ValidationError("interval " + std::to_string(i + 1) +
                            ": right endpoint precedes left endpoint");
  }
  for (std::size_t i = 0; i + 1 < intervals_.size(); ++i) {
    if (!(intervals_[i].right <= intervals_[i + 1].left))
      throw ValidationError("overlap between interval " + std::to_string(i + 1) + " and " +
                            std::to_string(i + 2));
  }
}

CycleInstance::CycleInstance(Rational circumference, std::vector<CycleInterval> intervals)
    : circumference_(std::move(circumference)), intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw ValidationError("instance must contain at least one interval");
  if (!(circumference_ > Rational(0))) throw ValidationError("circumference must be positive");
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto idx = std::to_string(i + 1);
    if (intervals_[i].length.sign() < 0)
      throw ValidationError("interval " + idx + ": negative length");
    if (!(intervals_[i].length < circumference_))
      throw ValidationError("interval " + idx + ": length reaches the full circumference");
    if (intervals_[i].start.sign() < 0 || !(intervals_[i].start < circumference_))
      throw ValidationError("interval " + idx + ": out-of-range start");
  }
  for (std::size_t i = 0; i + 1 < intervals_.size(); ++i) {
    if (!(intervals_[i].start < intervals_[i + 1].start))
      throw ValidationError("unsorted: start of interval " + std::to_string(i + 2) +
                            " does not follow interval " + std::to_string(i + 1));
    if (!(intervals_[i].start + intervals_[i].length <= intervals_[i + 1].start))
      throw ValidationError("overlap between interval " + std::to_string(i + 1) + " and " +
                            std::to_string(i + 2));
  }
  const std::size_t n = intervals_.size();
  if (n > 1 &&
      !(intervals_[n - 1].start + intervals_[n - 1].length <= intervals_[0].start + circumference_))
    throw ValidationError("overlap between interval " + std::to_string(n) + " and 1 (wrap)");
  if (n == 1 && !(intervals_[0].start + intervals_[0].length <= intervals_[0].start + circumference_))
    throw ValidationError("interval 1 wraps onto itself");
}

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank, non-comment line tokenized; false at end of input.
  bool next(std::vector<Token>& tokens, int& line_no) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line[0] == '#') continue;
      tokens = tokenize(line);
      if (tokens.empty()) continue;
      line_no = line_no_;
      return true;
    }
    return false;
  }

  int current_line() const { return line_no_; }

private:
  std::istream& in_;
  int line_no_ = 0;
};

long parse_count(const Token& tok, int line_no) {
  long value = 0;
  for (char c : tok.text) {
    if (c < '0' || c > '9') throw ParseError(line_no, tok.column, "expected a count, got '" + tok.text + "'");
    if (value > 100000000) throw ParseError(line_no, tok.column, "count too large");
    value = value * 10 + (c - '0');
  }
  if (tok.text.empty()) throw ParseError(line_no, tok.column, "expected a count");
  return value;
}

Rational parse_number(const Token& tok, int line_no) {
  auto r = Rational::from_decimal(tok.text);
  if (!r) throw ParseError(line_no, tok.column, "expected a number, got '" + tok.text + "'");
  return *std::move(r);
}

std::string number_str(const Rational& r) {
  auto dec = r.decimal_str();
  if (!dec)
    throw ValidationError("coordinate " + r.fraction_str() +
                          " has no finite decimal expansion; cannot serialize");
  return *dec;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  LineReader reader(in);
  std::vector<Token> tokens;
  int line_no = 0;
  if (!reader.next(tokens, line_no))
    throw ParseError(reader.current_line() + 1, 1, "missing header line");

  const std::string& kind = tokens[0].text;
  const bool is_line = kind == "line";
  const bool is_cycle = kind == "cycle";
  if (!is_line && !is_cycle)
    throw ParseError(line_no, tokens[0].column, "expected 'line' or 'cycle', got '" + kind + "'");
  const std::size_t want = is_line ? 2 : 3;
  if (tokens.size() != want)
    throw ParseError(line_no, tokens.size() < want ? static_cast<int>(tokens.back().column + tokens.back().text.size()) : tokens[want].column,
                     is_line ? "header must be 'line <n>'" : "header must be 'cycle <n> <circumference>'");
  const long n = parse_count(tokens[1], line_no);
  if (n < 1) throw ValidationError("instance must contain at least one interval");
  Rational circumference;
  if (is_cycle) circumference = parse_number(tokens[2], line_no);

  std::vector<std::pair<Rational, Rational>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    if (!reader.next(tokens, line_no))
      throw ParseError(reader.current_line() + 1, 1,
                       "expected " + std::to_string(n) + " interval lines, got " + std::to_string(i));
    if (tokens.size() != 2)
      throw ParseError(line_no, tokens.size() > 2 ? tokens[2].column : 1,
                       "expected two numbers per interval line");
    rows.emplace_back(parse_number(tokens[0], line_no), parse_number(tokens[1], line_no));
  }
  if (reader.next(tokens, line_no))
    throw ParseError(line_no, tokens[0].column, "unexpected content after the last interval");

  if (is_line) {
    std::vector<Interval> iv;
    iv.reserve(rows.size());
    for (auto& [l, r] : rows) iv.push_back({std::move(l), std::move(r)});
    return LineInstance(std::move(iv));
  }
  std::vector<CycleInterval> iv;
  iv.reserve(rows.size());
  for (auto& [s, len] : rows) iv.push_back({std::move(s), std::move(len)});
  return CycleInstance(std::move(circumference), std::move(iv));
}

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

std::string serialize_instance(const Instance& instance) {
  std::string out;
  if (const auto* line = std::get_if<LineInstance>(&instance)) {
    out = "line " + std::to_string(line->size()) + "\n";
    for (const Interval& iv : line->intervals())
      out += number_str(iv.left) + " " + number_str(iv.right) + "\n";
  } else {
    const auto& cyc = std::get<CycleInstance>(instance);
    out = "cycle " + std::to_string(cyc.size()) + " " + number_str(cyc.circumference()) + "\n";
    for (int i = 1; i <= cyc.size(); ++i)
      out += number_str(cyc.start(i)) + " " + number_str(cyc.length(i)) + "\n";
  }
  return out;
}

}  // namespace disperse

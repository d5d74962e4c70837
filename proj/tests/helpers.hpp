#pragma once

#include "disperse/instance.hpp"
#include "disperse/oracle.hpp"
#include "disperse/rational.hpp"

#include <initializer_list>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace testutil {

inline disperse::Rational R(long num, long den = 1) { return {num, den}; }

inline disperse::Rational dec(std::string_view text) {
  auto r = disperse::Rational::from_decimal(text);
  REQUIRE(r.has_value());
  return *r;
}

inline disperse::LineInstance make_line(
    std::initializer_list<std::pair<disperse::Rational, disperse::Rational>> spans) {
  std::vector<disperse::Interval> iv;
  for (const auto& [l, r] : spans) iv.push_back({l, r});
  return disperse::LineInstance(std::move(iv));
}

inline disperse::CycleInstance make_cycle(
    disperse::Rational circumference,
    std::initializer_list<std::pair<disperse::Rational, disperse::Rational>> start_len) {
  std::vector<disperse::CycleInterval> iv;
  for (const auto& [s, len] : start_len) iv.push_back({s, len});
  return disperse::CycleInstance(std::move(circumference), std::move(iv));
}

/// The corpus shape used across property tests: n drawn from [n_min, n_max]
/// and tie flags cycled per index, everything derived from `index` alone.
inline disperse::GeneratorConfig corpus_config(std::uint64_t index, int n_min, int n_max,
                                               long coordinate_max,
                                               disperse::GeneratorConfig::Kind kind) {
  std::mt19937_64 meta(0x9E3779B97F4A7C15ull ^ index);
  disperse::GeneratorConfig cfg;
  cfg.kind = kind;
  cfg.seed = index;
  cfg.n = n_min + static_cast<int>(meta() % static_cast<std::uint64_t>(n_max - n_min + 1));
  cfg.coordinate_max = coordinate_max;
  cfg.allow_touching = (index % 4 == 1 || index % 4 == 3);
  cfg.allow_degenerate = (index % 4 == 2 || index % 4 == 3);
  return cfg;
}

}  // namespace testutil

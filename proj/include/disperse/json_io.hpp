#pragma once

#include "disperse/solution.hpp"

#include <string>
#include <string_view>

namespace disperse {

/// Stable, byte-deterministic JSON:
/// {"kind":"line|cycle","d_min":"p/q"|"unbounded","d_min_approx":number|null,
///  "points":["p/q",...],"certificate":{...},"stats":{...}}
std::string solution_to_json(const Solution& solution);

/// Throws ParseError on malformed JSON and ValidationError on schema
/// violations (unknown certificate type, bad rational, missing field).
Solution solution_from_json(std::string_view text);

}  // namespace disperse

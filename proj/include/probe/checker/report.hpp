#pragma once

#include <ostream>
#include <string>

#include "probe/checker/bmc.hpp"

namespace probe::checker {

/// {property, verdict, iterations: [{round, states, transitions, numerator,
/// denominator, value}], wallClockSeconds}. Values are full-precision
/// doubles; exact rationals are added as strings when known. Without timing
/// the clock fields are 0, which makes the output reproducible byte for byte.
std::string to_json(const Report& report, bool timing = true);

/// `round,states,transitions,numerator,denominator,value`, one row per
/// iteration (the curve of bound against explored states).
std::string to_csv(const Report& report);

/// Human-readable summary.
std::string to_text(const Report& report, bool timing = true);

/// Shortest round-tripping decimal form of a double.
std::string format_double(double value);
/// `value` rounded to `digits` significant digits.
std::string format_significant(double value, int digits);

}  // namespace probe::checker

#pragma once

#include <string>
#include <string_view>

namespace zenoptics {

/// Parses "<number>deg" or "<number>rad" (e.g. "90deg", "1.5707rad") into
/// radians. A bare number has no unit and is rejected: the suffix is required
/// precisely so callers never guess. Throws std::invalid_argument.
double parse_angle(std::string_view text);

/// Shortest round-trippable decimal form with `precision` significant digits
/// (std::to_chars general format; locale-independent).
std::string format_double(double value, int precision = 9);

}  // namespace zenoptics

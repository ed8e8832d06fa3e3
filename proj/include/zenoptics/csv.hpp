#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zenoptics/zeno.hpp"

namespace zenoptics {

/// "z,intensity" plus one row per point, 9 significant digits.
std::string trace_csv(const IntensityTrace& trace);

/// "N,ratio,deficit_times_N" plus one row per sweep entry.
std::string sweep_csv(const ZenoSweepResult& sweep, double total_angle = kHalfPi);

/// Parsed numeric CSV (used by the verification tools and the tests).
struct NumericCsv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Strict parse: one header line, every later cell must be a full double.
/// Throws std::invalid_argument on malformed input.
NumericCsv parse_numeric_csv(std::string_view text);

}  // namespace zenoptics

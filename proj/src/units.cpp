#include "zenoptics/units.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include "zenoptics/trig.hpp"

namespace zenoptics {

double parse_angle(std::string_view text) {
    const auto fail = [&](const char* why) {
        throw std::invalid_argument("bad angle '" + std::string(text) + "': " + why +
                                    " (expected e.g. \"90deg\" or \"0.5rad\")");
    };

    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("no leading number");
    if (!std::isfinite(value)) fail("value must be finite");

    const std::string_view unit(ptr, static_cast<std::size_t>(end - ptr));
    if (unit == "deg") return (value * kPi) / 180.0;
    if (unit == "rad") return value;
    if (unit.empty()) fail("missing unit suffix, 'deg' or 'rad' is required");
    fail("unknown unit suffix");
    return 0.0;  // unreachable
}

std::string format_double(double value, int precision) {
    char buf[64];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, precision);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

}  // namespace zenoptics

#pragma once

namespace zenoptics {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zenoptics

#pragma once

#include <cmath>
#include <cstdint>

#include "zenoptics/trig.hpp"

namespace zenoptics::rng {

/// SplitMix64 finalizer (Stafford mix13): a full-period 64-bit permutation.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// Stateless counter-based word: a pure function of (seed, hi, lo). Any
/// partition of the index space over threads or chunks reproduces the same
/// stream, which is what makes runs bit-identical under any parallelism.
constexpr std::uint64_t counter_word(std::uint64_t seed, std::uint64_t hi, std::uint64_t lo) {
    std::uint64_t h = mix64(seed + kGolden);
    h = mix64(h ^ (hi + kGolden));
    h = mix64(h ^ (lo + kGolden));
    return h;
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double uniform01(std::uint64_t seed, std::uint64_t hi, std::uint64_t lo) {
    return static_cast<double>(counter_word(seed, hi, lo) >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller; consumes counters (hi, 2*lo) and (hi, 2*lo+1).
inline double gaussian(std::uint64_t seed, std::uint64_t hi, std::uint64_t lo) {
    // u1 in (0, 1] so the log stays finite
    const double u1 =
        static_cast<double>((counter_word(seed, hi, 2 * lo) >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform01(seed, hi, 2 * lo + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

}  // namespace zenoptics::rng

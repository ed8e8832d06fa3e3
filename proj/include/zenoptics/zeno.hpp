#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zenoptics/trig.hpp"

namespace zenoptics {

/// Parameters of the split-rotator bench: n equal Faraday media covering
/// `length` meters and `total_angle` radians of net rotation, fed by a
/// y-polarized beam of intensity i0. The classic case is total_angle = pi/2.
struct ZenoConfig {
    std::size_t n = 1;
    double i0 = 1.0;
    double length = 1.0;
    double total_angle = kHalfPi;

    void validate() const;
};

enum class TraceKind { continuous, measured };

struct TracePoint {
    double z;          ///< meters from the input face
    double intensity;  ///< y-component intensity at z
};

/// Sampled intensity-vs-distance curve. Invariants: z strictly increasing
/// from 0 to length; every intensity in [0, i0].
struct IntensityTrace {
    std::vector<TracePoint> points;
    ZenoConfig config;
    TraceKind kind = TraceKind::continuous;
};

struct SweepRow {
    std::size_t n;
    double ratio;  ///< output intensity / i0
};

struct ZenoSweepResult {
    std::vector<SweepRow> rows;
};

/// y-component intensity at distance z with no measurements:
///   I(z) = i0 * cos^2(total_angle * z / length).
/// Throws std::domain_error for z outside [0, length].
double continuous_intensity(const ZenoConfig& cfg, double z);

/// 1-based index of the Faraday medium containing z: floor(z*n/length) + 1,
/// with interior boundaries owned by the downstream medium and z = length
/// owned by medium n.
std::size_t segment_of(const ZenoConfig& cfg, double z);

/// y-component intensity at z with an ideal y-polarizer after each medium:
/// with i = segment_of(z) and theta = total_angle/n,
///   I(z) = i0 * [cos^2 theta]^(i-1) * cos^2(total_angle/length * (z - (i-1)*length/n)).
double measured_intensity(const ZenoConfig& cfg, double z);

/// Output intensity after all n measured stages: i0 * [cos^2(total_angle/n)]^n.
/// Evaluated in the log domain for n > 10^6 to avoid pow accumulation.
double zeno_output(const ZenoConfig& cfg);

/// zeno_output / i0, computed independently of i0.
double zeno_ratio(std::size_t n, double total_angle = kHalfPi);

/// Samples one intensity curve over [0, length].
///
/// measured: every segment [k*length/n, (k+1)*length/n] contributes
/// samples_per_segment points including both endpoints, interior boundaries
/// shared (total n*(samples_per_segment-1) + 1 points).
/// continuous: uniform grid of n*samples_per_segment + 1 points.
IntensityTrace sample_trace(const ZenoConfig& cfg, TraceKind kind,
                            std::size_t samples_per_segment);

/// One row per requested n, in input order; ratios are i0-independent.
ZenoSweepResult zeno_sweep(std::span<const std::size_t> ns, const ZenoConfig& base);

/// n * (1 - zeno_ratio(n)). Converges to total_angle^2 as n grows
/// (pi^2/4 ~= 2.4674 for the quarter-turn case):
///   1 - ratio = a^2/n - a^4/(2 n^2) + O(n^-3).
double asymptotic_deficit(std::size_t n, double total_angle = kHalfPi);

}  // namespace zenoptics

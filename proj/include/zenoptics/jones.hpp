#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>

#include "zenoptics/trig.hpp"

namespace zenoptics {

using complexd = std::complex<double>;

/// Transverse complex field amplitude pair (x and y components).
///
/// Convention: intensity is the squared amplitude sum |ex|^2 + |ey|^2, so the
/// components carry sqrt(intensity) units. Global phase is not normalized
/// away; compare states by intensity or by phase-invariant distance.
struct JonesVector {
    complexd ex{};
    complexd ey{};

    /// Linear polarization at `axis` radians from +x carrying `intensity`.
    static JonesVector linear_polarized(double intensity, double axis) {
        if (!(std::isfinite(intensity) && intensity >= 0.0))
            throw std::invalid_argument("linear_polarized: intensity must be finite and >= 0");
        if (!std::isfinite(axis))
            throw std::invalid_argument("linear_polarized: axis must be finite");
        const double amp = std::sqrt(intensity);
        return {amp * cos_angle(axis), amp * sin_angle(axis)};
    }
};

inline double intensity(const JonesVector& v) {
    return std::norm(v.ex) + std::norm(v.ey);
}

/// Intensity of the component along the axis at `axis_angle` radians from +x.
inline double intensity_along(const JonesVector& v, double axis_angle) {
    if (!std::isfinite(axis_angle))
        throw std::invalid_argument("intensity_along: axis_angle must be finite");
    const complexd proj = cos_angle(axis_angle) * v.ex + sin_angle(axis_angle) * v.ey;
    return std::norm(proj);
}

/// 2x2 complex transfer matrix, row-major.
struct JonesMatrix {
    std::array<std::array<complexd, 2>, 2> m{};

    static JonesMatrix identity() {
        JonesMatrix j;
        j.m[0][0] = 1.0;
        j.m[1][1] = 1.0;
        return j;
    }

    JonesMatrix operator*(const JonesMatrix& rhs) const {
        JonesMatrix out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                out.m[r][c] = m[r][0] * rhs.m[0][c] + m[r][1] * rhs.m[1][c];
        return out;
    }
};

inline JonesVector apply(const JonesMatrix& j, const JonesVector& v) {
    return {j.m[0][0] * v.ex + j.m[0][1] * v.ey,
            j.m[1][0] * v.ex + j.m[1][1] * v.ey};
}

/// Rotation of the polarization plane by alpha radians, +alpha moves +x
/// toward +y (counterclockwise viewed against propagation):
///   [[cos a, -sin a], [sin a, cos a]]
inline JonesMatrix rotator_matrix(double alpha) {
    if (!std::isfinite(alpha))
        throw std::invalid_argument("rotator_matrix: alpha must be finite");
    const double c = cos_angle(alpha);
    const double s = sin_angle(alpha);
    JonesMatrix j;
    j.m = {{{complexd{c}, complexd{-s}}, {complexd{s}, complexd{c}}}};
    return j;
}

/// Linear polarizer with transmission axis at theta radians from +x.
/// extinction is the residual *intensity* transmission of the blocked axis
/// (amplitude leakage sqrt(extinction)); 0 gives the ideal projector
///   [[cos^2 t, cos t sin t], [cos t sin t, sin^2 t]].
inline JonesMatrix polarizer_matrix(double theta, double extinction = 0.0) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("polarizer_matrix: theta must be finite");
    if (!(std::isfinite(extinction) && extinction >= 0.0 && extinction < 1.0))
        throw std::invalid_argument("polarizer_matrix: extinction must be in [0,1)");
    const double c = cos_angle(theta);
    const double s = sin_angle(theta);
    const double leak = std::sqrt(extinction);
    JonesMatrix j;
    j.m[0][0] = c * c + leak * s * s;
    j.m[0][1] = (1.0 - leak) * c * s;
    j.m[1][0] = j.m[0][1];
    j.m[1][1] = s * s + leak * c * c;
    return j;
}

/// Retarder with the given retardance (radians of phase lag on the slow axis)
/// and fast axis at fast_axis radians from +x: R(t) diag(1, e^{i d}) R(-t).
inline JonesMatrix waveplate_matrix(double retardance, double fast_axis) {
    if (!std::isfinite(retardance) || !std::isfinite(fast_axis))
        throw std::invalid_argument("waveplate_matrix: retardance and fast_axis must be finite");
    const double c = cos_angle(fast_axis);
    const double s = sin_angle(fast_axis);
    const complexd phase{cos_angle(retardance), sin_angle(retardance)};
    JonesMatrix j;
    j.m[0][0] = c * c + phase * (s * s);
    j.m[0][1] = (1.0 - phase) * (c * s);
    j.m[1][0] = j.m[0][1];
    j.m[1][1] = s * s + phase * (c * c);
    return j;
}

/// Neutral attenuator scaling intensity by `transmittance` exactly.
inline JonesMatrix attenuator_matrix(double transmittance) {
    if (!(std::isfinite(transmittance) && transmittance >= 0.0 && transmittance <= 1.0))
        throw std::invalid_argument("attenuator_matrix: transmittance must be in [0,1]");
    const double amp = std::sqrt(transmittance);
    JonesMatrix j;
    j.m[0][0] = amp;
    j.m[1][1] = amp;
    return j;
}

/// Product of a chain of matrices; the FIRST element of `ms` is applied to the
/// beam FIRST, i.e. compose({m1, m2, ..., mk}) = mk * ... * m2 * m1.
inline JonesMatrix compose(std::span<const JonesMatrix> ms) {
    if (ms.empty())
        throw std::invalid_argument("compose: element list must be non-empty");
    JonesMatrix out = ms[0];
    for (std::size_t i = 1; i < ms.size(); ++i) out = ms[i] * out;
    return out;
}

}  // namespace zenoptics

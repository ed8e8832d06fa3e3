#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace zenoptics {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// cos(pi*x), exact at half-integer x (returns exactly 0 / +-1 there).
///
/// Crossed polarizers, quarter-turn rotations and trace endpoints are all
/// quarter-turn cases; evaluating them through this kernel keeps "physically
/// zero" intensities at exactly 0.0 instead of ~1e-33.
inline double cos_pi(double x) {
    double r = std::fmod(std::fabs(x), 2.0);  // cos has period 2 in turns of pi
    double sign = 1.0;
    if (r >= 1.0) r = 2.0 - r;                // exact: both operands in [1,2]
    if (r > 0.5) {                            // cos(pi(1-r)) = -cos(pi r)
        r = 1.0 - r;                          // exact by Sterbenz for r in (0.5,1]
        sign = -1.0;
    }
    if (r == 0.5) return 0.0;
    if (r <= 0.25) return sign * std::cos(kPi * r);
    return sign * std::sin(kPi * (0.5 - r));  // 0.5-r exact, argument <= pi/4
}

/// sin(pi*x), exact at integer and half-integer x.
inline double sin_pi(double x) {
    double sign = (x < 0.0) ? -1.0 : 1.0;     // sin is odd
    double r = std::fmod(std::fabs(x), 2.0);
    if (r >= 1.0) {                           // sin(pi(1+r)) = -sin(pi r)
        r -= 1.0;
        sign = -sign;
    }
    if (r > 0.5) r = 1.0 - r;                 // sin(pi(1-r)) = sin(pi r)
    if (r == 0.0) return sign * 0.0;
    if (r <= 0.25) return sign * std::sin(kPi * r);
    return sign * std::cos(kPi * (0.5 - r));
}

/// cos of an angle in radians, routed through the half-turn-exact kernel.
/// double(pi/2)/double(pi) == 0.5 exactly, so the canonical quarter-turn
/// doubles land on the exact branch.
inline double cos_angle(double radians) { return cos_pi(radians / kPi); }

/// sin counterpart of cos_angle.
inline double sin_angle(double radians) { return sin_pi(radians / kPi); }

}  // namespace zenoptics

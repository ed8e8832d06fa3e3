#!/usr/bin/env python3
"""Regenerates tests/reference_values.hpp.

All expected values asserted by the C++ test suites are computed here with
mpmath at 60 significant digits, independently of the C++ implementation:

  * survival ratios  r(N) = [cos^2(a/N)]^N  for the default a = pi/2,
  * the deficit  N*(1-r(N))  and its limit a^2,
  * the Gaussian-jitter stage factor  E[cos^2(theta+eps)], eps ~ N(0, sigma^2),
    cross-checked against direct numerical quadrature before being emitted.

Run from the repository root:

    python3 tests/reference/generate_reference_values.py > tests/reference_values.hpp
"""

import mpmath as mp

mp.mp.dps = 60

PI = mp.pi
A = PI / 2


def ratio(n, ang=A):
    return (mp.cos(ang / n) ** 2) ** n


def deficit(n, ang=A):
    return n * (1 - ratio(n, ang))


def jitter_factor(theta, sigma):
    closed = mp.mpf(1) / 2 * (1 + mp.e ** (-2 * sigma**2) * mp.cos(2 * theta))
    # independent check: direct quadrature of the defining expectation
    pdf = lambda e: mp.e ** (-(e**2) / (2 * sigma**2)) / (sigma * mp.sqrt(2 * PI))
    quad = mp.quad(lambda e: mp.cos(theta + e) ** 2 * pdf(e), [-12 * sigma, 12 * sigma])
    assert abs(closed - quad) < mp.mpf(10) ** -25, (closed, quad)
    return closed


def emit(name, value, comment=""):
    tail = f"  // {comment}" if comment else ""
    print(f"inline constexpr double {name} = {mp.nstr(value, 17)};{tail}")


def main():
    print("// Generated by tests/reference/generate_reference_values.py -- do not edit.")
    print("// High-precision reference values (mpmath, 60 digits, rounded to binary64).")
    print("#pragma once")
    print()
    print("namespace zenoptics::testref {")
    print()
    print("// survival ratios r(N) = [cos^2(pi/(2N))]^N")
    for n in [2, 4, 8, 10, 16, 32, 100, 128, 256, 512, 1000, 1024]:
        emit(f"kRatio{n}", ratio(n))
    print()
    print("// N*(1 - r(N)) and its large-N limit (pi/2)^2")
    emit("kPiSqOver4", PI**2 / 4)
    emit("kDeficit100", deficit(100))
    emit("kDeficit1024", deficit(1024))
    print()
    print("// generalized-angle spot value: [cos^2((pi/3)/N)]^N at N=1")
    emit("kRatioPiThird1", ratio(1, PI / 3), "cos^2(pi/3)")
    print()
    print("// E[prod_i cos^2(theta + eps_i)] at N=16, theta=pi/32, eps ~ N(0, sigma^2)")
    emit("kJitterMean16Sigma005", jitter_factor(PI / 32, mp.mpf("0.05")) ** 16)
    emit("kJitterMean16Sigma020", jitter_factor(PI / 32, mp.mpf("0.2")) ** 16)
    print()
    print("// assorted exact trig")
    emit("kCosSqPi8", mp.cos(PI / 8) ** 2, "(2+sqrt(2))/4")
    print()
    print("}  // namespace zenoptics::testref")


if __name__ == "__main__":
    main()

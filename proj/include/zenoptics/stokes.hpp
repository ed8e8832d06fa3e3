#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "zenoptics/jones.hpp"

namespace zenoptics {

/// 4-component real intensity representation, handles partial polarization.
/// Sign convention: s1 = |ex|^2 - |ey|^2, s2 = 2 Re(ex* ey), s3 = 2 Im(ex* ey).
struct StokesVector {
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;

    double degree_of_polarization() const {
        if (s0 <= 0.0) return 0.0;
        return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3) / s0;
    }
};

inline StokesVector stokes_from_jones(const JonesVector& v) {
    const double ix = std::norm(v.ex);
    const double iy = std::norm(v.ey);
    const complexd cross = std::conj(v.ex) * v.ey;
    return {ix + iy, ix - iy, 2.0 * cross.real(), 2.0 * cross.imag()};
}

inline double intensity(const StokesVector& s) { return s.s0; }

/// 4x4 real transfer matrix acting on Stokes vectors, row-major.
struct MuellerMatrix {
    std::array<std::array<double, 4>, 4> m{};

    static MuellerMatrix identity() {
        MuellerMatrix out;
        for (int i = 0; i < 4; ++i) out.m[i][i] = 1.0;
        return out;
    }

    MuellerMatrix operator*(const MuellerMatrix& rhs) const {
        MuellerMatrix out;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                double acc = 0.0;
                for (int k = 0; k < 4; ++k) acc += m[r][k] * rhs.m[k][c];
                out.m[r][c] = acc;
            }
        return out;
    }
};

inline StokesVector apply(const MuellerMatrix& mm, const StokesVector& s) {
    const std::array<double, 4> in{s.s0, s.s1, s.s2, s.s3};
    std::array<double, 4> out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] += mm.m[r][c] * in[c];
    return {out[0], out[1], out[2], out[3]};
}

/// Standard lift of a Jones matrix to the Mueller picture:
///   M_ij = 1/2 Tr(sigma_i J sigma_j J^dag)
/// with sigma = {I, diag(1,-1), [[0,1],[1,0]], [[0,-i],[i,0]]} matching the
/// StokesVector sign convention.
inline MuellerMatrix mueller_from_jones(const JonesMatrix& j) {
    using M2 = std::array<std::array<complexd, 2>, 2>;
    static const std::array<M2, 4> sigma{{
        {{{complexd{1}, complexd{0}}, {complexd{0}, complexd{1}}}},
        {{{complexd{1}, complexd{0}}, {complexd{0}, complexd{-1}}}},
        {{{complexd{0}, complexd{1}}, {complexd{1}, complexd{0}}}},
        {{{complexd{0}, complexd{0, -1}}, {complexd{0, 1}, complexd{0}}}},
    }};

    M2 jdag;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) jdag[r][c] = std::conj(j.m[c][r]);

    auto mul = [](const M2& a, const M2& b) {
        M2 out{};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        return out;
    };

    MuellerMatrix out;
    for (int i = 0; i < 4; ++i) {
        const M2 left = mul(sigma[i], j.m);
        for (int k = 0; k < 4; ++k) {
            const M2 prod = mul(left, mul(sigma[k], jdag));
            out.m[i][k] = 0.5 * (prod[0][0] + prod[1][1]).real();
        }
    }
    return out;
}

/// Isotropic depolarizer diag(1, p, p, p): scales the degree of polarization
/// by exactly p while preserving total intensity.
inline MuellerMatrix depolarizer_mueller(double p) {
    if (!(std::isfinite(p) && p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("depolarizer_mueller: p must be in [0,1]");
    MuellerMatrix out;
    out.m[0][0] = 1.0;
    out.m[1][1] = p;
    out.m[2][2] = p;
    out.m[3][3] = p;
    return out;
}

}  // namespace zenoptics

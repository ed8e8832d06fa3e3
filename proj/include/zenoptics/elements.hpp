#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "zenoptics/jones.hpp"
#include "zenoptics/stokes.hpp"

namespace zenoptics {

// One physical element on the bench. Rotators occupy geometric length;
// polarizers, waveplates, attenuators and depolarizers are zero-length planes.

struct FaradayRotator {
    double angle = 0.0;   ///< net polarization rotation, radians
    double length = 0.0;  ///< geometric length, meters
};

struct LinearPolarizer {
    double axis = 0.0;        ///< transmission axis from +x, radians
    double extinction = 0.0;  ///< blocked-axis intensity leakage, [0,1)
};

struct Waveplate {
    double retardance = 0.0;  ///< radians
    double fast_axis = 0.0;   ///< radians
};

struct Attenuator {
    double transmittance = 1.0;  ///< [0,1]
};

struct Depolarizer {
    double p = 1.0;  ///< retained polarization fraction, [0,1]
};

using OpticalElement =
    std::variant<FaradayRotator, LinearPolarizer, Waveplate, Attenuator, Depolarizer>;

/// Short lowercase tag for reports ("faraday", "polarizer", ...).
std::string element_kind(const OpticalElement& el);

/// Ordered element sequence plus the input beam.
struct ElementChain {
    std::vector<OpticalElement> elements;
    JonesVector input;
    std::string label;

    /// Total geometric length: sum of rotator lengths.
    double total_length() const;
};

/// N equal Faraday rotators splitting `total_angle` and `total_length`,
/// fed by a linear y-polarized beam of intensity `input_intensity`.
ElementChain build_unmeasured_chain(std::size_t n, double total_angle, double total_length,
                                    double input_intensity);

/// As build_unmeasured_chain, but every rotator is followed by an ideal
/// linear polarizer at `measure_axis` (default: the y direction).
ElementChain build_measured_chain(std::size_t n, double total_angle, double total_length,
                                  double input_intensity, double measure_axis = kHalfPi);

/// Jones matrix of a single element. Throws for Depolarizer, which has no
/// Jones representation.
JonesMatrix jones_matrix(const OpticalElement& el);

/// Mueller matrix of a single element (lifted from Jones where applicable).
MuellerMatrix mueller_matrix(const OpticalElement& el);

bool has_depolarizer(const ElementChain& chain);

/// Beam state during propagation: Jones for fully polarized chains, Stokes
/// once any depolarizer forces the Mueller path.
using BeamState = std::variant<JonesVector, StokesVector>;

double intensity(const BeamState& state);

struct PropagationResult {
    BeamState output;                  ///< state after the last element
    std::vector<BeamState> after_each; ///< state after element k, one per element
};

/// Runs the beam through the chain. A chain containing any depolarizer is
/// propagated entirely in the Stokes/Mueller picture (one representation per
/// run); otherwise states stay Jones vectors.
PropagationResult propagate(const ElementChain& chain);

}  // namespace zenoptics

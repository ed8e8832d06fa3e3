#pragma once

#include <string>

#include "json.hpp"
#include "zenoptics/elements.hpp"

namespace zenoptics {

/// Chain description document:
///   {
///     "label": "optional text",
///     "input": {"intensity": number, "axis_deg": number},
///     "elements": [
///       {"kind": "faraday",     "angle_deg": number, "length_m": number},
///       {"kind": "polarizer",   "axis_deg": number, "extinction": number (optional, 0)},
///       {"kind": "waveplate",   "retardance_deg": number, "fast_axis_deg": number},
///       {"kind": "attenuator",  "transmittance": number},
///       {"kind": "depolarizer", "p": number}
///     ]
///   }
/// Throws std::invalid_argument naming the offending element index.
ElementChain chain_from_json(const nlohmann::json& doc);

/// Reads and parses a chain description file. JSON syntax errors surface as
/// nlohmann::json::parse_error (which carries the byte offset); missing file
/// throws std::runtime_error.
nlohmann::json load_chain_json(const std::string& path);

/// Propagation report: input/output intensity, per-element intensity, final
/// polarization state, total transmittance.
nlohmann::json chain_report(const ElementChain& chain);

}  // namespace zenoptics

#include "zenoptics/chain_json.hpp"

#include <fstream>
#include <stdexcept>

#include "zenoptics/trig.hpp"

namespace zenoptics {

namespace {

double deg2rad(double deg) { return (deg * kPi) / 180.0; }

double need_number(const nlohmann::json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number())
        throw std::invalid_argument(where + "." + key + ": required number is missing");
    return obj.at(key).get<double>();
}

double optional_number(const nlohmann::json& obj, const char* key, double fallback,
                       const std::string& where) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number())
        throw std::invalid_argument(where + "." + key + ": expected a number");
    return obj.at(key).get<double>();
}

OpticalElement element_from_json(const nlohmann::json& el, const std::string& where) {
    if (!el.is_object() || !el.contains("kind") || !el.at("kind").is_string())
        throw std::invalid_argument(where + ": element needs a string \"kind\"");
    const std::string kind = el.at("kind").get<std::string>();

    if (kind == "faraday")
        return FaradayRotator{deg2rad(need_number(el, "angle_deg", where)),
                              need_number(el, "length_m", where)};
    if (kind == "polarizer")
        return LinearPolarizer{deg2rad(need_number(el, "axis_deg", where)),
                               optional_number(el, "extinction", 0.0, where)};
    if (kind == "waveplate")
        return Waveplate{deg2rad(need_number(el, "retardance_deg", where)),
                         deg2rad(need_number(el, "fast_axis_deg", where))};
    if (kind == "attenuator")
        return Attenuator{need_number(el, "transmittance", where)};
    if (kind == "depolarizer") return Depolarizer{need_number(el, "p", where)};

    throw std::invalid_argument(where + ": unknown kind '" + kind + "'");
}

}  // namespace

ElementChain chain_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("chain: top level must be an object");

    ElementChain chain;
    if (doc.contains("label")) {
        if (!doc.at("label").is_string())
            throw std::invalid_argument("chain: label must be a string");
        chain.label = doc.at("label").get<std::string>();
    }

    if (!doc.contains("input"))
        throw std::invalid_argument("chain: missing \"input\" object");
    const nlohmann::json& input = doc.at("input");
    const double intensity = need_number(input, "intensity", "input");
    const double axis_deg = need_number(input, "axis_deg", "input");
    chain.input = JonesVector::linear_polarized(intensity, deg2rad(axis_deg));

    if (!doc.contains("elements") || !doc.at("elements").is_array())
        throw std::invalid_argument("chain: missing \"elements\" array");
    const nlohmann::json& elements = doc.at("elements");
    if (elements.empty()) throw std::invalid_argument("chain: elements must be non-empty");

    chain.elements.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
        chain.elements.push_back(
            element_from_json(elements.at(i), "elements[" + std::to_string(i) + "]"));
    return chain;
}

nlohmann::json load_chain_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open chain config '" + path + "'");
    return nlohmann::json::parse(in);  // parse_error propagates with position info
}

nlohmann::json chain_report(const ElementChain& chain) {
    const PropagationResult result = propagate(chain);
    const double in_intensity = intensity(chain.input);
    const double out_intensity = intensity(result.output);

    nlohmann::json report;
    if (!chain.label.empty()) report["label"] = chain.label;
    report["input_intensity"] = in_intensity;

    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < chain.elements.size(); ++i) {
        rows.push_back({{"index", i + 1},
                        {"kind", element_kind(chain.elements[i])},
                        {"intensity_after", intensity(result.after_each[i])}});
    }
    report["elements"] = rows;
    report["output_intensity"] = out_intensity;
    report["total_transmittance"] =
        in_intensity > 0.0 ? nlohmann::json(out_intensity / in_intensity)
                           : nlohmann::json(nullptr);

    if (const auto* jones = std::get_if<JonesVector>(&result.output)) {
        report["final_state"] = {{"type", "jones"},
                                 {"ex", {jones->ex.real(), jones->ex.imag()}},
                                 {"ey", {jones->ey.real(), jones->ey.imag()}}};
    } else {
        const auto& stokes = std::get<StokesVector>(result.output);
        report["final_state"] = {{"type", "stokes"},
                                 {"s", {stokes.s0, stokes.s1, stokes.s2, stokes.s3}}};
    }
    return report;
}

}  // namespace zenoptics

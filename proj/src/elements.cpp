#include "zenoptics/elements.hpp"

#include <cmath>
#include <stdexcept>

namespace zenoptics {

std::string element_kind(const OpticalElement& el) {
    return std::visit(
        [](const auto& e) -> std::string {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, FaradayRotator>) return "faraday";
            else if constexpr (std::is_same_v<T, LinearPolarizer>) return "polarizer";
            else if constexpr (std::is_same_v<T, Waveplate>) return "waveplate";
            else if constexpr (std::is_same_v<T, Attenuator>) return "attenuator";
            else return "depolarizer";
        },
        el);
}

double ElementChain::total_length() const {
    double sum = 0.0;
    for (const auto& el : elements)
        if (const auto* rot = std::get_if<FaradayRotator>(&el)) sum += rot->length;
    return sum;
}

namespace {

void check_chain_args(std::size_t n, double total_angle, double total_length,
                      double input_intensity) {
    if (n == 0)
        throw std::invalid_argument("chain builder: n must be >= 1");
    if (!std::isfinite(total_angle))
        throw std::invalid_argument("chain builder: total_angle must be finite");
    if (!(std::isfinite(total_length) && total_length > 0.0))
        throw std::invalid_argument("chain builder: total_length must be > 0");
    if (!(std::isfinite(input_intensity) && input_intensity >= 0.0))
        throw std::invalid_argument("chain builder: input_intensity must be >= 0");
}

}  // namespace

ElementChain build_unmeasured_chain(std::size_t n, double total_angle, double total_length,
                                    double input_intensity) {
    check_chain_args(n, total_angle, total_length, input_intensity);
    ElementChain chain;
    chain.label = "unmeasured";
    chain.input = JonesVector::linear_polarized(input_intensity, kHalfPi);
    chain.elements.reserve(n);
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        chain.elements.push_back(FaradayRotator{total_angle / nd, total_length / nd});
    return chain;
}

ElementChain build_measured_chain(std::size_t n, double total_angle, double total_length,
                                  double input_intensity, double measure_axis) {
    check_chain_args(n, total_angle, total_length, input_intensity);
    if (!std::isfinite(measure_axis))
        throw std::invalid_argument("chain builder: measure_axis must be finite");
    ElementChain chain;
    chain.label = "measured";
    chain.input = JonesVector::linear_polarized(input_intensity, kHalfPi);
    chain.elements.reserve(2 * n);
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        chain.elements.push_back(FaradayRotator{total_angle / nd, total_length / nd});
        chain.elements.push_back(LinearPolarizer{measure_axis, 0.0});
    }
    return chain;
}

JonesMatrix jones_matrix(const OpticalElement& el) {
    return std::visit(
        [](const auto& e) -> JonesMatrix {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, FaradayRotator>) return rotator_matrix(e.angle);
            else if constexpr (std::is_same_v<T, LinearPolarizer>)
                return polarizer_matrix(e.axis, e.extinction);
            else if constexpr (std::is_same_v<T, Waveplate>)
                return waveplate_matrix(e.retardance, e.fast_axis);
            else if constexpr (std::is_same_v<T, Attenuator>)
                return attenuator_matrix(e.transmittance);
            else
                throw std::invalid_argument("jones_matrix: depolarizer has no Jones form");
        },
        el);
}

MuellerMatrix mueller_matrix(const OpticalElement& el) {
    if (const auto* dep = std::get_if<Depolarizer>(&el)) return depolarizer_mueller(dep->p);
    return mueller_from_jones(jones_matrix(el));
}

bool has_depolarizer(const ElementChain& chain) {
    for (const auto& el : chain.elements)
        if (std::holds_alternative<Depolarizer>(el)) return true;
    return false;
}

double intensity(const BeamState& state) {
    return std::visit([](const auto& s) { return intensity(s); }, state);
}

PropagationResult propagate(const ElementChain& chain) {
    if (chain.elements.empty())
        throw std::invalid_argument("propagate: chain must be non-empty");

    PropagationResult result;
    result.after_each.reserve(chain.elements.size());

    if (has_depolarizer(chain)) {
        StokesVector state = stokes_from_jones(chain.input);
        for (const auto& el : chain.elements) {
            state = apply(mueller_matrix(el), state);
            result.after_each.emplace_back(state);
        }
        result.output = state;
    } else {
        JonesVector state = chain.input;
        for (const auto& el : chain.elements) {
            state = apply(jones_matrix(el), state);
            result.after_each.emplace_back(state);
        }
        result.output = state;
    }
    return result;
}

}  // namespace zenoptics

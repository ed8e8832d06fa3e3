#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "zenoptics/elements.hpp"
#include "zenoptics/stochastic.hpp"
#include "zenoptics/version.hpp"
#include "zenoptics/zeno.hpp"

namespace py = pybind11;
using namespace zenoptics;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Polarization element chains, projective measurements, and the optical "
              "Zeno effect (C++ core)";
    m.attr("__version__") = kVersion;

    py::class_<JonesVector>(m, "JonesVector")
        .def(py::init<>())
        .def_readwrite("ex", &JonesVector::ex)
        .def_readwrite("ey", &JonesVector::ey)
        .def_static("linear_polarized", &JonesVector::linear_polarized, py::arg("intensity"),
                    py::arg("axis"))
        .def("__repr__", [](const JonesVector& v) {
            return "JonesVector(ex=(" + std::to_string(v.ex.real()) + "+" +
                   std::to_string(v.ex.imag()) + "j), ey=(" + std::to_string(v.ey.real()) +
                   "+" + std::to_string(v.ey.imag()) + "j))";
        });

    py::class_<StokesVector>(m, "StokesVector")
        .def(py::init<>())
        .def_readwrite("s0", &StokesVector::s0)
        .def_readwrite("s1", &StokesVector::s1)
        .def_readwrite("s2", &StokesVector::s2)
        .def_readwrite("s3", &StokesVector::s3)
        .def("degree_of_polarization", &StokesVector::degree_of_polarization)
        .def("__repr__", [](const StokesVector& s) {
            return "StokesVector(" + std::to_string(s.s0) + ", " + std::to_string(s.s1) +
                   ", " + std::to_string(s.s2) + ", " + std::to_string(s.s3) + ")";
        });

    m.def("stokes_from_jones", &stokes_from_jones, py::arg("jones"));
    m.def("intensity", [](const JonesVector& v) { return intensity(v); }, py::arg("state"));
    m.def("intensity", [](const StokesVector& s) { return intensity(s); }, py::arg("state"));
    m.def("intensity_along", &intensity_along, py::arg("jones"), py::arg("axis"));

    py::class_<FaradayRotator>(m, "FaradayRotator")
        .def(py::init<double, double>(), py::arg("angle"), py::arg("length"))
        .def_readwrite("angle", &FaradayRotator::angle)
        .def_readwrite("length", &FaradayRotator::length);
    py::class_<LinearPolarizer>(m, "LinearPolarizer")
        .def(py::init<double, double>(), py::arg("axis"), py::arg("extinction") = 0.0)
        .def_readwrite("axis", &LinearPolarizer::axis)
        .def_readwrite("extinction", &LinearPolarizer::extinction);
    py::class_<Waveplate>(m, "Waveplate")
        .def(py::init<double, double>(), py::arg("retardance"), py::arg("fast_axis"))
        .def_readwrite("retardance", &Waveplate::retardance)
        .def_readwrite("fast_axis", &Waveplate::fast_axis);
    py::class_<Attenuator>(m, "Attenuator")
        .def(py::init<double>(), py::arg("transmittance"))
        .def_readwrite("transmittance", &Attenuator::transmittance);
    py::class_<Depolarizer>(m, "Depolarizer")
        .def(py::init<double>(), py::arg("p"))
        .def_readwrite("p", &Depolarizer::p);

    py::class_<ElementChain>(m, "ElementChain")
        .def(py::init<>())
        .def(py::init([](std::vector<OpticalElement> elements, JonesVector input,
                         std::string label) {
                 ElementChain chain;
                 chain.elements = std::move(elements);
                 chain.input = input;
                 chain.label = std::move(label);
                 return chain;
             }),
             py::arg("elements"), py::arg("input"), py::arg("label") = "")
        .def_readwrite("elements", &ElementChain::elements)
        .def_readwrite("input", &ElementChain::input)
        .def_readwrite("label", &ElementChain::label)
        .def("total_length", &ElementChain::total_length);

    m.def("build_unmeasured_chain", &build_unmeasured_chain, py::arg("n"),
          py::arg("total_angle"), py::arg("total_length"), py::arg("input_intensity"));
    m.def("build_measured_chain", &build_measured_chain, py::arg("n"),
          py::arg("total_angle"), py::arg("total_length"), py::arg("input_intensity"),
          py::arg("measure_axis") = kHalfPi);

    py::class_<PropagationResult>(m, "PropagationResult")
        .def_readonly("output", &PropagationResult::output)
        .def_readonly("after_each", &PropagationResult::after_each);
    m.def("propagate", &propagate, py::arg("chain"));

    py::class_<ZenoConfig>(m, "ZenoConfig")
        .def(py::init<>())
        .def_readwrite("n", &ZenoConfig::n)
        .def_readwrite("i0", &ZenoConfig::i0)
        .def_readwrite("length", &ZenoConfig::length)
        .def_readwrite("total_angle", &ZenoConfig::total_angle);

    py::enum_<TraceKind>(m, "TraceKind")
        .value("continuous", TraceKind::continuous)
        .value("measured", TraceKind::measured);

    py::class_<TracePoint>(m, "TracePoint")
        .def_readonly("z", &TracePoint::z)
        .def_readonly("intensity", &TracePoint::intensity);
    py::class_<IntensityTrace>(m, "IntensityTrace")
        .def_readonly("points", &IntensityTrace::points)
        .def_readonly("config", &IntensityTrace::config)
        .def_readonly("kind", &IntensityTrace::kind);
    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("n", &SweepRow::n)
        .def_readonly("ratio", &SweepRow::ratio);
    py::class_<ZenoSweepResult>(m, "ZenoSweepResult")
        .def_readonly("rows", &ZenoSweepResult::rows);

    m.def("continuous_intensity", &continuous_intensity, py::arg("config"), py::arg("z"));
    m.def("measured_intensity", &measured_intensity, py::arg("config"), py::arg("z"));
    m.def("segment_of", &segment_of, py::arg("config"), py::arg("z"));
    m.def("zeno_output", &zeno_output, py::arg("config"));
    m.def("zeno_ratio", &zeno_ratio, py::arg("n"), py::arg("total_angle") = kHalfPi);
    m.def("sample_trace", &sample_trace, py::arg("config"), py::arg("kind"),
          py::arg("samples_per_segment"));
    m.def(
        "zeno_sweep",
        [](const std::vector<std::size_t>& ns, const ZenoConfig& base) {
            return zeno_sweep(std::span<const std::size_t>(ns.data(), ns.size()), base);
        },
        py::arg("ns"), py::arg("base") = ZenoConfig{});
    m.def("asymptotic_deficit", &asymptotic_deficit, py::arg("n"),
          py::arg("total_angle") = kHalfPi);

    py::class_<MonteCarloConfig>(m, "MonteCarloConfig")
        .def(py::init<>())
        .def_readwrite("n", &MonteCarloConfig::n)
        .def_readwrite("photons", &MonteCarloConfig::photons)
        .def_readwrite("seed", &MonteCarloConfig::seed)
        .def_readwrite("total_angle", &MonteCarloConfig::total_angle)
        .def_readwrite("chunk_size", &MonteCarloConfig::chunk_size)
        .def_readwrite("threads", &MonteCarloConfig::threads);
    py::class_<SurvivalEstimate>(m, "SurvivalEstimate")
        .def_readonly("mean", &SurvivalEstimate::mean)
        .def_readonly("std_error", &SurvivalEstimate::std_error)
        .def_readonly("survivors", &SurvivalEstimate::survivors)
        .def_readonly("photons", &SurvivalEstimate::photons);
    py::class_<McCheck>(m, "McCheck")
        .def_readonly("estimate", &McCheck::estimate)
        .def_readonly("exact", &McCheck::exact)
        .def_readonly("z_score", &McCheck::z_score);
    m.def("mc_survival", &mc_survival, py::arg("config"));
    m.def("mc_survival_exact_check", &mc_survival_exact_check, py::arg("config"));

    py::class_<JitterConfig>(m, "JitterConfig")
        .def(py::init<>())
        .def_readwrite("n", &JitterConfig::n)
        .def_readwrite("sigma", &JitterConfig::sigma)
        .def_readwrite("trials", &JitterConfig::trials)
        .def_readwrite("seed", &JitterConfig::seed)
        .def_readwrite("total_angle", &JitterConfig::total_angle);
    py::class_<JitterResult>(m, "JitterResult")
        .def_readonly("mean_ratio", &JitterResult::mean_ratio)
        .def_readonly("std_dev", &JitterResult::std_dev)
        .def_readonly("trials", &JitterResult::trials);
    m.def("jittered_output", &jittered_output, py::arg("config"));
}

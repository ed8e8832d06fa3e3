#include "zenoptics/zeno.hpp"

#include <cmath>
#include <stdexcept>

namespace zenoptics {

void ZenoConfig::validate() const {
    if (n == 0) throw std::invalid_argument("ZenoConfig: n must be >= 1");
    if (!(std::isfinite(i0) && i0 >= 0.0))
        throw std::invalid_argument("ZenoConfig: i0 must be finite and >= 0");
    if (!(std::isfinite(length) && length > 0.0))
        throw std::invalid_argument("ZenoConfig: length must be > 0");
    if (!std::isfinite(total_angle))
        throw std::invalid_argument("ZenoConfig: total_angle must be finite");
}

namespace {

void check_z(const ZenoConfig& cfg, double z) {
    if (!(z >= 0.0 && z <= cfg.length))
        throw std::domain_error("z must lie in [0, length]");
}

double square(double x) { return x * x; }

}  // namespace

double continuous_intensity(const ZenoConfig& cfg, double z) {
    cfg.validate();
    check_z(cfg, z);
    const double turns = cfg.total_angle / kPi;  // angle as a fraction of pi
    return cfg.i0 * square(cos_pi(turns * (z / cfg.length)));
}

std::size_t segment_of(const ZenoConfig& cfg, double z) {
    cfg.validate();
    check_z(cfg, z);
    const double w = z * static_cast<double>(cfg.n) / cfg.length;
    auto i = static_cast<std::size_t>(std::floor(w)) + 1;
    return (i > cfg.n) ? cfg.n : i;  // z = length belongs to the last medium
}

double measured_intensity(const ZenoConfig& cfg, double z) {
    const std::size_t i = segment_of(cfg, z);
    const double nd = static_cast<double>(cfg.n);
    const double turns = cfg.total_angle / kPi;
    const double stage = square(cos_pi(turns / nd));
    // position within medium i, in units of one segment length
    const double w = z * nd / cfg.length;
    const double local = w - static_cast<double>(i - 1);
    const double base = std::pow(stage, static_cast<double>(i - 1));
    return cfg.i0 * base * square(cos_pi(turns * local / nd));
}

namespace {

// log of the per-stage survival cos^2(u), written as log1p(-sin^2 u) so the
// value stays accurate while u -> 0 and cos(u) crowds against 1.
double log_stage_survival(std::size_t n, double total_angle) {
    const double s = sin_pi(total_angle / kPi / static_cast<double>(n));
    return std::log1p(-s * s);
}

}  // namespace

double zeno_ratio(std::size_t n, double total_angle) {
    if (n == 0) throw std::invalid_argument("zeno_ratio: n must be >= 1");
    if (!std::isfinite(total_angle))
        throw std::invalid_argument("zeno_ratio: total_angle must be finite");
    const double nd = static_cast<double>(n);
    if (n <= 1024) {
        // Literal per-stage product, so results line up with explicitly
        // composed benches down to a few ulp.
        const double c = cos_pi(total_angle / kPi / nd);
        return std::pow(c * c, nd);
    }
    return std::exp(nd * log_stage_survival(n, total_angle));
}

double zeno_output(const ZenoConfig& cfg) {
    cfg.validate();
    return cfg.i0 * zeno_ratio(cfg.n, cfg.total_angle);
}

IntensityTrace sample_trace(const ZenoConfig& cfg, TraceKind kind,
                            std::size_t samples_per_segment) {
    cfg.validate();
    if (samples_per_segment < 2)
        throw std::invalid_argument("sample_trace: samples_per_segment must be >= 2");

    IntensityTrace trace;
    trace.config = cfg;
    trace.kind = kind;
    const double nd = static_cast<double>(cfg.n);

    if (kind == TraceKind::continuous) {
        const std::size_t total = cfg.n * samples_per_segment;
        trace.points.reserve(total + 1);
        for (std::size_t j = 0; j <= total; ++j) {
            const double frac = static_cast<double>(j) / static_cast<double>(total);
            const double z = cfg.length * frac;
            trace.points.push_back({z, continuous_intensity(cfg, z)});
        }
    } else {
        const double steps = static_cast<double>(samples_per_segment - 1);
        trace.points.reserve(cfg.n * (samples_per_segment - 1) + 1);
        for (std::size_t seg = 0; seg < cfg.n; ++seg) {
            // j = 0 duplicates the previous segment's right endpoint
            const std::size_t first = (seg == 0) ? 0 : 1;
            for (std::size_t j = first; j < samples_per_segment; ++j) {
                const double u = static_cast<double>(seg) + static_cast<double>(j) / steps;
                const double z = cfg.length * (u / nd);
                trace.points.push_back({z, measured_intensity(cfg, z)});
            }
        }
    }
    return trace;
}

ZenoSweepResult zeno_sweep(std::span<const std::size_t> ns, const ZenoConfig& base) {
    base.validate();
    if (ns.empty()) throw std::invalid_argument("zeno_sweep: n list must be non-empty");
    ZenoSweepResult result;
    result.rows.reserve(ns.size());
    for (std::size_t n : ns) result.rows.push_back({n, zeno_ratio(n, base.total_angle)});
    return result;
}

double asymptotic_deficit(std::size_t n, double total_angle) {
    if (n == 0) throw std::invalid_argument("asymptotic_deficit: n must be >= 1");
    if (!std::isfinite(total_angle))
        throw std::invalid_argument("asymptotic_deficit: total_angle must be finite");
    // n * (1 - ratio), but free of the cancellation a literal 1 - ratio hits
    // once the ratio crowds against 1.
    const double nd = static_cast<double>(n);
    return -nd * std::expm1(nd * log_stage_survival(n, total_angle));
}

}  // namespace zenoptics

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string_view>
#include <utility>

#include "zenoptics/chain_json.hpp"
#include "zenoptics/csv.hpp"
#include "zenoptics/manifest.hpp"
#include "zenoptics/stochastic.hpp"
#include "zenoptics/svg.hpp"
#include "zenoptics/trig.hpp"
#include "zenoptics/version.hpp"
#include "zenoptics/zeno.hpp"

namespace zenoptics::cli {

namespace {

namespace fs = std::filesystem;

void write_text_file(const fs::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

/// Collects output files under one prefix and finishes with the manifest.
struct Emitter {
    std::string prefix;
    RunManifest manifest;

    Emitter(std::string prefix_, std::string command, nlohmann::json config)
        : prefix(std::move(prefix_)) {
        const fs::path parent = fs::path(prefix).parent_path();
        if (!parent.empty()) fs::create_directories(parent);
        manifest.command = std::move(command);
        manifest.config = std::move(config);
        manifest.version = kVersion;
        manifest.timestamp_utc = utc_timestamp();
    }

    void emit(const std::string& stem_suffix, const std::string& ext,
              std::string_view content) {
        const fs::path path = prefix + stem_suffix + "." + ext;
        write_text_file(path, content);
        manifest.outputs.push_back(path.filename().string());
    }

    void finish() { write_manifest(prefix + ".manifest.json", manifest); }
};

void validate_format(const std::string& format) {
    if (format != "csv" && format != "json" && format != "svg" && format != "all")
        throw UsageError("--format must be csv, json, svg or all (got '" + format + "')");
}

nlohmann::json trace_json(const IntensityTrace& trace) {
    nlohmann::json points = nlohmann::json::array();
    for (const TracePoint& p : trace.points) points.push_back({p.z, p.intensity});
    return {{"kind", trace.kind == TraceKind::measured ? "measured" : "continuous"},
            {"n", trace.config.n},
            {"i0", trace.config.i0},
            {"length", trace.config.length},
            {"total_angle_rad", trace.config.total_angle},
            {"points", std::move(points)}};
}

nlohmann::json sweep_json(const ZenoSweepResult& sweep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& r : sweep.rows)
        rows.push_back({r.n, r.ratio, asymptotic_deficit(r.n)});
    return {{"rows", std::move(rows)}, {"total_angle_rad", kHalfPi}};
}

int run_chain_doc(const nlohmann::json& doc, const std::string& out_prefix) {
    const ElementChain chain = chain_from_json(doc);
    const nlohmann::json report = chain_report(chain);
    if (out_prefix.empty()) {
        std::cout << report.dump(2) << '\n';
        return 0;
    }
    Emitter emitter(out_prefix, "chain", nlohmann::json{{"chain", doc}});
    emitter.emit("", "json", report.dump(2) + "\n");
    emitter.finish();
    return 0;
}

}  // namespace

int run_trace(const TraceOptions& opt) {
    if (opt.ns.empty()) throw UsageError("--n needs at least one value");
    for (std::size_t n : opt.ns)
        if (n == 0) throw UsageError("--n values must be >= 1");
    if (opt.samples_per_segment < 2)
        throw UsageError("--samples-per-segment must be >= 2");
    if (!(opt.length > 0.0) || !std::isfinite(opt.length))
        throw UsageError("--length must be a positive number");
    if (!(opt.i0 >= 0.0) || !std::isfinite(opt.i0))
        throw UsageError("--i0 must be a non-negative number");
    if (!std::isfinite(opt.total_angle)) throw UsageError("--total-angle must be finite");
    if (opt.kind != "continuous" && opt.kind != "measured" && opt.kind != "both")
        throw UsageError("--kind must be continuous, measured or both (got '" + opt.kind +
                         "')");
    validate_format(opt.format);

    const auto config_for = [&](std::size_t n) {
        ZenoConfig cfg;
        cfg.n = n;
        cfg.i0 = opt.i0;
        cfg.length = opt.length;
        cfg.total_angle = opt.total_angle;
        return cfg;
    };

    struct Curve {
        std::string stem;
        std::string name;
        IntensityTrace trace;
    };
    std::vector<Curve> curves;
    const bool both = opt.kind == "both";

    if (both) {
        // The no-measurement curve is the same for every N; sample it once on
        // the finest grid.
        const std::size_t finest = *std::max_element(opt.ns.begin(), opt.ns.end());
        curves.push_back({"_continuous", "continuous",
                          sample_trace(config_for(finest), TraceKind::continuous,
                                       opt.samples_per_segment)});
        for (std::size_t n : opt.ns)
            curves.push_back({"_N" + std::to_string(n) + "_measured",
                              "N=" + std::to_string(n),
                              sample_trace(config_for(n), TraceKind::measured,
                                           opt.samples_per_segment)});
    } else {
        const TraceKind kind =
            opt.kind == "measured" ? TraceKind::measured : TraceKind::continuous;
        for (std::size_t n : opt.ns)
            curves.push_back({"_N" + std::to_string(n), "N=" + std::to_string(n),
                              sample_trace(config_for(n), kind, opt.samples_per_segment)});
    }

    const auto plot = [&] {
        PlotSpec spec;
        spec.title = "Polarization intensity along the bench";
        spec.x_label = "z (m)";
        spec.y_label = "intensity";
        spec.y_max = 1.05 * (opt.i0 > 0.0 ? opt.i0 : 1.0);
        for (const Curve& c : curves) {
            Series s;
            s.name = c.name;
            s.points.reserve(c.trace.points.size());
            for (const TracePoint& p : c.trace.points) s.points.push_back({p.z, p.intensity});
            spec.series.push_back(std::move(s));
        }
        return render_svg(spec);
    };

    if (opt.out_prefix.empty()) {
        if (opt.ns.size() != 1 || both)
            throw UsageError(
                "trace without --out-prefix prints a single curve: pass exactly one --n and "
                "--kind continuous or measured");
        const std::string format = opt.format == "all" ? "csv" : opt.format;
        if (format == "csv")
            std::cout << trace_csv(curves[0].trace);
        else if (format == "json")
            std::cout << trace_json(curves[0].trace).dump(2) << '\n';
        else
            std::cout << plot();
        return 0;
    }

    Emitter emitter(opt.out_prefix, "trace", trace_config_json(opt));
    const bool want_csv = opt.format == "csv" || opt.format == "all";
    const bool want_json = opt.format == "json" || opt.format == "all";
    const bool want_svg = opt.format == "svg" || opt.format == "all";
    for (const Curve& c : curves) {
        if (want_csv) emitter.emit(c.stem, "csv", trace_csv(c.trace));
        if (want_json) emitter.emit(c.stem, "json", trace_json(c.trace).dump(2) + "\n");
    }
    if (want_svg) emitter.emit("", "svg", plot());
    emitter.finish();
    return 0;
}

int run_sweep(const SweepOptions& opt) {
    if (opt.n_min == 0) throw UsageError("--n-min must be >= 1");
    if (opt.n_min > opt.n_max) throw UsageError("--n-min exceeds --n-max");
    validate_format(opt.format);

    std::vector<std::size_t> ns;
    for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) ns.push_back(n);
    std::size_t p = 1;
    while (p <= opt.n_max && p != 0) p *= 2;
    for (; p != 0 && p <= opt.extra_powers_to; p *= 2) ns.push_back(p);

    const ZenoSweepResult sweep = zeno_sweep(ns, ZenoConfig{});

    const auto plot = [&] {
        PlotSpec spec;
        spec.title = "Output intensity ratio vs measurement count";
        spec.x_label = "N";
        spec.y_label = "I_out / I0";
        spec.log_x = opt.log_x;
        Series s;
        s.name = "ratio";
        s.points.reserve(sweep.rows.size());
        for (const SweepRow& r : sweep.rows)
            s.points.push_back({static_cast<double>(r.n), r.ratio});
        spec.series.push_back(std::move(s));
        return render_svg(spec);
    };

    if (opt.out_prefix.empty()) {
        const std::string format = opt.format == "all" ? "csv" : opt.format;
        if (format == "csv")
            std::cout << sweep_csv(sweep);
        else if (format == "json")
            std::cout << sweep_json(sweep).dump(2) << '\n';
        else
            std::cout << plot();
        return 0;
    }

    Emitter emitter(opt.out_prefix, "sweep", sweep_config_json(opt));
    if (opt.format == "csv" || opt.format == "all") emitter.emit("", "csv", sweep_csv(sweep));
    if (opt.format == "json" || opt.format == "all")
        emitter.emit("", "json", sweep_json(sweep).dump(2) + "\n");
    if (opt.format == "svg" || opt.format == "all") emitter.emit("", "svg", plot());
    emitter.finish();
    return 0;
}

int run_mc(const McOptions& opt) {
    if (opt.n == 0) throw UsageError("--n is required and must be >= 1");
    if (opt.photons == 0) throw UsageError("--photons must be >= 1");

    MonteCarloConfig cfg;
    cfg.n = opt.n;
    cfg.photons = opt.photons;
    cfg.seed = opt.seed;
    const McCheck check = mc_survival_exact_check(cfg);

    const nlohmann::json doc = {
        {"n", opt.n},           {"photons", opt.photons},
        {"seed", opt.seed},     {"mean", check.estimate.mean},
        {"std_error", check.estimate.std_error},
        {"exact", check.exact}, {"z_score", check.z_score}};

    if (opt.out_prefix.empty()) {
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    Emitter emitter(opt.out_prefix, "mc", mc_config_json(opt));
    emitter.emit("", "json", doc.dump(2) + "\n");
    emitter.finish();
    return 0;
}

int run_chain(const ChainOptions& opt) {
    if (opt.config_path.empty()) throw UsageError("--config is required");
    return run_chain_doc(load_chain_json(opt.config_path), opt.out_prefix);
}

int run_rerun(const std::string& manifest_path, std::string out_prefix) {
    if (manifest_path.empty()) throw UsageError("--manifest is required");
    const RunManifest manifest = read_manifest(manifest_path);

    if (out_prefix.empty()) {
        constexpr std::string_view kSuffix = ".manifest.json";
        if (manifest_path.size() > kSuffix.size() &&
            manifest_path.compare(manifest_path.size() - kSuffix.size(), kSuffix.size(),
                                  kSuffix) == 0) {
            out_prefix = manifest_path.substr(0, manifest_path.size() - kSuffix.size());
        } else {
            throw UsageError(
                "rerun: manifest name does not end in .manifest.json; pass --out-prefix");
        }
    }

    if (manifest.command == "trace") {
        TraceOptions opt = trace_options_from_config(manifest.config);
        opt.out_prefix = out_prefix;
        return run_trace(opt);
    }
    if (manifest.command == "sweep") {
        SweepOptions opt = sweep_options_from_config(manifest.config);
        opt.out_prefix = out_prefix;
        return run_sweep(opt);
    }
    if (manifest.command == "mc") {
        McOptions opt = mc_options_from_config(manifest.config);
        opt.out_prefix = out_prefix;
        return run_mc(opt);
    }
    if (manifest.command == "chain") {
        if (!manifest.config.contains("chain"))
            throw UsageError("manifest config for chain is missing the chain document");
        return run_chain_doc(manifest.config.at("chain"), out_prefix);
    }
    throw UsageError("rerun: unsupported command '" + manifest.command + "'");
}

nlohmann::json trace_config_json(const TraceOptions& opt) {
    return {{"ns", opt.ns},
            {"samples_per_segment", opt.samples_per_segment},
            {"total_angle_rad", opt.total_angle},
            {"length", opt.length},
            {"i0", opt.i0},
            {"kind", opt.kind},
            {"format", opt.format}};
}

nlohmann::json sweep_config_json(const SweepOptions& opt) {
    return {{"n_min", opt.n_min},
            {"n_max", opt.n_max},
            {"extra_powers_to", opt.extra_powers_to},
            {"log_x", opt.log_x},
            {"format", opt.format}};
}

nlohmann::json mc_config_json(const McOptions& opt) {
    return {{"n", opt.n}, {"photons", opt.photons}, {"seed", opt.seed}};
}

TraceOptions trace_options_from_config(const nlohmann::json& config) {
    TraceOptions opt;
    try {
        opt.ns = config.at("ns").get<std::vector<std::size_t>>();
        opt.samples_per_segment = config.at("samples_per_segment").get<std::size_t>();
        opt.total_angle = config.at("total_angle_rad").get<double>();
        opt.length = config.at("length").get<double>();
        opt.i0 = config.at("i0").get<double>();
        opt.kind = config.at("kind").get<std::string>();
        opt.format = config.at("format").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("manifest config for trace is incomplete: ") + e.what());
    }
    return opt;
}

SweepOptions sweep_options_from_config(const nlohmann::json& config) {
    SweepOptions opt;
    try {
        opt.n_min = config.at("n_min").get<std::size_t>();
        opt.n_max = config.at("n_max").get<std::size_t>();
        opt.extra_powers_to = config.at("extra_powers_to").get<std::size_t>();
        opt.log_x = config.at("log_x").get<bool>();
        opt.format = config.at("format").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("manifest config for sweep is incomplete: ") + e.what());
    }
    return opt;
}

McOptions mc_options_from_config(const nlohmann::json& config) {
    McOptions opt;
    try {
        opt.n = config.at("n").get<std::size_t>();
        opt.photons = config.at("photons").get<std::size_t>();
        opt.seed = config.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("manifest config for mc is incomplete: ") + e.what());
    }
    return opt;
}

}  // namespace zenoptics::cli

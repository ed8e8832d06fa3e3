#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "zenoptics/units.hpp"
#include "zenoptics/version.hpp"

int main(int argc, char** argv) {
    using namespace zenoptics::cli;

    CLI::App app{
        "zenoptics: polarization benches, projective measurements, and the optical Zeno "
        "effect"};
    app.require_subcommand(1);
    app.set_version_flag("--version", zenoptics::kVersion);

    TraceOptions trace_opt;
    std::string trace_angle = "90deg";
    CLI::App* trace = app.add_subcommand("trace", "Sample intensity-vs-distance curves");
    trace->add_option("--n", trace_opt.ns,
                      "Measurement counts (repeatable or comma-separated)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    trace->add_option("--samples-per-segment", trace_opt.samples_per_segment,
                      "Sample points per medium, endpoints included (>= 2)")
        ->capture_default_str();
    trace->add_option("--total-angle", trace_angle,
                      "Net rotation with unit suffix, e.g. 90deg or 1.5708rad")
        ->capture_default_str();
    trace->add_option("--length", trace_opt.length, "Total bench length in meters")
        ->capture_default_str();
    trace->add_option("--i0", trace_opt.i0, "Input intensity")->capture_default_str();
    trace->add_option("--kind", trace_opt.kind, "continuous | measured | both")
        ->capture_default_str();
    trace->add_option("--format", trace_opt.format, "csv | json | svg | all")
        ->capture_default_str();
    trace->add_option("--out-prefix", trace_opt.out_prefix,
                      "Output path prefix; omit to print a single curve to stdout");

    SweepOptions sweep_opt;
    CLI::App* sweep =
        app.add_subcommand("sweep", "Output ratio as a function of the measurement count");
    sweep->add_option("--n-min", sweep_opt.n_min, "Smallest N")->capture_default_str();
    sweep->add_option("--n-max", sweep_opt.n_max, "Largest N of the dense range")
        ->capture_default_str();
    sweep->add_option("--extra-powers-to", sweep_opt.extra_powers_to,
                      "Also include powers of two past n-max, up to this value")
        ->capture_default_str();
    sweep->add_flag("--log-x", sweep_opt.log_x, "Logarithmic N axis in the figure");
    sweep->add_option("--format", sweep_opt.format, "csv | json | svg | all")
        ->capture_default_str();
    sweep->add_option("--out-prefix", sweep_opt.out_prefix,
                      "Output path prefix; omit to print to stdout");

    McOptions mc_opt;
    CLI::App* mc =
        app.add_subcommand("mc", "Photon-counting check of the measured-chain ratio");
    mc->add_option("--n", mc_opt.n, "Measurement count")
        ->required()
        ->check(CLI::PositiveNumber);
    mc->add_option("--photons", mc_opt.photons, "Photons to simulate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    mc->add_option("--seed", mc_opt.seed, "Random seed")->capture_default_str();
    mc->add_option("--out-prefix", mc_opt.out_prefix,
                   "Output path prefix; omit to print JSON to stdout");

    ChainOptions chain_opt;
    CLI::App* chain =
        app.add_subcommand("chain", "Propagate a beam through a chain description file");
    chain->add_option("--config", chain_opt.config_path, "Path to the chain JSON")
        ->required();
    chain->add_option("--out-prefix", chain_opt.out_prefix,
                      "Output path prefix; omit to print the report to stdout");

    std::string rerun_manifest;
    std::string rerun_prefix;
    CLI::App* rerun =
        app.add_subcommand("rerun", "Re-execute a recorded run from its manifest");
    rerun->add_option("--manifest", rerun_manifest, "Path to a .manifest.json file")
        ->required();
    rerun->add_option("--out-prefix", rerun_prefix,
                      "Where to write the regenerated files (default: next to the manifest)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(trace)) {
            try {
                trace_opt.total_angle = zenoptics::parse_angle(trace_angle);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--total-angle: ") + e.what());
            }
            return run_trace(trace_opt);
        }
        if (app.got_subcommand(sweep)) return run_sweep(sweep_opt);
        if (app.got_subcommand(mc)) return run_mc(mc_opt);
        if (app.got_subcommand(chain)) return run_chain(chain_opt);
        if (app.got_subcommand(rerun)) return run_rerun(rerun_manifest, rerun_prefix);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace zenoptics::cli {

/// Semantic flag errors (bad values, inconsistent combinations). main() maps
/// these to exit code 2; every other std::exception maps to exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TraceOptions {
    std::vector<std::size_t> ns{1, 2, 4, 8, 16, 32};
    std::size_t samples_per_segment = 50;
    double total_angle = 0.0;  ///< radians, resolved from the flag text
    double length = 1.0;
    double i0 = 1.0;
    std::string kind = "both";    ///< continuous | measured | both
    std::string format = "all";   ///< csv | json | svg | all
    std::string out_prefix;       ///< empty: single curve to stdout
};

struct SweepOptions {
    std::size_t n_min = 1;
    std::size_t n_max = 100;
    std::size_t extra_powers_to = 1024;  ///< powers of two appended past n_max
    bool log_x = false;
    std::string format = "all";
    std::string out_prefix;
};

struct McOptions {
    std::size_t n = 0;  ///< required
    std::size_t photons = 1'000'000;
    std::uint64_t seed = 42;
    std::string out_prefix;
};

struct ChainOptions {
    std::string config_path;
    std::string out_prefix;
};

int run_trace(const TraceOptions& opt);
int run_sweep(const SweepOptions& opt);
int run_mc(const McOptions& opt);
int run_chain(const ChainOptions& opt);

/// Re-executes the command recorded in a manifest. With an empty prefix the
/// original one is recovered from the manifest's own file name
/// (`<prefix>.manifest.json`).
int run_rerun(const std::string& manifest_path, std::string out_prefix);

/// Fully-resolved config blocks stored in manifests (and read back by rerun).
nlohmann::json trace_config_json(const TraceOptions& opt);
nlohmann::json sweep_config_json(const SweepOptions& opt);
nlohmann::json mc_config_json(const McOptions& opt);
TraceOptions trace_options_from_config(const nlohmann::json& config);
SweepOptions sweep_options_from_config(const nlohmann::json& config);
McOptions mc_options_from_config(const nlohmann::json& config);

}  // namespace zenoptics::cli

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace zenoptics {

/// Record of one CLI run: the subcommand, its fully-resolved configuration
/// (every default materialized, angles in radians), and the files written.
/// Feeding a manifest back through `rerun` regenerates the data files
/// byte-identically; only the manifest's own timestamp differs.
struct RunManifest {
    std::string command;
    nlohmann::json config;
    std::vector<std::string> outputs;  ///< file names, relative to the manifest
    std::string version;
    std::string timestamp_utc;
};

/// Current UTC time as ISO-8601 "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

nlohmann::json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& doc);

void write_manifest(const std::string& path, const RunManifest& manifest);
RunManifest read_manifest(const std::string& path);

}  // namespace zenoptics

#include "zenoptics/manifest.hpp"

#include <ctime>
#include <fstream>
#include <stdexcept>

#include "zenoptics/version.hpp"

namespace zenoptics {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::json manifest_to_json(const RunManifest& manifest) {
    return {{"command", manifest.command},
            {"config", manifest.config},
            {"outputs", manifest.outputs},
            {"timestamp_utc", manifest.timestamp_utc},
            {"version", manifest.version}};
}

RunManifest manifest_from_json(const nlohmann::json& doc) {
    for (const char* key : {"command", "config", "outputs", "timestamp_utc", "version"})
        if (!doc.is_object() || !doc.contains(key))
            throw std::invalid_argument(std::string("manifest: missing key '") + key + "'");

    RunManifest manifest;
    manifest.command = doc.at("command").get<std::string>();
    manifest.config = doc.at("config");
    manifest.outputs = doc.at("outputs").get<std::vector<std::string>>();
    manifest.timestamp_utc = doc.at("timestamp_utc").get<std::string>();
    manifest.version = doc.at("version").get<std::string>();
    return manifest;
}

void write_manifest(const std::string& path, const RunManifest& manifest) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest '" + path + "'");
    out << manifest_to_json(manifest).dump(2) << '\n';
}

RunManifest read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest '" + path + "'");
    return manifest_from_json(nlohmann::json::parse(in));
}

}  // namespace zenoptics

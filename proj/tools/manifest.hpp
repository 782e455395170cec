#pragma once

#include <chrono>
#include <fstream>
#include <string>

#include <json.hpp>

#include "ridgekit/version.hpp"

namespace ridgekit::cli {

/// Record of one CLI invocation: command, fully resolved configuration and
/// seed, software version, and timestamps. Written next to every result file
/// so any output can be regenerated bit-identically.
class RunManifest {
public:
    explicit RunManifest(std::string command) {
        json_["command"] = std::move(command);
        json_["software_version"] = kVersion;
        json_["started"] = timestamp();
        json_["config"] = nlohmann::json::object();
        json_["outputs"] = nlohmann::json::array();
    }

    nlohmann::json& config() { return json_["config"]; }

    void set_seed(std::uint64_t seed) { json_["seed"] = seed; }

    void add_output(const std::string& path) { json_["outputs"].push_back(path); }

    void write(const std::string& path) {
        json_["finished"] = timestamp();
        std::ofstream out(path, std::ios::binary);
        out << json_.dump(2) << "\n";
    }

private:
    static std::string timestamp() {
        const auto now = std::chrono::system_clock::now();
        const std::time_t seconds = std::chrono::system_clock::to_time_t(now);
        char buffer[32];
        std::tm utc{};
        gmtime_r(&seconds, &utc);
        std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
        return buffer;
    }

    nlohmann::json json_;
};

}  // namespace ridgekit::cli

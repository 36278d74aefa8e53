#pragma once

#include <string>

#include <json.hpp>

#include "kobs/kinetic_geometry.hpp"

namespace kobs {

inline constexpr int kReportSchema = 1;

std::string version_string();

/// {schema_version, version, command, config, result, seconds}; keys sort stably.
nlohmann::json make_report(const std::string& command, const nlohmann::json& config, const nlohmann::json& result,
                           double seconds);

void write_json(const std::string& path, const nlohmann::json& j);

nlohmann::json to_json(const KineticPoint& z);

}  // namespace kobs

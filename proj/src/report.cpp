#include "kobs/report.hpp"

#include <fstream>

#include "kobs/errors.hpp"

namespace kobs {

std::string version_string() { return std::string("kobs ") + KOBS_VERSION; }

nlohmann::json make_report(const std::string& command, const nlohmann::json& config, const nlohmann::json& result,
                           double seconds) {
    nlohmann::json j;
    j["schema_version"] = kReportSchema;
    j["version"] = version_string();
    j["command"] = command;
    j["boundary_policy"] =
        "data on incoming faces (t = t_lo, |v| = v_ext, x faces with v.n < 0); outgoing and tangential x-face "
        "nodes and the t = t_hi slice solved with one-sided upwind transport";
    j["config"] = config;
    j["result"] = result;
    j["seconds"] = seconds;
    return j;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open " + path + " for writing");
    os << j.dump(2) << '\n';
}

nlohmann::json to_json(const KineticPoint& z) {
    return {{"t", z.t}, {"x", std::vector<double>(z.x.begin(), z.x.end())}, {"v", std::vector<double>(z.v.begin(), z.v.end())}};
}

}  // namespace kobs

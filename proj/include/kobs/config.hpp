#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kobs/obstacle_solver.hpp"

namespace kobs {

enum class SolverKind { penalized, projected };

struct BoundaryConfig {
    std::string preset = "half_space";  ///< zero, half_space, polynomial, thick_obstacle, thin_obstacle, file
    double e = 1.0;                     ///< half-space direction
    double m = 0.0, a = 0.5;            ///< polynomial coefficients
    double slope = 0.25;                ///< interface tilt for the obstacle scenarios
    std::string file;                   ///< KOBS1 field supplying boundary values
};

struct RunConfig {
    Grid grid = Grid::make(32, 32, 32);
    Penalty penalty{1e-3, PenaltyVariant::piecewise_linear};
    SolverKind solver = SolverKind::projected;
    MarchOptions march;
    NewtonOptions newton;
    ProjectedOptions projected;
    BoundaryConfig boundary;
    double forcing = 1.0;
    std::size_t threads = 0;
};

/// Every dotted key the parser accepts.
const std::vector<std::string>& config_keys();

/// Parses a JSON document (nested objects or dotted keys, both allowed). Collects
/// every problem (unknown keys with the nearest valid key, type errors, duplicate
/// or conflicting values, range violations) into one ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Fully resolved configuration, defaults included.
nlohmann::json to_json(const RunConfig& c);

std::string to_string(SolverKind k);

/// Closest entry of candidates by edit distance.
std::string nearest_key(const std::string& key, const std::vector<std::string>& candidates);

}  // namespace kobs

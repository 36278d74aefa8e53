#pragma once

#include <string>
#include <vector>

#include "kobs/config.hpp"
#include "kobs/field.hpp"

namespace kobs {

/// Boundary data h(t, x, v) of an analytic preset (not "file").
ScalarFn boundary_function(const BoundaryConfig& b);

ObstacleProblem make_problem(const RunConfig& c);
SolveResult run_solver(const RunConfig& c);

/// Shipped scenarios: half_space, polynomial, thick_obstacle, thin_obstacle.
std::vector<std::string> scenario_names();
/// Projected-solver configuration of a scenario on an N^3 grid over Q_1 with N_t = N
/// (Courant number 1/2).
RunConfig scenario_config(const std::string& name, std::size_t N);

}  // namespace kobs

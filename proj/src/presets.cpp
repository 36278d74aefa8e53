#include "kobs/presets.hpp"

#include <algorithm>
#include <cmath>

#include "kobs/errors.hpp"
#include "kobs/parallel.hpp"

namespace kobs {

ScalarFn boundary_function(const BoundaryConfig& b) {
    if (b.preset == "zero") return [](double, double, double) { return 0.0; };
    if (b.preset == "half_space") {
        const double e = b.e;
        return [e](double, double, double v) {
            const double p = std::max(e * v, 0.0);
            return 0.5 * p * p;
        };
    }
    if (b.preset == "polynomial") {
        if (std::abs(2.0 * b.a - b.m - 1.0) > 1e-12) throw ConfigError("polynomial preset needs 2 a - m = 1");
        const double m = b.m, a = b.a;
        return [m, a](double t, double, double v) { return m * t + a * v * v; };
    }
    if (b.preset == "thick_obstacle") {
        const double s = b.slope;
        return [s](double, double x, double v) {
            const double p = std::max(v - s * x, 0.0);
            return 0.5 * p * p;
        };
    }
    if (b.preset == "thin_obstacle") {
        const double s = b.slope;
        return [s](double, double x, double v) {
            const double p = v - s * x;
            return 0.5 * p * p;
        };
    }
    throw ConfigError("boundary preset '" + b.preset + "' has no analytic form");
}

ObstacleProblem make_problem(const RunConfig& c) {
    ObstacleProblem p;
    p.grid = c.grid;
    if (c.boundary.preset == "file") {
        Field f = load_field(c.boundary.file);
        if (!(f.grid() == c.grid)) throw ConfigError("boundary.file grid does not match the configured grid");
        p.boundary = std::move(f);
    } else {
        p.boundary = sample(c.grid, boundary_function(c.boundary));
    }
    p.forcing_const = c.forcing;
    return p;
}

SolveResult run_solver(const RunConfig& c) {
    set_thread_cap(c.threads);
    const ObstacleProblem p = make_problem(c);
    if (c.solver == SolverKind::penalized) return solve_penalized(p, c.penalty, c.march, c.newton);
    return solve_projected(p, c.march, c.projected);
}

std::vector<std::string> scenario_names() { return {"half_space", "polynomial", "thick_obstacle", "thin_obstacle"}; }

RunConfig scenario_config(const std::string& name, std::size_t N) {
    const auto names = scenario_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw ConfigError("unknown scenario '" + name + "'");
    RunConfig c;
    c.grid = Grid::make(N, N, N);
    c.solver = SolverKind::projected;
    c.boundary.preset = name;
    if (name == "thin_obstacle") c.boundary.slope = 0.1;
    return c;
}

}  // namespace kobs

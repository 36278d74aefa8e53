#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kobs/obstacle_solver.hpp"

namespace kobs {

using Payoff = std::function<double(double t, double x, double v)>;

/// Euler paths of dX = V ds, dV = sqrt(2) dB started at (t0, x0, v0).
/// Path p draws from its own generator seeded by (seed, p), so results do not
/// depend on the thread count.
struct PathSet {
    double t0 = 0.0, T = 1.0;
    std::size_t steps = 0, paths = 0;
    std::vector<double> X, V;  ///< path-major, steps + 1 samples per path

    double ds() const noexcept { return (T - t0) / static_cast<double>(steps); }
    double x(std::size_t p, std::size_t k) const noexcept { return X[p * (steps + 1) + k]; }
    double v(std::size_t p, std::size_t k) const noexcept { return V[p * (steps + 1) + k]; }
};

PathSet simulate_paths(const KineticPoint& z0, double T, std::size_t steps, std::size_t paths, std::uint64_t seed);

struct MomentReport {
    double mean_x = 0.0, se_x = 0.0, expect_x = 0.0;
    double var_v = 0.0, se_var_v = 0.0, expect_var_v = 0.0;
};

MomentReport terminal_moments(const PathSet& ps, const KineticPoint& z0);

struct LsmcOptions {
    std::size_t steps = 50;
    std::size_t paths = 20000;
    std::uint64_t seed = 1;
    int degree = 3;  ///< total degree of the monomial basis in (x, v)
    bool payoff_basis = true;  ///< append psi(t, x, v) to the regression basis
};

struct LsmcResult {
    double value = 0.0;
    double se = 0.0;
    bool immediate = false;  ///< stopping at t0 is optimal for the estimated rule
    double continuation = 0.0;
};

/// Regression Monte Carlo for sup_tau E[psi(tau, X_tau, V_tau)] with exercise
/// dates on the Euler grid.
LsmcResult lsmc_price(const Payoff& psi, const KineticPoint& z0, double T, const LsmcOptions& opt = {});

/// (t, x, v) -> (T - t, -x, v): stopping coordinates to obstacle-problem coordinates.
KineticPoint map_to_obstacle(const KineticPoint& z, double T);

struct PdePriceResult {
    SolveResult solve;
    Field obstacle;  ///< psi in obstacle coordinates
    std::vector<double> values;
};

/// Solves min(-L f, f - psi_hat) = 0 with psi_hat(t, x, v) = psi(T - t, -x, v) on
/// [0, T] x [-L_x, L_x] x [-L_v, L_v], then reads f at the mapped query points.
PdePriceResult pde_price(const Payoff& psi, double T, const Grid& grid, const std::vector<KineticPoint>& queries,
                         const ProjectedOptions& proj = {});

}  // namespace kobs

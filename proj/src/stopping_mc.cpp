#include "kobs/stopping_mc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "kobs/errors.hpp"
#include "kobs/parallel.hpp"

namespace kobs {

PathSet simulate_paths(const KineticPoint& z0, double T, std::size_t steps, std::size_t paths, std::uint64_t seed) {
    if (z0.dim() != 1) throw ConfigError("simulation: n = 1 only");
    if (!(T > z0.t)) throw ConfigError("simulation: horizon T must exceed t0");
    if (steps < 1 || paths < 1) throw ConfigError("simulation: need at least one step and one path");
    PathSet ps;
    ps.t0 = z0.t;
    ps.T = T;
    ps.steps = steps;
    ps.paths = paths;
    ps.X.resize(paths * (steps + 1));
    ps.V.resize(paths * (steps + 1));
    const double ds = ps.ds(), amp = std::sqrt(2.0 * ds);
    parallel_for(0, paths, [&](std::size_t p) {
        std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32)};
        std::mt19937_64 gen(sq);
        std::normal_distribution<double> normal(0.0, 1.0);
        double x = z0.x[0], v = z0.v[0];
        double* X = &ps.X[p * (steps + 1)];
        double* V = &ps.V[p * (steps + 1)];
        X[0] = x;
        V[0] = v;
        for (std::size_t k = 1; k <= steps; ++k) {
            x += v * ds;
            v += amp * normal(gen);
            X[k] = x;
            V[k] = v;
        }
    });
    return ps;
}

MomentReport terminal_moments(const PathSet& ps, const KineticPoint& z0) {
    const double m = static_cast<double>(ps.paths);
    double sx = 0, sxx = 0, sv = 0, svv = 0;
    for (std::size_t p = 0; p < ps.paths; ++p) {
        const double x = ps.x(p, ps.steps), v = ps.v(p, ps.steps);
        sx += x;
        sxx += x * x;
        sv += v;
        svv += v * v;
    }
    MomentReport r;
    const double h = ps.T - ps.t0;
    r.mean_x = sx / m;
    r.se_x = std::sqrt(std::max(sxx / m - r.mean_x * r.mean_x, 0.0) / m);
    r.expect_x = z0.x[0] + z0.v[0] * h;
    const double mv = sv / m;
    r.var_v = (svv - m * mv * mv) / (m - 1.0);
    r.se_var_v = r.var_v * std::sqrt(2.0 / (m - 1.0));
    r.expect_var_v = 2.0 * h;
    return r;
}

namespace {

std::vector<std::pair<int, int>> monomials(int degree) {
    std::vector<std::pair<int, int>> out;
    for (int d = 0; d <= degree; ++d)
        for (int a = d; a >= 0; --a) out.emplace_back(a, d - a);
    return out;
}

}  // namespace

LsmcResult lsmc_price(const Payoff& psi, const KineticPoint& z0, double T, const LsmcOptions& opt) {
    if (opt.degree < 0 || opt.degree > 8) throw ConfigError("lsmc: basis degree must lie in 0..8");
    if (opt.paths < 2) throw ConfigError("lsmc: need at least two paths");
    const PathSet ps = simulate_paths(z0, T, opt.steps, opt.paths, opt.seed);
    const std::size_t m = ps.paths, K = ps.steps;
    const auto basis = monomials(opt.degree);
    std::vector<double> cash(m);
    for (std::size_t p = 0; p < m; ++p) cash[p] = psi(T, ps.x(p, K), ps.v(p, K));
    const std::size_t nb = basis.size() + (opt.payoff_basis ? 1 : 0);
    Eigen::MatrixXd A(m, nb);
    Eigen::VectorXd y(m);
    for (std::size_t k = K; k-- > 1;) {
        const double t = ps.t0 + static_cast<double>(k) * ps.ds();
        for (std::size_t p = 0; p < m; ++p) {
            const double x = ps.x(p, k), v = ps.v(p, k);
            for (std::size_t b = 0; b < basis.size(); ++b)
                A(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(b)) =
                    std::pow(x, basis[b].first) * std::pow(v, basis[b].second);
            if (opt.payoff_basis)
                A(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(nb - 1)) = psi(t, x, v);
            y(static_cast<Eigen::Index>(p)) = cash[p];
        }
        const Eigen::VectorXd coef = A.colPivHouseholderQr().solve(y);
        const Eigen::VectorXd cont = A * coef;
        for (std::size_t p = 0; p < m; ++p) {
            const double ex = psi(t, ps.x(p, k), ps.v(p, k));
            if (ex >= cont(static_cast<Eigen::Index>(p))) cash[p] = ex;
        }
    }
    double s = 0, ss = 0;
    for (double c : cash) {
        s += c;
        ss += c * c;
    }
    const double mean = s / static_cast<double>(m);
    const double var = std::max(ss - static_cast<double>(m) * mean * mean, 0.0) / static_cast<double>(m - 1);
    LsmcResult r;
    r.continuation = mean;
    r.se = std::sqrt(var / static_cast<double>(m));
    const double now = psi(z0.t, z0.x[0], z0.v[0]);
    r.immediate = now >= mean;
    r.value = std::max(now, mean);
    return r;
}

KineticPoint map_to_obstacle(const KineticPoint& z, double T) {
    const std::size_t n = z.dim();
    KineticPoint out{T - z.t, Vec(n), z.v};
    for (std::size_t i = 0; i < n; ++i) out.x[i] = -z.x[i];
    return out;
}

PdePriceResult pde_price(const Payoff& psi, double T, const Grid& grid, const std::vector<KineticPoint>& queries,
                         const ProjectedOptions& proj) {
    if (grid.t_lo != 0.0 || grid.t_hi != T) throw ConfigError("pde price: grid must span t in [0, T]");
    const Field ob = sample(grid, [&](double t, double x, double v) { return psi(T - t, -x, v); });
    // phi = -L_h psi_hat with the marching operator, so f = u + psi_hat solves the
    // discrete obstacle problem for psi_hat exactly.
    Field phi(grid);
    const double dt = grid.dt(), hx = grid.dx(), hv2 = grid.dv() * grid.dv();
    for (std::size_t i = 1; i < grid.nt(); ++i)
        for (std::size_t j = 0; j < grid.nx(); ++j)
            for (std::size_t k = 1; k < grid.Nv; ++k) {
                const double v = grid.v(k);
                double ux = 0.0;
                if (v > 0.0 && j > 0) ux = (ob.at(i - 1, j, k) - ob.at(i - 1, j - 1, k)) / hx;
                else if (v < 0.0 && j < grid.Nx) ux = (ob.at(i - 1, j + 1, k) - ob.at(i - 1, j, k)) / hx;
                const double uvv = (ob.at(i, j, k + 1) - 2.0 * ob.at(i, j, k) + ob.at(i, j, k - 1)) / hv2;
                phi.at(i, j, k) = -(uvv - (ob.at(i, j, k) - ob.at(i - 1, j, k)) / dt - v * ux);
            }
    ObstacleProblem prob{grid, Field(grid, 0.0), phi, 0.0};
    PdePriceResult out{solve_projected(prob, {}, proj), ob, {}};
    for (const auto& q : queries) {
        const KineticPoint z = map_to_obstacle(q, T);
        out.values.push_back(interpolate(out.solve.u, z.t, z.x[0], z.v[0]) + interpolate(ob, z.t, z.x[0], z.v[0]));
    }
    return out;
}

}  // namespace kobs

#include "kobs/obstacle_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <vector>

#include "kobs/errors.hpp"
#include "kobs/parallel.hpp"

namespace kobs {

PenaltyVariant parse_penalty_variant(const std::string& s) {
    if (s == "piecewise_linear") return PenaltyVariant::piecewise_linear;
    if (s == "cubic_bridge") return PenaltyVariant::cubic_bridge;
    throw ConfigError("unknown penalty variant '" + s + "' (expected piecewise_linear or cubic_bridge)");
}

std::string to_string(PenaltyVariant v) {
    return v == PenaltyVariant::piecewise_linear ? "piecewise_linear" : "cubic_bridge";
}

Penalty::Penalty(double e, PenaltyVariant var) : eps(e), variant(var) {
    if (!(e > 0.0) || !std::isfinite(e)) throw ConfigError("penalty eps must be positive");
}

double Penalty::operator()(double s) const noexcept {
    if (s >= 0.0) return 0.0;
    if (variant == PenaltyVariant::piecewise_linear || s <= -eps) return s / eps;
    const double q = s / eps;
    return -2.0 * q * q - q * q * q;
}

double Penalty::derivative(double s) const noexcept {
    if (s >= 0.0) return 0.0;
    if (variant == PenaltyVariant::piecewise_linear || s <= -eps) return 1.0 / eps;
    const double q = s / eps;
    return (-4.0 * q - 3.0 * q * q) / eps;
}

double ObstacleProblem::phi_sup() const noexcept { return forcing ? forcing->sup_norm() : std::abs(forcing_const); }

void ObstacleProblem::validate(bool projected) const {
    grid.validate();
    if (!(boundary.grid() == grid)) throw ConfigError("boundary data lives on a different grid");
    if (forcing && !(forcing->grid() == grid)) throw ConfigError("forcing lives on a different grid");
    for (double x : boundary.values())
        if (!std::isfinite(x)) throw ConfigError("boundary data is not finite");
    if (projected) {
        for (std::size_t i = 0; i < grid.nt(); ++i)
            for (std::size_t j = 0; j < grid.nx(); ++j)
                for (std::size_t k = 0; k < grid.nv(); ++k)
                    if (boundary_label(grid, i, j, k) == BoundaryLabel::incoming && boundary.at(i, j, k) < 0.0)
                        throw ConfigError("projected solver needs nonnegative boundary data");
    }
}

double penalized_zero_tolerance(const ObstacleProblem& p, const Penalty& beta) {
    return 10.0 * beta.eps * std::max(1.0, p.phi_sup());
}

namespace {

struct LineStats {
    int iterations = 0;
    double residual = 0.0;
};

// Thomas algorithm; a = sub, b = diag, c = super. Overwrites d with the solution.
void thomas(std::vector<double>& a, std::vector<double>& b, std::vector<double>& c, std::vector<double>& d) {
    const std::size_t m = b.size();
    for (std::size_t k = 1; k < m; ++k) {
        const double w = a[k] / b[k - 1];
        b[k] -= w * c[k - 1];
        d[k] -= w * d[k - 1];
    }
    d[m - 1] /= b[m - 1];
    for (std::size_t k = m - 1; k-- > 0;) d[k] = (d[k] - c[k] * d[k + 1]) / b[k];
}

double courant_number(const Grid& g) { return g.dt() * g.v_ext / g.dx(); }

// Shared time march. line(i, j, rhs, fixed, u) solves one v-line at level i.
template <class LineFn>
SolveDiagnostics march(const ObstacleProblem& p, const MarchOptions& mo, Field& u, LineFn&& line) {
    const Grid& g = p.grid;
    const double courant = courant_number(g);
    if (courant > mo.cfl)
        throw ConfigError("CFL violated: v_ext dt / dx = " + std::to_string(courant) + " exceeds " +
                          std::to_string(mo.cfl) + "; raise N_t or lower N_x");
    const double dt = g.dt(), hx = g.dx();
    for (std::size_t j = 0; j < g.nx(); ++j)
        for (std::size_t k = 0; k < g.nv(); ++k) u.at(0, j, k) = p.boundary.at(0, j, k);

    SolveDiagnostics d;
    d.courant = courant;
    std::vector<LineStats> stats(g.nx());
    for (std::size_t i = 1; i < g.nt(); ++i) {
        parallel_for(0, g.nx(), [&](std::size_t j) {
            std::vector<double> rhs(g.nv()), line_u(g.nv());
            std::vector<char> fixed(g.nv());
            for (std::size_t k = 0; k < g.nv(); ++k) {
                const std::size_t idx = g.index(i, j, k);
                if (boundary_label(g, i, j, k) == BoundaryLabel::incoming) {
                    fixed[k] = 1;
                    line_u[k] = p.boundary[idx];
                    rhs[k] = line_u[k];
                    continue;
                }
                fixed[k] = 0;
                const double v = g.v(k);
                const double un = u.at(i - 1, j, k);
                double ux = 0.0;
                if (v > 0.0) ux = (un - u.at(i - 1, j - 1, k)) / hx;
                else if (v < 0.0) ux = (u.at(i - 1, j + 1, k) - un) / hx;
                rhs[k] = un - dt * v * ux - dt * p.phi(idx);
                line_u[k] = un;
            }
            stats[j] = line(i, rhs, fixed, line_u);
            for (std::size_t k = 0; k < g.nv(); ++k) u.at(i, j, k) = line_u[k];
        });
        for (const auto& s : stats) {
            d.total_iterations += s.iterations;
            d.max_iterations = std::max(d.max_iterations, s.iterations);
            d.max_line_residual = std::max(d.max_line_residual, s.residual);
        }
        ++d.steps;
    }
    return d;
}

}  // namespace

SolveResult solve_penalized(const ObstacleProblem& p, const Penalty& beta, const MarchOptions& mo,
                            const NewtonOptions& no) {
    const auto t0 = std::chrono::steady_clock::now();
    p.validate(false);
    if (no.max_iter < 1 || !(no.tol > 0.0) || !(no.damping > 0.0 && no.damping < 1.0))
        throw ConfigError("invalid Newton options");
    const Grid& g = p.grid;
    const double dt = g.dt();
    const double lam = dt / (g.dv() * g.dv());
    const std::size_t m = g.nv();
    Field u(g);

    auto line = [&](std::size_t i, const std::vector<double>& rhs, const std::vector<char>& fixed,
                    std::vector<double>& w) -> LineStats {
        std::vector<double> F(m), a(m), b(m), c(m), trial(m);
        auto residual = [&](const std::vector<double>& x, std::vector<double>& out) {
            double r = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                if (fixed[k]) {
                    out[k] = 0.0;
                    continue;
                }
                const double lo = k > 0 ? x[k - 1] : 0.0, hi = k + 1 < m ? x[k + 1] : 0.0;
                out[k] = (1.0 + 2.0 * lam) * x[k] - lam * (lo + hi) + dt * beta(x[k]) - rhs[k];
                r = std::max(r, std::abs(out[k]));
            }
            return r;
        };
        double r = residual(w, F);
        int it = 0;
        while (r > no.tol) {
            if (it == no.max_iter)
                throw SolverError("Newton did not converge within " + std::to_string(no.max_iter) +
                                      " iterations at time step " + std::to_string(i),
                                  static_cast<long>(i), r);
            ++it;
            for (std::size_t k = 0; k < m; ++k) {
                if (fixed[k]) {
                    a[k] = 0.0;
                    b[k] = 1.0;
                    c[k] = 0.0;
                } else {
                    a[k] = k > 0 ? -lam : 0.0;
                    c[k] = k + 1 < m ? -lam : 0.0;
                    if (k > 0 && fixed[k - 1]) a[k] = 0.0;
                    if (k + 1 < m && fixed[k + 1]) c[k] = 0.0;
                    b[k] = 1.0 + 2.0 * lam + dt * beta.derivative(w[k]);
                }
                F[k] = -F[k];
            }
            thomas(a, b, c, F);  // F now holds the Newton step
            double alpha = 1.0;
            std::vector<double> G(m);
            double rt = 0.0;
            for (int ls = 0; ls < 40; ++ls) {
                for (std::size_t k = 0; k < m; ++k) trial[k] = w[k] + alpha * F[k];
                rt = residual(trial, G);
                if (rt < r || rt <= no.tol) break;
                alpha *= no.damping;
            }
            w.swap(trial);
            F.swap(G);
            r = rt;
        }
        return {it, r};
    };
    SolveResult res{u, {}};
    res.diag = march(p, mo, res.u, line);
    res.diag.method = "penalized";
    res.diag.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

SolveResult solve_projected(const ObstacleProblem& p, const MarchOptions& mo, const ProjectedOptions& po) {
    const auto t0 = std::chrono::steady_clock::now();
    p.validate(true);
    if (po.max_sweeps < 1 || !(po.sweep_tol > 0.0) || po.omega < 0.0 || po.omega >= 2.0)
        throw ConfigError("invalid relaxation options (need 0 <= omega < 2, sweep tol > 0)");
    const Grid& g = p.grid;
    const double dt = g.dt();
    const double lam = dt / (g.dv() * g.dv());
    const std::size_t m = g.nv();
    double omega = po.omega;
    if (omega == 0.0) {
        const double rho = 2.0 * lam * std::cos(std::numbers::pi / static_cast<double>(g.Nv)) / (1.0 + 2.0 * lam);
        omega = 2.0 / (1.0 + std::sqrt(1.0 - rho * rho));
    }
    const double diag = 1.0 + 2.0 * lam;

    auto line = [&](std::size_t i, const std::vector<double>& rhs, const std::vector<char>& fixed,
                    std::vector<double>& w) -> LineStats {
        for (std::size_t k = 0; k < m; ++k)
            if (!fixed[k]) w[k] = std::max(w[k], 0.0);
        double change = 0.0;
        for (int sweep = 1; sweep <= po.max_sweeps; ++sweep) {
            change = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                if (fixed[k]) continue;
                const double lo = k > 0 ? w[k - 1] : 0.0, hi = k + 1 < m ? w[k + 1] : 0.0;
                const double gs = (rhs[k] + lam * (lo + hi)) / diag;
                const double nw = std::max(0.0, w[k] + omega * (gs - w[k]));
                change = std::max(change, std::abs(nw - w[k]));
                w[k] = nw;
            }
            if (change <= po.sweep_tol) return {sweep, change};
        }
        throw SolverError("projected relaxation did not converge within " + std::to_string(po.max_sweeps) +
                              " sweeps at time step " + std::to_string(i),
                          static_cast<long>(i), change);
    };
    SolveResult res{Field(g), {}};
    res.diag = march(p, mo, res.u, line);
    res.diag.method = "projected";
    res.diag.omega = omega;
    res.diag.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

double complementarity_residual(const ObstacleProblem& p, const Field& u) {
    const Grid& g = p.grid;
    if (!(u.grid() == g)) throw ConfigError("field and problem grids differ");
    const double dt = g.dt(), hx = g.dx(), hv2 = g.dv() * g.dv();
    double worst = 0.0;
    for (std::size_t i = 1; i < g.nt(); ++i)
        for (std::size_t j = 0; j < g.nx(); ++j)
            for (std::size_t k = 1; k < g.Nv; ++k) {
                if (boundary_label(g, i, j, k) == BoundaryLabel::incoming) continue;
                const double v = g.v(k);
                double ux = 0.0;
                if (v > 0.0) ux = (u.at(i - 1, j, k) - u.at(i - 1, j - 1, k)) / hx;
                else if (v < 0.0) ux = (u.at(i - 1, j + 1, k) - u.at(i - 1, j, k)) / hx;
                const double uvv = (u.at(i, j, k + 1) - 2.0 * u.at(i, j, k) + u.at(i, j, k - 1)) / hv2;
                const double Lh = uvv - (u.at(i, j, k) - u.at(i - 1, j, k)) / dt - v * ux;
                const double r = std::min(p.phi(g.index(i, j, k)) - Lh, u.at(i, j, k));
                worst = std::max(worst, std::abs(r));
            }
    return worst;
}

}  // namespace kobs

#include "kobs/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kobs/errors.hpp"

namespace kobs {

double cylinder_sup(const Field& u, const Cylinder& q) {
    const Grid& g = u.grid();
    double sup = -std::numeric_limits<double>::infinity();
    for_each_node(g, q, [&](std::size_t i, std::size_t j, std::size_t k) { sup = std::max(sup, u.at(i, j, k)); });
    if (!std::isfinite(sup)) throw RangeError("cylinder contains no grid nodes");
    return sup;
}

std::vector<double> feasible_radii(const Grid& g, const KineticPoint& z0, double r_max, std::size_t max_count) {
    std::vector<double> out;
    for (double r = r_max; out.size() < max_count; r *= 0.5) {
        if (r < 2.0 * g.dv() || r * r < 2.0 * g.dt()) break;
        if (cylinder_fits(g, Cylinder(z0, r))) out.push_back(r);
    }
    return out;
}

LipschitzReport lipschitz_report(const Field& u, const KineticPoint& center, double r) {
    const Grid& g = u.grid();
    const Cylinder q(center, r);
    if (!cylinder_fits(g, q)) throw RangeError("lipschitz: Q_r(center) leaves the grid");
    const Field ux = diff(u, Derivative::dx), ut = diff(u, Derivative::dt), uvv = diff(u, Derivative::dvv);
    LipschitzReport rep;
    rep.sup_u = u.sup_norm();
    for_each_node(g, q, [&](std::size_t i, std::size_t j, std::size_t k) {
        const std::size_t idx = g.index(i, j, k);
        rep.grad_x = std::max(rep.grad_x, std::abs(ux[idx]));
        rep.dt = std::max(rep.dt, std::abs(ut[idx]));
        rep.dvv = std::max(rep.dvv, std::abs(uvv[idx]));
        ++rep.nodes;
    });
    return rep;
}

std::vector<GrowthRow> growth_report(const Field& u, const KineticPoint& z0, const std::vector<double>& radii,
                                     const Field* coarse) {
    const double c = barrier_constant(z0.dim());
    std::vector<GrowthRow> rows;
    for (double r : radii) {
        const Cylinder q(z0, r);
        if (!cylinder_fits(u.grid(), q)) throw RangeError("growth: Q_r(z0) leaves the grid");
        GrowthRow row;
        row.r = r;
        row.sup = cylinder_sup(u, q);
        row.quotient = row.sup / (r * r);
        row.margin = row.sup - c * r * r;
        if (coarse) {
            // Coarse values at the fine nodes of Q_r, so both sups run over one point set.
            const Grid& g = u.grid();
            double cs = -std::numeric_limits<double>::infinity();
            for_each_node(g, q, [&](std::size_t i, std::size_t j, std::size_t k) {
                cs = std::max(cs, interpolate(*coarse, g.t(i), g.x(j), g.v(k)));
            });
            row.slack = std::abs(row.sup - cs);
        }
        row.pass = row.margin + row.slack >= 0.0;
        rows.push_back(row);
    }
    return rows;
}

std::vector<NondegRow> parabolic_nondegeneracy(const Field& u, const KineticPoint& z0,
                                               const std::vector<double>& deltas, double slack) {
    const Grid& g = u.grid();
    const double c = barrier_constant(z0.dim());
    const double t0 = z0.t, x0 = z0.x[0], v0 = z0.v[0];
    std::vector<NondegRow> rows;
    for (double d : deltas) {
        if (t0 - d * d < g.t_lo || std::abs(v0) + d > g.v_ext) throw RangeError("nondegeneracy: region leaves the grid");
        const Grid::Range tr = g.t_nodes_in(t0 - d * d, t0, true);
        const Grid::Range vr = g.v_nodes_in(v0 - d, v0 + d);
        double sup = -std::numeric_limits<double>::infinity();
        if (!tr.empty() && !vr.empty())
            for (std::size_t i = tr.lo; i <= tr.hi; ++i)
                for (std::size_t k = vr.lo; k <= vr.hi; ++k) sup = std::max(sup, interpolate(u, g.t(i), x0, g.v(k)));
        if (!std::isfinite(sup)) throw RangeError("nondegeneracy: region contains no nodes");
        NondegRow row{d, sup, sup - c * d * d, false};
        row.pass = row.margin + slack >= 0.0;
        rows.push_back(row);
    }
    return rows;
}

double parabolic_r0(const Field& u, const KineticPoint& z0, double r_max) {
    const Cylinder q(z0, r_max);
    if (!cylinder_fits(u.grid(), q)) throw RangeError("r0: Q_r(z0) leaves the grid");
    const Field ux = diff(u, Derivative::dx);
    double G = 0.0;
    for_each_node(u.grid(), q, [&](std::size_t i, std::size_t j, std::size_t k) { G = std::max(G, std::abs(ux.at(i, j, k))); });
    return G > 0.0 ? std::min(r_max, 0.5 / G) : r_max;
}

EllipticReport elliptic_nondegeneracy(const Field& u, const KineticPoint& z0, const std::vector<double>& lambdas,
                                      double slack) {
    if (lambdas.empty()) throw ConfigError("elliptic nondegeneracy: no radii");
    const Grid& g = u.grid();
    const double c = elliptic_constant(z0.dim());
    const double t0 = z0.t, x0 = z0.x[0], v0 = z0.v[0];
    EllipticReport rep;
    for (double l : lambdas) {
        if (std::abs(v0) + l > g.v_ext) throw RangeError("elliptic nondegeneracy: ball leaves the grid");
        const Grid::Range vr = g.v_nodes_in(v0 - l, v0 + l);
        double sup = -std::numeric_limits<double>::infinity();
        if (!vr.empty())
            for (std::size_t k = vr.lo; k <= vr.hi; ++k) sup = std::max(sup, interpolate(u, t0, x0, g.v(k)));
        if (!std::isfinite(sup)) throw RangeError("elliptic nondegeneracy: ball contains no nodes");
        NondegRow row{l, sup, sup - c * l * l, false};
        row.pass = row.margin + slack >= 0.0;
        rep.rows.push_back(row);
    }
    const double lmax = *std::max_element(lambdas.begin(), lambdas.end());
    const Field Yu = apply_Y(u);
    const Cylinder q(z0, lmax);
    for_each_node(g, q, [&](std::size_t i, std::size_t j, std::size_t k) {
        rep.transport_sup = std::max(rep.transport_sup, std::abs(Yu.at(i, j, k)));
    });
    rep.hypothesis_holds = rep.transport_sup <= 0.5;
    return rep;
}

std::vector<PorosityRow> porosity_report(const Classification& cls, const KineticPoint& z0,
                                         const std::vector<double>& radii, const std::vector<double>& deltas) {
    std::vector<PorosityRow> rows;
    for (double r : radii) {
        const Cylinder q(z0, r);
        if (!cylinder_fits(cls.grid, q)) throw RangeError("porosity: Q_r(z0) leaves the grid");
        PorosityRow row;
        row.r = r;
        std::size_t tot = 0, pos = 0;
        for_each_node(cls.grid, q, [&](std::size_t i, std::size_t j, std::size_t k) {
            ++tot;
            if (cls.positive(cls.grid.index(i, j, k))) ++pos;
        });
        row.positive_fraction = tot ? static_cast<double>(pos) / static_cast<double>(tot) : 0.0;
        for (double d : deltas)
            if (find_clean_cylinder(cls, q, d * r, Phase::positive).found) {
                row.delta = d;
                break;
            }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace kobs

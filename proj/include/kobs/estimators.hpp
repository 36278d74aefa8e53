#pragma once

#include <optional>
#include <vector>

#include "kobs/field.hpp"
#include "kobs/free_boundary.hpp"

namespace kobs {

struct LipschitzReport {
    double grad_x = 0.0;  ///< sup |d_x u| over nodes of Q_r(center)
    double dt = 0.0;      ///< sup |d_t u|
    double dvv = 0.0;     ///< sup |d_vv u|
    double sup_u = 0.0;   ///< sup |u| over the whole grid
    std::size_t nodes = 0;
};

/// Central-difference derivative sups over the slanted cylinder Q_r(center).
LipschitzReport lipschitz_report(const Field& u, const KineticPoint& center, double r = 0.5);

struct GrowthRow {
    double r = 0.0;
    double sup = 0.0;       ///< sup of u over nodes of Q_r(z0)
    double quotient = 0.0;  ///< sup / r^2
    double margin = 0.0;    ///< sup - c_n r^2
    double slack = 0.0;     ///< |sup_h - sup_2h| when a coarse field is supplied
    bool pass = false;      ///< margin + slack >= 0
};

/// Growth quotients and barrier nondegeneracy margins at z0. The optional coarse
/// field (same box, half the resolution) supplies the Richardson slack, read by
/// interpolation at the fine nodes of each cylinder.
std::vector<GrowthRow> growth_report(const Field& u, const KineticPoint& z0, const std::vector<double>& radii,
                                     const Field* coarse = nullptr);

struct NondegRow {
    double scale = 0.0;   ///< delta or lambda
    double sup = 0.0;
    double margin = 0.0;  ///< sup - c scale^2
    bool pass = false;
};

/// sup over {t0 - d^2 < t <= t0, |v - v0| < d} at x = x0 of u, minus c_n d^2.
std::vector<NondegRow> parabolic_nondegeneracy(const Field& u, const KineticPoint& z0,
                                               const std::vector<double>& deltas, double slack = 0.0);

struct EllipticReport {
    std::vector<NondegRow> rows;
    double transport_sup = 0.0;   ///< sup |Y u| over nodes of Q_{lambda_max}(z0)
    bool hypothesis_holds = false;  ///< transport_sup <= 1/2
};

/// Radius below which the transport term of the rescaled equation is at most half the
/// forcing: min(r_max, 1 / (2 sup |d_x u|)) with the sup over nodes of Q_{r_max}(z0).
double parabolic_r0(const Field& u, const KineticPoint& z0, double r_max);
/// sup over |w| < lambda of u(t0, x0, v0 + w), minus lambda^2 / (4n); the bound is
/// only claimed when |Y u| <= 1/2 near z0.
EllipticReport elliptic_nondegeneracy(const Field& u, const KineticPoint& z0, const std::vector<double>& lambdas,
                                      double slack = 0.0);

struct PorosityRow {
    double r = 0.0;
    double positive_fraction = 0.0;
    double delta = 0.0;  ///< largest delta from the candidates with Q_{delta r}(z1) in Omega
};

std::vector<PorosityRow> porosity_report(const Classification& cls, const KineticPoint& z0,
                                         const std::vector<double>& radii,
                                         const std::vector<double>& deltas = {0.4, 0.3, 0.2, 0.1, 0.05, 0.025});

/// Dyadic radii r_max 2^{-k} for which Q_r(z0) fits in the grid and is resolved
/// (r >= 2 dv and r^2 >= 2 dt), largest first.
std::vector<double> feasible_radii(const Grid& g, const KineticPoint& z0, double r_max, std::size_t max_count = 16);

/// sup over nodes of Q_r(z0) of u, interpolation-free.
double cylinder_sup(const Field& u, const Cylinder& q);

}  // namespace kobs

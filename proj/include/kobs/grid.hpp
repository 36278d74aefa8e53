#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kobs/kinetic_geometry.hpp"

namespace kobs {

/// Tensor grid on [t_lo, t_hi] x [-x_ext, x_ext] x [-v_ext, v_ext], n = 1.
/// N_* are cell counts; node i sits at lo + i * step, boundary nodes included.
struct Grid {
    std::size_t n = 1;
    double t_lo = -1.0, t_hi = 0.0;
    double x_ext = 1.0, v_ext = 1.0;
    std::size_t Nt = 32, Nx = 32, Nv = 32;

    static Grid make(std::size_t Nt, std::size_t Nx, std::size_t Nv, double t_lo = -1.0, double t_hi = 0.0,
                     double x_ext = 1.0, double v_ext = 1.0);
    /// Same box, all cell counts equal.
    static Grid cube(std::size_t N) { return make(N, N, N); }

    void validate() const;

    std::size_t nt() const noexcept { return Nt + 1; }
    std::size_t nx() const noexcept { return Nx + 1; }
    std::size_t nv() const noexcept { return Nv + 1; }
    std::size_t size() const noexcept { return nt() * nx() * nv(); }

    double dt() const noexcept { return (t_hi - t_lo) / static_cast<double>(Nt); }
    double dx() const noexcept { return 2.0 * x_ext / static_cast<double>(Nx); }
    double dv() const noexcept { return 2.0 * v_ext / static_cast<double>(Nv); }

    double t(std::size_t i) const noexcept { return t_lo + static_cast<double>(i) * dt(); }
    double x(std::size_t j) const noexcept { return -x_ext + static_cast<double>(j) * dx(); }
    double v(std::size_t k) const noexcept { return -v_ext + static_cast<double>(k) * dv(); }
    KineticPoint node(std::size_t i, std::size_t j, std::size_t k) const {
        return KineticPoint::make1(t(i), x(j), v(k));
    }

    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return (i * nx() + j) * nv() + k;
    }
    /// Refined grid with every cell count doubled.
    Grid refined() const { return make(2 * Nt, 2 * Nx, 2 * Nv, t_lo, t_hi, x_ext, v_ext); }

    bool contains(double t, double x, double v) const noexcept;

    /// Index range [lo, hi] of nodes with value strictly inside (a, b) along an axis.
    struct Range {
        std::size_t lo = 1, hi = 0;
        bool empty() const noexcept { return lo > hi; }
    };
    Range t_nodes_in(double a, double b, bool closed_right) const noexcept;
    Range x_nodes_in(double a, double b) const noexcept;
    Range v_nodes_in(double a, double b) const noexcept;

    friend bool operator==(const Grid& a, const Grid& b) noexcept;
};

enum class BoundaryLabel : std::uint8_t { interior, incoming, outgoing, tangential };

/// Parabolic-boundary partition by the sign of (1, v, 0) . n on each face.
/// The initial slice and the v-faces are incoming, the final slice outgoing,
/// x-faces follow the sign of +-v (v = 0 on an x-face is tangential).
std::vector<BoundaryLabel> boundary_partition(const Grid& g);
BoundaryLabel boundary_label(const Grid& g, std::size_t i, std::size_t j, std::size_t k);

/// Whether the closure of Q_r(z0) lies in the grid box.
bool cylinder_fits(const Grid& g, const Cylinder& q);

/// Calls fn(i, j, k) for every node inside the cylinder (same exact comparisons as Cylinder).
template <class Fn>
void for_each_node(const Grid& g, const Cylinder& q, Fn&& fn) {
    const double t0 = q.center.t, x0 = q.center.x[0], v0 = q.center.v[0], r = q.r;
    const double r3 = r * r * r;
    // Ranges are padded by one step; membership itself is decided by contains1.
    const double ht = g.dt(), hx = g.dx(), hv = g.dv();
    const Grid::Range tr = g.t_nodes_in(t0 - r * r - ht, t0 + ht, true);
    if (tr.empty()) return;
    const Grid::Range vr = g.v_nodes_in(v0 - r - hv, v0 + r + hv);
    if (vr.empty()) return;
    for (std::size_t i = tr.lo; i <= tr.hi; ++i) {
        const double c = x0 + (g.t(i) - t0) * v0;
        const Grid::Range xr = g.x_nodes_in(c - r3 - hx, c + r3 + hx);
        if (xr.empty()) continue;
        for (std::size_t j = xr.lo; j <= xr.hi; ++j)
            for (std::size_t k = vr.lo; k <= vr.hi; ++k)
                if (q.contains1(g.t(i), g.x(j), g.v(k))) fn(i, j, k);
    }
}

}  // namespace kobs

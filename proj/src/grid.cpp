#include "kobs/grid.hpp"

#include <cmath>
#include <string>

#include "kobs/errors.hpp"

namespace kobs {

Grid Grid::make(std::size_t Nt, std::size_t Nx, std::size_t Nv, double t_lo, double t_hi, double x_ext,
                double v_ext) {
    Grid g;
    g.Nt = Nt;
    g.Nx = Nx;
    g.Nv = Nv;
    g.t_lo = t_lo;
    g.t_hi = t_hi;
    g.x_ext = x_ext;
    g.v_ext = v_ext;
    g.validate();
    return g;
}

void Grid::validate() const {
    if (n != 1) throw ConfigError("grid: only n = 1 is supported by the grid pipeline");
    if (Nt < 4 || Nx < 4 || Nv < 4)
        throw ConfigError("grid: every cell count must be >= 4 (got " + std::to_string(Nt) + ", " +
                          std::to_string(Nx) + ", " + std::to_string(Nv) + ")");
    if (!(t_lo < t_hi) || !std::isfinite(t_lo) || !std::isfinite(t_hi))
        throw ConfigError("grid: need finite t_lo < t_hi");
    if (!(x_ext > 0.0) || !(v_ext > 0.0) || !std::isfinite(x_ext) || !std::isfinite(v_ext))
        throw ConfigError("grid: extents must be positive and finite");
}

bool Grid::contains(double tt, double xx, double vv) const noexcept {
    const double et = 1e-12 * (t_hi - t_lo), ex = 1e-12 * x_ext, ev = 1e-12 * v_ext;
    return tt >= t_lo - et && tt <= t_hi + et && std::abs(xx) <= x_ext + ex && std::abs(vv) <= v_ext + ev;
}

namespace {

// Nodes c(i) with a < c(i) < b (or a < c(i) <= b), found by index guess then exact fixups.
template <class Coord>
Grid::Range open_range(Coord c, std::size_t N, double lo, double step, double a, double b, bool closed_right) {
    Grid::Range r;
    auto guess = [&](double s) {
        double g = std::floor((s - lo) / step);
        if (g < 0) g = 0;
        if (g > static_cast<double>(N)) g = static_cast<double>(N);
        return static_cast<std::size_t>(g);
    };
    std::size_t i = guess(a);
    while (i > 0 && c(i) > a) --i;
    while (i <= N && !(c(i) > a)) ++i;
    if (i > N) return r;
    std::size_t j = guess(b);
    while (j < N && (closed_right ? c(j + 1) <= b : c(j + 1) < b)) ++j;
    while (j > 0 && !(closed_right ? c(j) <= b : c(j) < b)) --j;
    if (!(closed_right ? c(j) <= b : c(j) < b)) return r;
    r.lo = i;
    r.hi = j;
    return r;
}

}  // namespace

Grid::Range Grid::t_nodes_in(double a, double b, bool closed_right) const noexcept {
    return open_range([this](std::size_t i) { return t(i); }, Nt, t_lo, dt(), a, b, closed_right);
}

Grid::Range Grid::x_nodes_in(double a, double b) const noexcept {
    return open_range([this](std::size_t j) { return x(j); }, Nx, -x_ext, dx(), a, b, false);
}

Grid::Range Grid::v_nodes_in(double a, double b) const noexcept {
    return open_range([this](std::size_t k) { return v(k); }, Nv, -v_ext, dv(), a, b, false);
}

bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.n == b.n && a.t_lo == b.t_lo && a.t_hi == b.t_hi && a.x_ext == b.x_ext && a.v_ext == b.v_ext &&
           a.Nt == b.Nt && a.Nx == b.Nx && a.Nv == b.Nv;
}

BoundaryLabel boundary_label(const Grid& g, std::size_t i, std::size_t j, std::size_t k) {
    if (i == 0) return BoundaryLabel::incoming;
    if (k == 0 || k == g.Nv) return BoundaryLabel::incoming;
    if (j == 0 || j == g.Nx) {
        // Outward normal is -e_x at j = 0 and +e_x at j = Nx; (1, v, 0) . n = -+v.
        const double flux = (j == 0 ? -1.0 : 1.0) * g.v(k);
        if (flux < 0.0) return BoundaryLabel::incoming;
        if (flux > 0.0) return BoundaryLabel::outgoing;
        return BoundaryLabel::tangential;
    }
    if (i == g.Nt) return BoundaryLabel::outgoing;
    return BoundaryLabel::interior;
}

bool cylinder_fits(const Grid& g, const Cylinder& q) {
    const double t0 = q.center.t, x0 = q.center.x[0], v0 = q.center.v[0], r = q.r;
    if (t0 > g.t_hi || t0 - r * r < g.t_lo) return false;
    if (std::abs(v0) + r > g.v_ext) return false;
    for (double t : {t0 - r * r, t0})
        if (std::abs(x0 + (t - t0) * v0) + r * r * r > g.x_ext) return false;
    return true;
}

std::vector<BoundaryLabel> boundary_partition(const Grid& g) {
    std::vector<BoundaryLabel> out(g.size());
    for (std::size_t i = 0; i < g.nt(); ++i)
        for (std::size_t j = 0; j < g.nx(); ++j)
            for (std::size_t k = 0; k < g.nv(); ++k) out[g.index(i, j, k)] = boundary_label(g, i, j, k);
    return out;
}

}  // namespace kobs

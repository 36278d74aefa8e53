#include "kobs/free_boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kobs/errors.hpp"

namespace kobs {

std::size_t Classification::count(Phase p) const noexcept {
    return static_cast<std::size_t>(std::count(phase.begin(), phase.end(), p));
}

std::size_t Classification::gamma_count() const noexcept {
    return static_cast<std::size_t>(std::count(gamma.begin(), gamma.end(), std::uint8_t{1}));
}

Classification classify(const Field& u, double tol_zero, double tol_pos) {
    if (tol_pos < 0.0) tol_pos = tol_zero;
    if (!(tol_zero >= 0.0) || tol_pos < tol_zero) throw ConfigError("classify: need 0 <= tol_zero <= tol_pos");
    const Grid& g = u.grid();
    Classification c;
    c.grid = g;
    c.tol_zero = tol_zero;
    c.tol_pos = tol_pos;
    c.phase.resize(g.size());
    c.gamma.assign(g.size(), 0);
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        const double x = u[idx];
        c.phase[idx] = x > tol_pos ? Phase::positive : (x <= tol_zero ? Phase::contact : Phase::ambiguous);
    }
    for (std::size_t i = 0; i < g.nt(); ++i)
        for (std::size_t j = 0; j < g.nx(); ++j)
            for (std::size_t k = 0; k < g.nv(); ++k) {
                const std::size_t idx = g.index(i, j, k);
                if (c.phase[idx] != Phase::contact) continue;
                auto pos = [&](std::size_t a, std::size_t b, std::size_t d) {
                    return c.phase[g.index(a, b, d)] == Phase::positive;
                };
                const bool touch = (i > 0 && pos(i - 1, j, k)) || (i + 1 < g.nt() && pos(i + 1, j, k)) ||
                                   (j > 0 && pos(i, j - 1, k)) || (j + 1 < g.nx() && pos(i, j + 1, k)) ||
                                   (k > 0 && pos(i, j, k - 1)) || (k + 1 < g.nv() && pos(i, j, k + 1));
                c.gamma[idx] = touch ? 1 : 0;
            }
    return c;
}

std::vector<KineticPoint> gamma_points_in(const Classification& cls, const Cylinder& q) {
    std::vector<KineticPoint> out;
    for_each_node(cls.grid, q, [&](std::size_t i, std::size_t j, std::size_t k) {
        if (cls.on_gamma(cls.grid.index(i, j, k))) out.push_back(cls.grid.node(i, j, k));
    });
    return out;
}

// --- minimal diameter ---

namespace {

double cross(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Vec> convex_hull(std::vector<Vec> p) {
    std::sort(p.begin(), p.end(), [](const Vec& a, const Vec& b) { return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]); });
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 3) return p;
    std::vector<Vec> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

double minimal_diameter(const std::vector<Vec>& points) {
    if (points.size() < 2) return 0.0;
    const std::size_t n = points.front().size();
    for (const auto& p : points)
        if (p.size() != n) throw ConfigError("minimal_diameter: mixed dimensions");
    if (n == 1) {
        double lo = points[0][0], hi = lo;
        for (const auto& p : points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return hi - lo;
    }
    if (n != 2) throw ConfigError("minimal_diameter: only n = 1, 2 are supported");
    const std::vector<Vec> h = convex_hull(points);
    if (h.size() < 3) return 0.0;  // collinear set
    // Rotating calipers: for each edge, the antipodal vertex maximises the distance.
    const std::size_t m = h.size();
    double best = std::numeric_limits<double>::infinity();
    std::size_t a = 1;
    for (std::size_t e = 0; e < m; ++e) {
        const Vec& p = h[e];
        const Vec& q = h[(e + 1) % m];
        const double len = std::hypot(q[0] - p[0], q[1] - p[1]);
        while (std::abs(cross(p, q, h[(a + 1) % m])) > std::abs(cross(p, q, h[a]))) a = (a + 1) % m;
        best = std::min(best, std::abs(cross(p, q, h[a])) / len);
    }
    return best;
}

// --- thickness ---

namespace {

// Contact diameter of the v-section values sec (over v nodes) within the closed ball.
double section_diameter(const Grid& g, const std::vector<double>& sec, double v0, double r, double tol) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t k = 0; k < g.nv(); ++k) {
        const double v = g.v(k);
        if (std::abs(v - v0) > r || sec[k] > tol) continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi >= lo ? hi - lo : 0.0;
}

void scan_slice(const Field& u, double t, double c, double v0, double r, double tol, ThicknessResult& best) {
    const Grid& g = u.grid();
    const double r3 = r * r * r;
    if (std::abs(c) + r3 > g.x_ext * (1 + 1e-12)) throw RangeError("thickness: x-ball leaves the grid");
    std::vector<double> sec(g.nv());
    bool any = false;
    auto consider = [&](double x) {
        const double d = section_diameter(g, sec, v0, r, tol);
        if (d / r > best.delta) {
            best.delta = d / r;
            best.diameter = d;
            best.witness_t = t;
            best.witness_x = x;
        }
        any = true;
    };
    for (std::size_t j = 0; j < g.nx(); ++j) {
        if (std::abs(g.x(j) - c) > r3) continue;
        time_section(u, t, j, sec);
        consider(g.x(j));
    }
    if (!any) {
        for (std::size_t k = 0; k < g.nv(); ++k) sec[k] = interpolate(u, t, c, g.v(k));
        consider(c);
    }
}

void check_thickness_args(const Field& u, const KineticPoint& z0, double r) {
    if (!(r > 0.0)) throw ConfigError("thickness: r must be positive");
    if (z0.dim() != 1) throw ConfigError("thickness: grid pipeline is n = 1");
    const Grid& g = u.grid();
    if (z0.t - r * r < g.t_lo || z0.t > g.t_hi) throw RangeError("thickness: slice t0 - r^2 outside the grid");
    if (std::abs(z0.v[0]) + r > g.v_ext * (1 + 1e-12)) throw RangeError("thickness: v-ball leaves the grid");
}

}  // namespace

ThicknessResult thickness_delta(const Field& u, const KineticPoint& z0, double r, double tol_zero) {
    check_thickness_args(u, z0, r);
    ThicknessResult best;
    best.delta = -1.0;
    const double t = z0.t - r * r;
    scan_slice(u, t, z0.x[0] - r * r * z0.v[0], z0.v[0], r, tol_zero, best);
    return best;
}

ThicknessResult thickness_delta_star(const Field& u, const KineticPoint& z0, double r, double tol_zero) {
    check_thickness_args(u, z0, r);
    const Grid& g = u.grid();
    const double a = z0.t - r * r, b = z0.t - 0.5 * r * r;
    std::vector<double> ts{a, b};
    for (std::size_t i = 0; i < g.nt(); ++i)
        if (g.t(i) > a && g.t(i) < b) ts.push_back(g.t(i));
    std::sort(ts.begin(), ts.end());
    ThicknessResult best;
    best.delta = -1.0;
    for (double t : ts) scan_slice(u, t, z0.x[0] + (t - z0.t) * z0.v[0], z0.v[0], r, tol_zero, best);
    return best;
}

// --- graph ---

GraphResult extract_graph(const Field& u, const Classification& cls, int direction) {
    if (direction != 1 && direction != -1) throw ConfigError("graph direction must be +1 or -1");
    const Grid& g = u.grid();
    if (!(cls.grid == g)) throw ConfigError("classification and field grids differ");
    GraphResult out;
    out.direction = direction;
    out.nt = g.nt();
    out.nx = g.nx();
    out.columns.resize(g.nt() * g.nx());
    const std::size_t m = g.nv();
    const double hv = g.dv();
    for (std::size_t i = 0; i < g.nt(); ++i)
        for (std::size_t j = 0; j < g.nx(); ++j) {
            GraphColumn& col = out.columns[i * g.nx() + j];
            col.t = g.t(i);
            col.x = g.x(j);
            // Scan along the graph direction; pos(s) is the node at scan position s.
            auto node = [&](std::size_t s) { return direction == 1 ? s : m - 1 - s; };
            int changes = 0;
            bool oriented = true;
            std::size_t cross_at = 0;
            Phase prev = Phase::ambiguous;
            for (std::size_t s = 0; s < m; ++s) {
                const Phase p = cls.phase[g.index(i, j, node(s))];
                if (p == Phase::ambiguous) continue;
                if (prev != Phase::ambiguous && p != prev) {
                    ++changes;
                    if (changes == 1) {
                        oriented = prev == Phase::contact;
                        cross_at = s;
                    }
                }
                prev = p;
            }
            col.crossings = changes;
            col.mask = changes == 1 && oriented;
            if (!col.mask) continue;
            // Last contact node at cross_at - 1 (scan order), first positive at cross_at.
            // sqrt(u) is linear across a nondegenerate quadratic interface.
            const std::size_t kp = node(cross_at);
            std::size_t kc = kp;
            for (std::size_t s = cross_at; s-- > 0;)
                if (cls.phase[g.index(i, j, node(s))] == Phase::contact) {
                    kc = node(s);
                    break;
                }
            const double vc = g.v(kc), vp = g.v(kp);
            double f = vc;
            const double s1 = std::sqrt(std::max(u.at(i, j, kp) - cls.tol_zero, 0.0));
            if (cross_at + 1 < m && cls.phase[g.index(i, j, node(cross_at + 1))] == Phase::positive) {
                const double s2 = std::sqrt(std::max(u.at(i, j, node(cross_at + 1)) - cls.tol_zero, 0.0));
                const double slope = (s2 - s1) / hv;  // per unit scan step
                if (slope > 0.0) f = vp - direction * s1 / slope;
            } else {
                const double uc = u.at(i, j, kc), up = u.at(i, j, kp);
                f = vc + (vp - vc) * (cls.tol_zero - uc) / (up - uc);
            }
            col.f = std::clamp(f, std::min(vc, vp), std::max(vc, vp));
        }
    return out;
}

bool GraphWindow::contains(const GraphColumn& c) const {
    const double dt = c.t - center.t;
    return dt > -r * r && dt <= 0.0 && std::abs(c.x - center.x[0] - dt * center.v[0]) < r * r * r;
}

std::optional<KineticPoint> graph_point(const GraphResult& g, double t, double x) {
    const GraphColumn* best = nullptr;
    double bd = 0.0;
    for (const auto& c : g.columns) {
        if (!c.mask) continue;
        const double d = std::abs(c.t - t) + std::abs(c.x - x);
        if (!best || d < bd) {
            best = &c;
            bd = d;
        }
    }
    if (!best) return std::nullopt;
    return KineticPoint::make1(best->t, best->x, best->f);
}

double single_crossing_fraction(const GraphResult& g, const GraphWindow& w) {
    std::size_t tot = 0, good = 0;
    for (const auto& c : g.columns) {
        if (!w.contains(c)) continue;
        ++tot;
        if (c.mask) ++good;
    }
    return tot == 0 ? 0.0 : static_cast<double>(good) / static_cast<double>(tot);
}

HolderReport holder_seminorms(const GraphResult& g, const GraphWindow& w) {
    std::vector<const GraphColumn*> pts;
    for (const auto& c : g.columns)
        if (c.mask && w.contains(c)) pts.push_back(&c);
    HolderReport rep;
    rep.samples = pts.size();
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const double den = std::sqrt(std::abs(pts[a]->t - pts[b]->t)) + std::sqrt(std::abs(pts[a]->x - pts[b]->x));
            if (den > 0.0) rep.tx = std::max(rep.tx, std::abs(pts[a]->f - pts[b]->f) / den);
        }
    return rep;
}

// --- cones ---

ConeCheck cone_monotonicity_check(const Field& u, const Box& region, const VelocityCone& cone, double C0,
                                  double tol) {
    if (cone.e.size() != 1) throw ConfigError("cone check: grid pipeline is n = 1");
    const Grid& g = u.grid();
    const Field uv = diff(u, Derivative::dv);
    ConeCheck out;
    out.min_slack = std::numeric_limits<double>::infinity();
    const double e = cone.e[0];
    for (std::size_t i = 0; i < g.nt(); ++i)
        for (std::size_t j = 0; j < g.nx(); ++j)
            for (std::size_t k = 0; k < g.nv(); ++k) {
                if (!region.contains(g.t(i), g.x(j), g.v(k))) continue;
                const std::size_t idx = g.index(i, j, k);
                const double slack = C0 * e * uv[idx] - u[idx];
                ++out.nodes;
                if (slack < out.min_slack) {
                    out.min_slack = slack;
                    out.worst = g.node(i, j, k);
                }
            }
    if (out.nodes == 0) throw RangeError("cone check: region contains no nodes");
    out.pass = out.min_slack >= -tol;
    return out;
}

ConeTrapResult cone_trap_check(const Classification& cls, const KineticPoint& z0, double a, double psi, double r0,
                               double e) {
    if (!(psi > 0.0 && psi < 1.0) || !(a >= 0.0)) throw ConfigError("cone trap: need a >= 0 and 0 < psi < 1");
    const Grid& g = cls.grid;
    ConeTrapResult out;
    const double t0 = z0.t, x0 = z0.x[0], v0 = z0.v[0];
    for_each_node(g, Cylinder(z0, 0.5 * r0), [&](std::size_t i, std::size_t j, std::size_t k) {
        const double t = g.t(i), x = g.x(j), v = g.v(k);
        const double lhs = a * std::sqrt(std::abs(t - t0) + std::abs(x - x0)) + std::abs(v - v0);
        const double proj = e * (v - v0) / psi;
        const std::size_t idx = g.index(i, j, k);
        if (lhs < proj) {
            ++out.forward_nodes;
            if (!cls.positive(idx)) ++out.forward_violations;
        } else if (lhs < -proj) {
            ++out.backward_nodes;
            if (!cls.contact(idx)) ++out.backward_violations;
        }
    });
    out.pass = out.forward_violations == 0 && out.backward_violations == 0;
    return out;
}

CleanCylinder find_clean_cylinder(const Classification& cls, const Cylinder& q, double rho, Phase phase) {
    const Grid& g = cls.grid;
    CleanCylinder out;
    out.rho = rho;
    bool done = false;
    for_each_node(g, q, [&](std::size_t i, std::size_t j, std::size_t k) {
        if (done || cls.phase[g.index(i, j, k)] != phase) return;
        const Cylinder inner(g.node(i, j, k), rho);
        if (!q.contains_cylinder(inner)) return;
        bool clean = true;
        for_each_node(g, inner, [&](std::size_t a, std::size_t b, std::size_t c) {
            if (clean && cls.phase[g.index(a, b, c)] != phase) clean = false;
        });
        if (clean) {
            done = true;
            out.found = true;
            out.center = inner.center;
        }
    });
    return out;
}

CorkscrewResult corkscrew_check(const Classification& cls, const KineticPoint& z0, double r, double kappa) {
    if (!(kappa > 0.0 && kappa < 1.0)) throw ConfigError("corkscrew: kappa must lie in (0, 1)");
    const Cylinder q(z0, r);
    if (!cylinder_fits(cls.grid, q)) throw RangeError("corkscrew: Q_r(z0) leaves the grid");
    CorkscrewResult out;
    out.contact = find_clean_cylinder(cls, q, kappa * r, Phase::contact);
    if (out.contact.found) out.positive = find_clean_cylinder(cls, q, kappa * r, Phase::positive);
    out.pass = out.contact.found && out.positive.found;
    return out;
}

double corkscrew_kappa(const Classification& cls, const KineticPoint& z0, double r, const std::vector<double>& kappas) {
    for (double k : kappas)
        if (corkscrew_check(cls, z0, r, k).pass) return k;
    return 0.0;
}

double lebesgue_density(const Classification& cls, const KineticPoint& z0, double r) {
    std::size_t tot = 0, hit = 0;
    for_each_node(cls.grid, Cylinder(z0, r), [&](std::size_t i, std::size_t j, std::size_t k) {
        ++tot;
        if (cls.contact(cls.grid.index(i, j, k))) ++hit;
    });
    if (tot == 0) throw RangeError("lebesgue_density: cylinder contains no nodes");
    return static_cast<double>(hit) / static_cast<double>(tot);
}

}  // namespace kobs

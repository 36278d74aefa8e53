#include "kobs/weiss_energy.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include <boost/math/special_functions/legendre.hpp>

#include "kobs/errors.hpp"

namespace kobs {

double kernel_K(double t, const Vec& x, const Vec& v) {
    if (!(t < 0.0)) throw DomainError("kernel K is defined for t < 0 only");
    const double n = static_cast<double>(x.size());
    const double xx = x.dot(x), vv = v.dot(v);
    return std::pow(std::numbers::pi, -0.5 * n) * std::pow(t * t, -n) * std::exp(vv / t + xx / (t * t * t));
}

namespace {

// 1 on [0, 1/2], 0 on [1, inf), quintic smoothstep between.
double bump(double s) {
    s = std::abs(s);
    if (s <= 0.5) return 1.0;
    if (s >= 1.0) return 0.0;
    const double q = 2.0 * s - 1.0;
    return 1.0 - q * q * q * (10.0 - 15.0 * q + 6.0 * q * q);
}

double bump_prime(double s) {
    const double a = std::abs(s);
    if (a <= 0.5 || a >= 1.0) return 0.0;
    const double q = 2.0 * a - 1.0;
    const double d = -30.0 * q * q * (1.0 - q) * (1.0 - q) * 2.0;
    return s < 0.0 ? -d : d;
}

struct Rule {
    std::vector<double> x, w;  // on [-1, 1]
};

Rule gauss_legendre(int order) {
    Rule r;
    const auto zeros = boost::math::legendre_p_zeros<double>(order);
    for (double z : zeros) {
        const double p = boost::math::legendre_p_prime(order, z);
        const double w = 2.0 / ((1.0 - z * z) * p * p);
        if (z == 0.0) {
            r.x.push_back(0.0);
            r.w.push_back(w);
        } else {
            r.x.push_back(-z);
            r.w.push_back(w);
            r.x.push_back(z);
            r.w.push_back(w);
        }
    }
    return r;
}

// Composite rule on [a, b].
void composite(const Rule& base, int panels, double a, double b, std::vector<double>& x, std::vector<double>& w) {
    x.clear();
    w.clear();
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h, mid = lo + 0.5 * h;
        for (std::size_t i = 0; i < base.x.size(); ++i) {
            x.push_back(mid + 0.5 * h * base.x[i]);
            w.push_back(0.5 * h * base.w[i]);
        }
    }
}

void check_quadrature(const QuadratureOptions& q) {
    if (q.panels < 1 || q.order < 2 || q.order > 64 || !(q.sigmas > 0.0))
        throw ConfigError("quadrature: need panels >= 1, 2 <= order <= 64, sigmas > 0");
}

}  // namespace

double cutoff_psi(double x, double v) { return bump(x) * bump(v); }
double cutoff_psi_v(double x, double v) { return bump(x) * bump_prime(v); }

EnergySource source_from_reference(const ReferenceSolution& ref) {
    EnergySource s;
    s.f = ref.u;
    s.f_v = ref.u_v;
    return s;
}

EnergySource source_from_field(const Field& u) {
    const Grid& g = u.grid();
    if (g.x_ext < 1.0 || g.v_ext < 1.0)
        throw ConfigError("energy: the grid box must contain the cutoff support [-1, 1]^2");
    auto uf = std::make_shared<Field>(u);
    auto uv = std::make_shared<Field>(diff(u, Derivative::dv));
    const double t_lo = g.t_lo, t_hi = g.t_hi;
    auto in_time = [t_lo, t_hi](double t) {
        if (t < t_lo - 1e-12 || t > t_hi + 1e-12) throw RangeError("energy: time slab leaves the grid");
    };
    EnergySource s;
    s.t_min = t_lo;
    s.f = [uf, in_time](double t, double x, double v) {
        in_time(t);
        if (std::abs(x) >= 1.0 || std::abs(v) >= 1.0) return 0.0;
        return interpolate(*uf, t, x, v) * cutoff_psi(x, v);
    };
    s.f_v = [uf, uv, in_time](double t, double x, double v) {
        in_time(t);
        if (std::abs(x) >= 1.0 || std::abs(v) >= 1.0) return 0.0;
        return interpolate(*uv, t, x, v) * cutoff_psi(x, v) + interpolate(*uf, t, x, v) * cutoff_psi_v(x, v);
    };
    return s;
}

double weiss_I(const EnergySource& src, const KineticPoint& z0, double r, const QuadratureOptions& q) {
    check_quadrature(q);
    if (!(r > 0.0)) throw ConfigError("energy: r must be positive");
    if (z0.dim() != 1) throw ConfigError("energy: n = 1 only");
    if (z0.t - 4.0 * r * r < src.t_min - 1e-12)
        throw RangeError("energy: t0 - 4 r^2 lies before the start of the data");
    const Rule base = gauss_legendre(q.order);
    std::vector<double> tn, tw, xn, xw, vn, vw;
    composite(base, q.panels, -4.0 * r * r, -r * r, tn, tw);
    const double t0 = z0.t, x0 = z0.x[0], v0 = z0.v[0];
    const double c = 1.0 / std::sqrt(std::numbers::pi);
    double total = 0.0;
    std::vector<double> kx, kv;
    for (std::size_t a = 0; a < tn.size(); ++a) {
        const double t = tn[a], s = -t;
        const double sx = std::sqrt(0.5 * s * s * s), sv = std::sqrt(0.5 * s);
        composite(base, q.panels, -q.sigmas * sx, q.sigmas * sx, xn, xw);
        composite(base, q.panels, -q.sigmas * sv, q.sigmas * sv, vn, vw);
        kx.resize(xn.size());
        kv.resize(vn.size());
        for (std::size_t b = 0; b < xn.size(); ++b) kx[b] = xw[b] * std::exp(xn[b] * xn[b] / (t * t * t));
        for (std::size_t d = 0; d < vn.size(); ++d) kv[d] = vw[d] * std::exp(vn[d] * vn[d] / t);
        double slab = 0.0;
        for (std::size_t b = 0; b < xn.size(); ++b) {
            const double X = x0 + xn[b] + t * v0;
            double line = 0.0;
            for (std::size_t d = 0; d < vn.size(); ++d) {
                const double V = v0 + vn[d];
                const double f = src.f(t0 + t, X, V);
                const double fv = src.f_v(t0 + t, X, V);
                line += kv[d] * (fv * fv + 2.0 * f + f * f / t);
            }
            slab += kx[b] * line;
        }
        total += tw[a] * c / (t * t) * slab;
    }
    return total / (r * r * r * r);
}

double kernel_mass(double t, const QuadratureOptions& q) {
    check_quadrature(q);
    if (!(t < 0.0)) throw DomainError("kernel mass needs t < 0");
    const Rule base = gauss_legendre(q.order);
    const double s = -t;
    const double sx = std::sqrt(0.5 * s * s * s), sv = std::sqrt(0.5 * s);
    std::vector<double> xn, xw, vn, vw;
    composite(base, q.panels, -q.sigmas * sx, q.sigmas * sx, xn, xw);
    composite(base, q.panels, -q.sigmas * sv, q.sigmas * sv, vn, vw);
    double m = 0.0;
    for (std::size_t b = 0; b < xn.size(); ++b)
        for (std::size_t d = 0; d < vn.size(); ++d) m += xw[b] * vw[d] * kernel_K(t, Vec{xn[b]}, Vec{vn[d]});
    return m;
}

double omega_hat() {
    static const double value = weiss_I(source_from_reference(halfspace_solution(1.0)), KineticPoint::origin(1), 1.0);
    return value;
}

WeissScan weiss_scan(const EnergySource& src, const KineticPoint& z0, std::vector<double> radii,
                     const QuadratureOptions& q) {
    if (radii.empty()) throw ConfigError("energy scan: no radii");
    std::sort(radii.begin(), radii.end());
    WeissScan out;
    out.radii = radii;
    for (double r : radii) out.values.push_back(weiss_I(src, z0, r, q));
    double scale = 0.0;
    for (double v : out.values) scale = std::max(scale, std::abs(v));
    // Drops at the level of quadrature round-off do not count.
    const double noise = 1e-10 * scale;
    for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
        const double drop = out.values[i] - out.values[i + 1];
        if (drop > noise) out.drift_C = std::max(out.drift_C, drop / (radii[i + 1] * radii[i + 1] - radii[i] * radii[i]));
    }
    out.monotone = out.drift_C == 0.0;
    return out;
}

std::string to_string(EnergyClass c) {
    switch (c) {
        case EnergyClass::low: return "low";
        case EnergyClass::high: return "high";
        default: return "undetermined";
    }
}

BalancedEnergy balanced_energy(const EnergySource& src, const KineticPoint& z0, const std::vector<double>& radii,
                               double dead_band, const QuadratureOptions& q) {
    if (radii.empty()) throw ConfigError("balanced energy: no radii");
    BalancedEnergy out;
    out.radii = radii;
    for (double r : radii) out.values.push_back(weiss_I(src, z0, r, q));
    if (radii.size() == 1) {
        out.value = out.values[0];
    } else {
        // Least-squares line in r^2; the intercept is the r -> 0 limit.
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double m = static_cast<double>(radii.size());
        for (std::size_t i = 0; i < radii.size(); ++i) {
            const double x = radii[i] * radii[i];
            sx += x;
            sy += out.values[i];
            sxx += x * x;
            sxy += x * out.values[i];
        }
        const double den = m * sxx - sx * sx;
        out.value = den != 0.0 ? (sy * sxx - sx * sxy) / den : sy / m;
    }
    out.ratio = out.value / omega_hat();
    if (std::abs(out.ratio - 1.5) < dead_band) out.cls = EnergyClass::undetermined;
    else out.cls = out.ratio < 1.5 ? EnergyClass::low : EnergyClass::high;
    return out;
}

}  // namespace kobs

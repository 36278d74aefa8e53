#include "kobs/kinetic_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kobs/errors.hpp"

namespace kobs {

Vec::Vec(std::size_t n, double fill) : n_(n) {
    if (n == 0 || n > kMaxDim) throw ConfigError("vector dimension must be in 1.." + std::to_string(kMaxDim));
    std::fill(a_.begin(), a_.begin() + n, fill);
}

Vec::Vec(std::initializer_list<double> xs) : n_(xs.size()) {
    if (n_ == 0 || n_ > kMaxDim) throw ConfigError("vector dimension must be in 1.." + std::to_string(kMaxDim));
    std::copy(xs.begin(), xs.end(), a_.begin());
}

double Vec::norm() const noexcept {
    if (n_ == 1) return std::abs(a_[0]);
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) s += a_[i] * a_[i];
    return std::sqrt(s);
}

double Vec::dot(const Vec& o) const noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) s += a_[i] * o.a_[i];
    return s;
}

static void same_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ConfigError("dimension mismatch");
}

Vec operator+(const Vec& a, const Vec& b) {
    same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(double s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

bool operator==(const Vec& a, const Vec& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

static void check_point(const KineticPoint& z) {
    if (z.x.size() != z.v.size() || z.x.size() == 0) throw ConfigError("kinetic point with inconsistent dimensions");
}

KineticPoint compose(const KineticPoint& z0, const KineticPoint& z) {
    check_point(z0);
    check_point(z);
    same_dim(z0.x, z.x);
    const std::size_t n = z.dim();
    KineticPoint r{z0.t + z.t, Vec(n), Vec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        r.x[i] = z0.x[i] + z.x[i] + z.t * z0.v[i];
        r.v[i] = z0.v[i] + z.v[i];
    }
    return r;
}

KineticPoint inverse(const KineticPoint& z) {
    check_point(z);
    const std::size_t n = z.dim();
    KineticPoint r{-z.t, Vec(n), Vec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        r.x[i] = -z.x[i] + z.t * z.v[i];
        r.v[i] = -z.v[i];
    }
    return r;
}

KineticPoint dilate(const KineticPoint& z, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("dilation factor must be positive, got " + std::to_string(r));
    check_point(z);
    const double r2 = r * r;
    const double r3 = r2 * r;
    return {r2 * z.t, r3 * z.x, r * z.v};
}

double kinetic_norm(const KineticPoint& z) {
    check_point(z);
    return std::sqrt(std::abs(z.t)) + std::cbrt(z.x.norm()) + z.v.norm();
}

double kinetic_distance(const KineticPoint& z, const KineticPoint& w) {
    // w^{-1} o z = (t_z - t_w, x_z - x_w - (t_z - t_w) v_w, v_z - v_w), written out so
    // that d(z, z) is exactly 0.
    const double dt = z.t - w.t;
    const std::size_t n = z.dim();
    KineticPoint d{dt, Vec(n), Vec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        d.x[i] = (z.x[i] - w.x[i]) - dt * w.v[i];
        d.v[i] = z.v[i] - w.v[i];
    }
    return kinetic_norm(d);
}

Cylinder::Cylinder(KineticPoint c, double radius) : center(std::move(c)), r(radius) {
    if (!(radius > 0.0)) throw ConfigError("cylinder radius must be positive");
    check_point(center);
}

bool Cylinder::contains(const KineticPoint& z) const {
    const double dt = z.t - center.t;
    if (!(dt > -r * r && dt <= 0.0)) return false;
    const std::size_t n = center.dim();
    double sx = 0.0, sv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ex = z.x[i] - center.x[i] - dt * center.v[i];
        const double ev = z.v[i] - center.v[i];
        sx += ex * ex;
        sv += ev * ev;
    }
    const double r3 = r * r * r;
    return sx < r3 * r3 && sv < r * r;
}

bool Cylinder::contains1(double t, double x, double v) const noexcept {
    const double dt = t - center.t;
    if (!(dt > -r * r && dt <= 0.0)) return false;
    const double r3 = r * r * r;
    return std::abs(x - center.x[0] - dt * center.v[0]) < r3 && std::abs(v - center.v[0]) < r;
}

bool Cylinder::contains_cylinder(const Cylinder& in) const {
    const double rho = in.r;
    if (in.center.t > center.t) return false;
    if (in.center.t - rho * rho < center.t - r * r) return false;
    if ((in.center.v - center.v).norm() + rho > r) return false;
    // The x-offset is affine in t, so its norm peaks at an endpoint of the time slab.
    for (double t : {in.center.t - rho * rho, in.center.t}) {
        const Vec off = in.center.x + (t - in.center.t) * in.center.v - center.x - (t - center.t) * center.v;
        if (off.norm() + rho * rho * rho > r * r * r) return false;
    }
    return true;
}

bool in_cylinder(const KineticPoint& z, const KineticPoint& z0, double r) {
    return Cylinder(z0, r).contains(z);
}

VelocityCone::VelocityCone(Vec axis, double cos_aperture) : e(axis), theta(cos_aperture) {
    if (!(cos_aperture > 0.0 && cos_aperture < 1.0)) throw ConfigError("cone aperture must lie in (0, 1)");
    const double len = axis.norm();
    if (std::abs(len - 1.0) > 1e-12) throw ConfigError("cone axis must be a unit vector");
}

bool VelocityCone::contains(const Vec& v) const { return v.dot(e) > theta * v.norm(); }

double cone_aperture(double rho) {
    if (!(rho >= 0.0 && rho < 8.0)) throw ConfigError("cone aperture parameter out of range");
    return std::sqrt(1.0 - rho * rho / 64.0);
}

}  // namespace kobs

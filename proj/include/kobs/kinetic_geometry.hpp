#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>

namespace kobs {

inline constexpr std::size_t kMaxDim = 3;

/// Fixed-capacity real vector of runtime length n (1 <= n <= kMaxDim).
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n, double fill = 0.0);
    Vec(std::initializer_list<double> xs);

    std::size_t size() const noexcept { return n_; }
    double& operator[](std::size_t i) noexcept { return a_[i]; }
    double operator[](std::size_t i) const noexcept { return a_[i]; }
    const double* begin() const noexcept { return a_.data(); }
    const double* end() const noexcept { return a_.data() + n_; }

    double norm() const noexcept;
    double dot(const Vec& o) const noexcept;

    friend Vec operator+(const Vec& a, const Vec& b);
    friend Vec operator-(const Vec& a, const Vec& b);
    friend Vec operator*(double s, const Vec& a);
    friend bool operator==(const Vec& a, const Vec& b) noexcept;

private:
    std::array<double, kMaxDim> a_{};
    std::size_t n_ = 0;
};

/// Point z = (t, x, v) of R x R^n x R^n.
struct KineticPoint {
    double t = 0.0;
    Vec x;
    Vec v;

    std::size_t dim() const noexcept { return x.size(); }
    static KineticPoint origin(std::size_t n) { return {0.0, Vec(n), Vec(n)}; }
    static KineticPoint make1(double t, double x, double v) { return {t, Vec{x}, Vec{v}}; }
    friend bool operator==(const KineticPoint& a, const KineticPoint& b) noexcept {
        return a.t == b.t && a.x == b.x && a.v == b.v;
    }
};

/// Galilean law z0 o z = (t0 + t, x0 + x + t v0, v0 + v).
KineticPoint compose(const KineticPoint& z0, const KineticPoint& z);

/// z^{-1} = (-t, -x + t v, -v).
KineticPoint inverse(const KineticPoint& z);

/// S_r(t, x, v) = (r^2 t, r^3 x, r v). Throws ConfigError unless r > 0.
KineticPoint dilate(const KineticPoint& z, double r);

/// ||z|| = |t|^{1/2} + |x|^{1/3} + |v|.
double kinetic_norm(const KineticPoint& z);

/// d(z, w) = ||w^{-1} o z||.
double kinetic_distance(const KineticPoint& z, const KineticPoint& w);

/// Q_r(z0) = { t0 - r^2 < t <= t0, |x - x0 - (t - t0) v0| < r^3, |v - v0| < r }.
/// Membership uses exact floating comparisons; callers wanting a fattened
/// cylinder pass r (1 + delta) themselves.
struct Cylinder {
    KineticPoint center;
    double r = 1.0;

    Cylinder(KineticPoint c, double radius);
    bool contains(const KineticPoint& z) const;
    /// Scalar fast path for n = 1.
    bool contains1(double t, double x, double v) const noexcept;
    /// Whether Q_rho(z1) lies inside this cylinder (closure containment).
    bool contains_cylinder(const Cylinder& inner) const;
};

bool in_cylinder(const KineticPoint& z, const KineticPoint& z0, double r);

/// Euclidean/kinetic cone C(e, theta) = { v : v . e > theta |v| }.
struct VelocityCone {
    Vec e;
    double theta = 0.5;

    VelocityCone(Vec axis, double cos_aperture);
    bool contains(const Vec& v) const;
};

/// Aperture used by the cone-monotonicity step: theta(rho) = sqrt(1 - rho^2 / 64).
double cone_aperture(double rho);

/// Dimension-specific constants.
inline double barrier_constant(std::size_t n) { return 1.0 / (4.0 * static_cast<double>(n) + 2.0); }
inline double elliptic_constant(std::size_t n) { return 1.0 / (4.0 * static_cast<double>(n)); }

}  // namespace kobs

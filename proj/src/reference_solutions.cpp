#include "kobs/reference_solutions.hpp"

#include <algorithm>
#include <cmath>

#include "kobs/errors.hpp"

namespace kobs {

namespace {

bool always(double, double, double, double) { return true; }

}  // namespace

ReferenceSolution halfspace_solution(double e) {
    if (e != 1.0 && e != -1.0) throw ConfigError("half-space direction must be +1 or -1 for n = 1");
    ReferenceSolution s;
    s.name = "half_space";
    s.description = "(1/2) (v e)_+^2, L = indicator of {v e > 0}";
    s.u = [e](double, double, double v) {
        const double p = std::max(v * e, 0.0);
        return 0.5 * p * p;
    };
    s.Lu = [e](double, double, double v) { return v * e > 0.0 ? 1.0 : 0.0; };
    s.u_v = [e](double, double, double v) { return e * std::max(v * e, 0.0); };
    s.smooth_at = [](double, double, double v, double h) { return std::abs(v) > h * (1.0 + 1e-9); };
    s.homogeneity = 2;
    s.obstacle_solution = true;
    return s;
}

ReferenceSolution polynomial_solution(double m, double a) {
    if (std::abs(2.0 * a - m - 1.0) > 1e-12)
        throw ConfigError("polynomial solution needs 2 a - m = 1 (got a = " + std::to_string(a) +
                          ", m = " + std::to_string(m) + ")");
    if (a < 0.0 || m > 0.0) throw ConfigError("polynomial solution needs a >= 0 and m <= 0 to stay nonnegative");
    ReferenceSolution s;
    s.name = "polynomial";
    s.description = "m t + a v^2 with 2 a - m = 1";
    s.u = [m, a](double t, double, double v) { return m * t + a * v * v; };
    s.Lu = [m, a](double, double, double) { return 2.0 * a - m; };
    s.u_v = [a](double, double, double v) { return 2.0 * a * v; };
    s.smooth_at = always;
    s.homogeneity = 2;
    s.obstacle_solution = true;
    return s;
}

ReferenceSolution barrier_function(double r) {
    if (!(r > 0.0)) throw ConfigError("barrier radius must be positive");
    const double c = barrier_constant(1);
    const double r4 = r * r * r * r;
    ReferenceSolution s;
    s.name = "barrier";
    s.description = "(v^2 - t)/6 + x^2/(4 r^4), L = 1/2 - v x/(2 r^4)";
    s.u = [c, r4](double t, double x, double v) { return c * (v * v - t) + x * x / (4.0 * r4); };
    s.Lu = [r4](double, double x, double v) { return 0.5 - v * x / (2.0 * r4); };
    s.u_v = [c](double, double, double v) { return 2.0 * c * v; };
    s.smooth_at = always;
    return s;
}

ReferenceSolution manufactured_transport() {
    ReferenceSolution s;
    s.name = "transport";
    s.description = "t + x v, L = -1 - v^2";
    s.u = [](double t, double x, double v) { return t + x * v; };
    s.Lu = [](double, double, double v) { return -1.0 - v * v; };
    s.u_v = [](double, double x, double) { return x; };
    s.smooth_at = always;
    return s;
}

ReferenceSolution manufactured_trig() {
    ReferenceSolution s;
    s.name = "trig";
    s.description = "e^t cos v, L = -2 e^t cos v";
    s.u = [](double t, double, double v) { return std::exp(t) * std::cos(v); };
    s.Lu = [](double t, double, double v) { return -2.0 * std::exp(t) * std::cos(v); };
    s.u_v = [](double t, double, double v) { return -std::exp(t) * std::sin(v); };
    s.smooth_at = always;
    return s;
}

std::vector<std::string> reference_names() { return {"half_space", "polynomial", "barrier", "transport", "trig"}; }

ReferenceSolution reference_by_name(const std::string& name) {
    if (name == "half_space") return halfspace_solution(1.0);
    if (name == "polynomial") return polynomial_solution(0.0, 0.5);
    if (name == "barrier") return barrier_function(1.0);
    if (name == "transport") return manufactured_transport();
    if (name == "trig") return manufactured_trig();
    throw ConfigError("unknown reference solution '" + name + "'");
}

double check_homogeneity(const ScalarFn& f, double kappa, const std::vector<KineticPoint>& samples,
                         const std::vector<double>& radii) {
    double worst = 0.0;
    for (const auto& z : samples) {
        const double fz = f(z.t, z.x[0], z.v[0]);
        for (double r : radii) {
            const KineticPoint s = dilate(z, r);
            const double d = std::abs(f(s.t, s.x[0], s.v[0]) - std::pow(r, kappa) * fz) / (1.0 + std::abs(fz));
            worst = std::max(worst, d);
        }
    }
    return worst;
}

double operator_error(const ReferenceSolution& ref, const Grid& g) {
    const Field u = sample(g, ref.u);
    const Field Lh = apply_L(u);
    const double h = std::max(g.dv(), g.dx());
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < g.nt(); ++i)
        for (std::size_t j = 1; j + 1 < g.nx(); ++j)
            for (std::size_t k = 1; k + 1 < g.nv(); ++k) {
                const double t = g.t(i), x = g.x(j), v = g.v(k);
                if (!ref.smooth_at(t, x, v, h)) continue;
                worst = std::max(worst, std::abs(Lh.at(i, j, k) - ref.Lu(t, x, v)));
            }
    return worst;
}

}  // namespace kobs

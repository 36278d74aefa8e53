#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kobs/field.hpp"

namespace kobs {

/// Closed-form function with its exact L-image (n = 1).
struct ReferenceSolution {
    std::string name;
    std::string description;
    ScalarFn u;
    ScalarFn Lu;   ///< exact L u away from any kink
    ScalarFn u_v;  ///< d_v u
    /// False where a stencil of half-width h would straddle a kink of u.
    std::function<bool(double t, double x, double v, double h)> smooth_at;
    int homogeneity = -1;  ///< degree kappa with u(S_r z) = r^kappa u(z), or -1
    bool obstacle_solution = false;  ///< u >= 0 and L u = chi_{u > 0}
};

/// (1/2) (v e)_+^2 with e = +-1.
ReferenceSolution halfspace_solution(double e = 1.0);
/// m t + a v^2; requires 2 a - m = 1, a >= 0, m <= 0 (ConfigError otherwise).
ReferenceSolution polynomial_solution(double m, double a);
/// (v^2 - t) / 6 + x^2 / (4 r^4), with L = 1/2 - v x / (2 r^4).
ReferenceSolution barrier_function(double r);
/// t + x v, with L = -1 - v^2.
ReferenceSolution manufactured_transport();
/// e^t cos v, with L = -2 e^t cos v.
ReferenceSolution manufactured_trig();

/// Names accepted by reference_by_name, in listing order.
std::vector<std::string> reference_names();
/// Default-parameter instance for a listed name.
ReferenceSolution reference_by_name(const std::string& name);

/// max |f(S_r z) - r^kappa f(z)| / (1 + |f(z)|) over samples x radii.
double check_homogeneity(const ScalarFn& f, double kappa, const std::vector<KineticPoint>& samples,
                         const std::vector<double>& radii);

/// max over nodes where ref.smooth_at holds (with one grid step) of |apply_L - Lu|,
/// skipping the outermost layer of nodes.
double operator_error(const ReferenceSolution& ref, const Grid& g);

}  // namespace kobs

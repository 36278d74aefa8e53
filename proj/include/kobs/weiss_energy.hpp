#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kobs/field.hpp"
#include "kobs/reference_solutions.hpp"

namespace kobs {

/// K(t, x, v) = pi^{-n/2} (t^2)^{-n} exp(|v|^2 / t + |x|^2 / t^3) for t < 0.
double kernel_K(double t, const Vec& x, const Vec& v);

/// Tensor bump psi(x, v): 1 where every |x_i|, |v_i| <= 1/2, 0 once any reaches 1,
/// quintic smoothstep in between.
double cutoff_psi(double x, double v);
double cutoff_psi_v(double x, double v);

/// f and d_v f at a point of the original (un-recentred) coordinates.
struct EnergySource {
    std::function<double(double t, double x, double v)> f;
    std::function<double(double t, double x, double v)> f_v;
    double t_min = -1e300;  ///< earliest time the source can be evaluated at
};

EnergySource source_from_reference(const ReferenceSolution& ref);
/// f = u psi, with d_v u by central differences and multilinear interpolation.
/// Requires the grid box to contain the support of psi.
EnergySource source_from_field(const Field& u);

struct QuadratureOptions {
    int panels = 8;       ///< Gauss-Legendre panels per axis
    int order = 8;        ///< nodes per panel (panels * order nodes per axis)
    double sigmas = 8.0;  ///< truncation of the Gaussian factors, in standard deviations
};

/// I(r, f^{z0}) = r^{-4} int_{-4r^2}^{-r^2} int int (|grad_v f|^2 + 2 f + f^2 / t) K dv dx dt,
/// with f^{z0}(z) = f(z0 o z).
double weiss_I(const EnergySource& src, const KineticPoint& z0, double r, const QuadratureOptions& q = {});

/// Mass of K over (x, v) at fixed t < 0 using the same truncated quadrature.
double kernel_mass(double t, const QuadratureOptions& q = {});

/// Energy of the half-space solution (constant in r); computed once by quadrature.
double omega_hat();

struct WeissScan {
    std::vector<double> radii;   ///< ascending
    std::vector<double> values;
    double drift_C = 0.0;        ///< smallest C >= 0 with I(r) + C r^2 nondecreasing (drops below 1e-10 relative ignored)
    bool monotone = false;       ///< true when drift_C == 0
};

WeissScan weiss_scan(const EnergySource& src, const KineticPoint& z0, std::vector<double> radii,
                     const QuadratureOptions& q = {});

enum class EnergyClass { low, high, undetermined };
std::string to_string(EnergyClass c);

struct BalancedEnergy {
    double value = 0.0;       ///< r -> 0 extrapolation of I
    double ratio = 0.0;       ///< value / omega_hat
    EnergyClass cls = EnergyClass::undetermined;
    std::vector<double> radii, values;
};

/// Extrapolates I(r) linearly in r^2 to r = 0 over the given radii and labels the
/// result low (~omega_hat) or high (~2 omega_hat); ratios within dead_band of 3/2
/// are undetermined.
BalancedEnergy balanced_energy(const EnergySource& src, const KineticPoint& z0, const std::vector<double>& radii,
                               double dead_band = 0.15, const QuadratureOptions& q = {});

}  // namespace kobs

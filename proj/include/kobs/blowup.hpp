#pragma once

#include <string>
#include <vector>

#include "kobs/field.hpp"
#include "kobs/weiss_energy.hpp"

namespace kobs {

/// u_r(z) = u(z0 o S_r z) / r^2 sampled on the reference box
/// [-1, 0] x [-1, 1] x [-1, 1] with N cells per axis.
struct RescaledField {
    Field w;
    KineticPoint z0;
    double r = 1.0;
};

RescaledField rescale(const Field& u, const KineticPoint& z0, double r, std::size_t N = 32);

struct HalfspaceFit {
    double e = 1.0;
    double residual = 0.0;  ///< sup |w - (1/2)(v e)_+^2|
};

struct PolynomialFit {
    double m = 0.0, a = 0.0;  ///< m t + a v^2 with 2 a - m = 1
    double residual = 0.0;    ///< sup distance
};

HalfspaceFit fit_halfspace(const Field& w);
/// Least squares under the constraint 2 a - m = 1.
PolynomialFit fit_polynomial(const Field& w);

enum class PointClass { regular, singular, undetermined };
std::string to_string(PointClass c);

struct BlowupOptions {
    std::size_t N = 32;            ///< reference cells per axis
    double dead_band = 0.05;       ///< residual margin for a template to win
    std::vector<double> energy_radii;  ///< empty: skip the energy agreement step
    double energy_band = 0.15;
};

struct RadiusFit {
    double r = 0.0;
    HalfspaceFit hs;
    PolynomialFit poly;
};

struct PointClassification {
    PointClass cls = PointClass::undetermined;
    std::vector<RadiusFit> fits;  ///< in the order of the given radii
    bool energy_checked = false;
    BalancedEnergy energy;
    std::string reason;
};

/// Template decision at the smallest radius, confirmed by the balanced energy
/// (low for regular, high for singular) when energy radii are given.
PointClassification classify_point(const Field& u, const KineticPoint& z0, const std::vector<double>& radii,
                                   const BlowupOptions& opt = {});

struct TransportScan {
    std::vector<double> radii;   ///< as given (descending expected)
    std::vector<double> values;  ///< sup over Omega nodes of Q_r(z0) of |Y u|, 0 if none
    bool nonincreasing = false;  ///< along the given order
    double spearman = 0.0;       ///< rank correlation of (position, value)
    double p_value = 1.0;        ///< one-sided, for a negative trend
};

TransportScan transport_sup_scan(const Field& u, const KineticPoint& z0, const std::vector<double>& radii,
                                 double tol_pos = 0.0);

/// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& a, const std::vector<double>& b);
/// One-sided p-value P(rho_perm <= rho_obs) of a negative association between
/// position 0..n-1 and values; exact enumeration for n <= 9.
double spearman_negative_p(const std::vector<double>& values);

}  // namespace kobs

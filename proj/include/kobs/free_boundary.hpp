#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kobs/field.hpp"

namespace kobs {

enum class Phase : std::uint8_t { positive, contact, ambiguous };

/// Node labels: Omega = {u > tol_pos}, Lambda = {u <= tol_zero}, nodes in between
/// are ambiguous. Gamma marks Lambda nodes with an Omega node among their six
/// axis neighbours.
struct Classification {
    Grid grid;
    std::vector<Phase> phase;
    std::vector<std::uint8_t> gamma;
    double tol_zero = 0.0;
    double tol_pos = 0.0;

    bool contact(std::size_t idx) const noexcept { return phase[idx] == Phase::contact; }
    bool positive(std::size_t idx) const noexcept { return phase[idx] == Phase::positive; }
    bool on_gamma(std::size_t idx) const noexcept { return gamma[idx] != 0; }
    std::size_t count(Phase p) const noexcept;
    std::size_t gamma_count() const noexcept;
};

/// tol_pos < 0 means tol_pos = tol_zero.
Classification classify(const Field& u, double tol_zero = 0.0, double tol_pos = -1.0);

/// Gamma nodes whose coordinates lie in Q_r(z0).
std::vector<KineticPoint> gamma_points_in(const Classification& cls, const Cylinder& q);

/// Minimal width of a finite set (n = 1: max - min; n = 2: rotating calipers on the
/// convex hull). Empty or single-point sets give 0.
double minimal_diameter(const std::vector<Vec>& points);

struct ThicknessResult {
    double delta = 0.0;     ///< sup of m.d. / r
    double witness_t = 0.0;
    double witness_x = 0.0;
    double diameter = 0.0;  ///< m.d. at the witness
};

/// delta_r: sup over x in the closed ball B_{r^3}(x0 - r^2 v0) of
/// m.d.(Lambda(t0 - r^2, x, .) cap closed B_r(v0)) / r. Sections off the t-grid are
/// interpolated linearly in t; contact means u <= tol_zero.
ThicknessResult thickness_delta(const Field& u, const KineticPoint& z0, double r, double tol_zero = 0.0);
/// delta*_r: the same sup also over t in [t0 - r^2, t0 - r^2 / 2].
ThicknessResult thickness_delta_star(const Field& u, const KineticPoint& z0, double r, double tol_zero = 0.0);

/// Graph of the free boundary along the v axis: Lambda = {v < f} for direction +1,
/// Lambda = {v > f} for direction -1.
struct GraphColumn {
    double t = 0.0, x = 0.0;
    double f = 0.0;
    bool mask = false;  ///< exactly one crossing with the expected orientation
    int crossings = 0;
};

struct GraphResult {
    int direction = 1;
    std::size_t nt = 0, nx = 0;
    std::vector<GraphColumn> columns;  ///< t-major

    const GraphColumn& at(std::size_t i, std::size_t j) const { return columns[i * nx + j]; }
};

GraphResult extract_graph(const Field& u, const Classification& cls, int direction = 1);

/// Column window: t in (t0 - r^2, t0], |x - x0 - (t - t0) v0| < r^3.
struct GraphWindow {
    KineticPoint center;
    double r = 0.5;
    bool contains(const GraphColumn& c) const;
};

/// Free boundary point (t, x, f) of the single-crossing column nearest to (t, x),
/// or nothing if no column has a clean crossing.
std::optional<KineticPoint> graph_point(const GraphResult& g, double t, double x);

double single_crossing_fraction(const GraphResult& g, const GraphWindow& w);

struct HolderReport {
    double tx = 0.0;   ///< [f]_{C^{1/2}} in (t, x)
    double vprime = 0.0;  ///< Lipschitz constant in v' (identically 0 for n = 1)
    std::size_t samples = 0;
};

HolderReport holder_seminorms(const GraphResult& g, const GraphWindow& w);

struct ConeCheck {
    bool pass = false;
    double min_slack = 0.0;  ///< min of C0 d_e u - u over the region
    KineticPoint worst;
    std::size_t nodes = 0;
};

/// Box region [t_lo, t_hi] x [x_lo, x_hi] x [v_lo, v_hi] in node coordinates.
struct Box {
    double t_lo, t_hi, x_lo, x_hi, v_lo, v_hi;
    bool contains(double t, double x, double v) const noexcept {
        return t >= t_lo && t <= t_hi && x >= x_lo && x <= x_hi && v >= v_lo && v <= v_hi;
    }
};

/// C0 d_e u - u >= -tol at every node of the region for every unit e in the cone
/// (for n = 1 the cone direction set is {e}). Central differences in v.
ConeCheck cone_monotonicity_check(const Field& u, const Box& region, const VelocityCone& cone, double C0,
                                  double tol = 1e-10);

struct ConeTrapResult {
    bool pass = false;
    std::size_t forward_nodes = 0, backward_nodes = 0;
    std::size_t forward_violations = 0, backward_violations = 0;
};

/// Forward cone a (|t - t0| + |x - x0|)^{1/2} + |v - v0| < e.(v - v0) / psi inside
/// Q_{r0/2}(z0) must be Omega; the backward cone (sign flipped) must be Lambda.
ConeTrapResult cone_trap_check(const Classification& cls, const KineticPoint& z0, double a, double psi, double r0,
                               double e = 1.0);

/// Largest radius rho from the candidate list such that some node z1 of Q_r(z0) has
/// Q_rho(z1) inside Q_r(z0) and every node of Q_rho(z1) in the given phase.
struct CleanCylinder {
    bool found = false;
    KineticPoint center;
    double rho = 0.0;
};

CleanCylinder find_clean_cylinder(const Classification& cls, const Cylinder& q, double rho, Phase phase);

struct CorkscrewResult {
    bool pass = false;
    CleanCylinder contact, positive;
};

CorkscrewResult corkscrew_check(const Classification& cls, const KineticPoint& z0, double r, double kappa);
/// Largest kappa from the list for which the corkscrew check passes (0 if none).
double corkscrew_kappa(const Classification& cls, const KineticPoint& z0, double r,
                       const std::vector<double>& kappas = {0.5, 0.4, 0.3, 0.25, 0.2, 0.15, 0.1, 0.075, 0.05,
                                                            0.025});

/// Fraction of the nodes of Q_r(z0) that are contact nodes.
double lebesgue_density(const Classification& cls, const KineticPoint& z0, double r);

}  // namespace kobs

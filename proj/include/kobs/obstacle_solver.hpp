#pragma once

#include <optional>
#include <string>

#include "kobs/field.hpp"

namespace kobs {

enum class PenaltyVariant { piecewise_linear, cubic_bridge };

PenaltyVariant parse_penalty_variant(const std::string& s);
std::string to_string(PenaltyVariant v);

/// beta_eps: zero on [0, inf), s / eps on (-inf, -eps]; on (-eps, 0) either s / eps
/// (piecewise_linear) or the C^1 cubic -2 s^2/eps^2 - s^3/eps^3 (cubic_bridge).
struct Penalty {
    double eps = 1e-3;
    PenaltyVariant variant = PenaltyVariant::piecewise_linear;

    Penalty() = default;
    Penalty(double e, PenaltyVariant var);
    double operator()(double s) const noexcept;
    double derivative(double s) const noexcept;
};

/// L u = beta(u) + phi (penalized) or min(phi - L u, u) = 0 (projected) on the grid,
/// u = h on incoming boundary nodes.
struct ObstacleProblem {
    Grid grid;
    Field boundary;              ///< h, read at incoming nodes only
    std::optional<Field> forcing;  ///< phi as a field; falls back to forcing_const
    double forcing_const = 1.0;

    double phi(std::size_t idx) const noexcept { return forcing ? (*forcing)[idx] : forcing_const; }
    double phi_sup() const noexcept;
    void validate(bool projected) const;
};

struct MarchOptions {
    double cfl = 1.0;  ///< max Courant number v_ext dt / dx
};

struct NewtonOptions {
    int max_iter = 25;
    double tol = 1e-10;
    double damping = 0.5;  ///< backtracking factor
};

struct ProjectedOptions {
    double omega = 0.0;  ///< relaxation; 0 picks the SOR optimum for the line operator
    double sweep_tol = 1e-12;
    int max_sweeps = 20000;
};

struct SolveDiagnostics {
    std::string method;
    long steps = 0;
    long total_iterations = 0;  ///< Newton iterations or relaxation sweeps
    int max_iterations = 0;     ///< worst single line
    double max_line_residual = 0.0;
    double omega = 0.0;
    double courant = 0.0;
    double seconds = 0.0;
};

struct SolveResult {
    Field u;
    SolveDiagnostics diag;
};

SolveResult solve_penalized(const ObstacleProblem& p, const Penalty& beta, const MarchOptions& march = {},
                            const NewtonOptions& newton = {});
SolveResult solve_projected(const ObstacleProblem& p, const MarchOptions& march = {},
                            const ProjectedOptions& proj = {});

/// sup over non-boundary-data nodes of |min(phi - L_h u, u)| with the marching
/// operator (backward in t, lagged upwind transport).
double complementarity_residual(const ObstacleProblem& p, const Field& u);

/// Default contact tolerance for penalized fields: 10 eps max(1, sup |phi|).
double penalized_zero_tolerance(const ObstacleProblem& p, const Penalty& beta);

}  // namespace kobs

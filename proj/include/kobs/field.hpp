#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "kobs/grid.hpp"

namespace kobs {

/// Node values on a Grid, t-major with v fastest.
class Field {
public:
    Field() = default;
    explicit Field(const Grid& g, double fill = 0.0);
    Field(const Grid& g, std::vector<double> values);

    const Grid& grid() const noexcept { return grid_; }
    std::vector<double>& values() noexcept { return values_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    double& at(std::size_t i, std::size_t j, std::size_t k) noexcept { return values_[grid_.index(i, j, k)]; }
    double at(std::size_t i, std::size_t j, std::size_t k) const noexcept { return values_[grid_.index(i, j, k)]; }
    double operator[](std::size_t idx) const noexcept { return values_[idx]; }
    double& operator[](std::size_t idx) noexcept { return values_[idx]; }

    double sup_norm() const noexcept;
    double max() const noexcept;
    double min() const noexcept;

private:
    Grid grid_;
    std::vector<double> values_;
};

using ScalarFn = std::function<double(double t, double x, double v)>;

/// Evaluate fn at every node.
Field sample(const Grid& g, const ScalarFn& fn);

enum class Axis { t, x, v };
enum class Derivative { dt, dx, dv, dxx, dvv };

/// Finite differences: central inside, second-order one-sided at faces.
/// All stencils are exact on polynomials of degree <= 2 along their axis.
Field diff(const Field& u, Derivative which);

/// Delta_v u - d_t u - v . grad_x u with upwinded transport (sign of v);
/// first-order downwind fallback on inflow faces, one-sided in t at the ends.
Field apply_L(const Field& u);
/// Y u = d_t u + v . grad_x u with central differences.
Field apply_Y(const Field& u);

/// Multilinear interpolation; throws RangeError outside the grid box.
double interpolate(const Field& u, double t, double x, double v);
/// Linear-in-t section u(t, x_j, .) at a fixed x-node; fills out[k] for all v-nodes.
void time_section(const Field& u, double t, std::size_t j, std::vector<double>& out);

/// Binary format: "KOBS1", u64 n, Nt, Nx, Nv, f64 t_lo, t_hi, x_ext, v_ext, then values,
/// all little-endian.
void write_field(std::ostream& os, const Field& u);
Field read_field(std::istream& is);
void save_field(const std::string& path, const Field& u);
Field load_field(const std::string& path);

}  // namespace kobs

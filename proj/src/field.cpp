#include "kobs/field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "kobs/errors.hpp"

namespace kobs {

Field::Field(const Grid& g, double fill) : grid_(g), values_(g.size(), fill) { g.validate(); }

Field::Field(const Grid& g, std::vector<double> values) : grid_(g), values_(std::move(values)) {
    g.validate();
    if (values_.size() != g.size())
        throw ConfigError("field: got " + std::to_string(values_.size()) + " values for a grid of " +
                          std::to_string(g.size()) + " nodes");
}

double Field::sup_norm() const noexcept {
    double m = 0.0;
    for (double x : values_) m = std::max(m, std::abs(x));
    return m;
}

double Field::max() const noexcept { return *std::max_element(values_.begin(), values_.end()); }
double Field::min() const noexcept { return *std::min_element(values_.begin(), values_.end()); }

Field sample(const Grid& g, const ScalarFn& fn) {
    Field u(g);
    for (std::size_t i = 0; i < g.nt(); ++i)
        for (std::size_t j = 0; j < g.nx(); ++j)
            for (std::size_t k = 0; k < g.nv(); ++k) u.at(i, j, k) = fn(g.t(i), g.x(j), g.v(k));
    return u;
}

namespace {

// First derivative along a strided line of m nodes at position p.
inline double d1(const double* f, std::ptrdiff_t s, std::size_t p, std::size_t m, double h) {
    if (p == 0) return (-3.0 * f[0] + 4.0 * f[s] - f[2 * s]) / (2.0 * h);
    if (p == m - 1) return (3.0 * f[0] - 4.0 * f[-s] + f[-2 * s]) / (2.0 * h);
    return (f[s] - f[-s]) / (2.0 * h);
}

inline double d2(const double* f, std::ptrdiff_t s, std::size_t p, std::size_t m, double h) {
    if (p == 0) return (2.0 * f[0] - 5.0 * f[s] + 4.0 * f[2 * s] - f[3 * s]) / (h * h);
    if (p == m - 1) return (2.0 * f[0] - 5.0 * f[-s] + 4.0 * f[-2 * s] - f[-3 * s]) / (h * h);
    return (f[s] - 2.0 * f[0] + f[-s]) / (h * h);
}

}  // namespace

Field diff(const Field& u, Derivative which) {
    const Grid& g = u.grid();
    Field out(g);
    const auto sv = static_cast<std::ptrdiff_t>(1);
    const auto sx = static_cast<std::ptrdiff_t>(g.nv());
    const auto st = static_cast<std::ptrdiff_t>(g.nv() * g.nx());
    const double* base = u.values().data();
    for (std::size_t i = 0; i < g.nt(); ++i)
        for (std::size_t j = 0; j < g.nx(); ++j)
            for (std::size_t k = 0; k < g.nv(); ++k) {
                const std::size_t idx = g.index(i, j, k);
                const double* f = base + idx;
                double r = 0.0;
                switch (which) {
                    case Derivative::dt: r = d1(f, st, i, g.nt(), g.dt()); break;
                    case Derivative::dx: r = d1(f, sx, j, g.nx(), g.dx()); break;
                    case Derivative::dv: r = d1(f, sv, k, g.nv(), g.dv()); break;
                    case Derivative::dxx: r = d2(f, sx, j, g.nx(), g.dx()); break;
                    case Derivative::dvv: r = d2(f, sv, k, g.nv(), g.dv()); break;
                }
                out[idx] = r;
            }
    return out;
}

Field apply_L(const Field& u) {
    const Grid& g = u.grid();
    Field ut = diff(u, Derivative::dt);
    Field uvv = diff(u, Derivative::dvv);
    Field out(g);
    const double hx = g.dx();
    for (std::size_t i = 0; i < g.nt(); ++i)
        for (std::size_t j = 0; j < g.nx(); ++j)
            for (std::size_t k = 0; k < g.nv(); ++k) {
                const double v = g.v(k);
                double ux = 0.0;
                const bool back = (v > 0.0 && j > 0) || (v < 0.0 && j == g.Nx);
                if (v != 0.0)
                    ux = back ? (u.at(i, j, k) - u.at(i, j - 1, k)) / hx : (u.at(i, j + 1, k) - u.at(i, j, k)) / hx;
                const std::size_t idx = g.index(i, j, k);
                out[idx] = uvv[idx] - ut[idx] - v * ux;
            }
    return out;
}

Field apply_Y(const Field& u) {
    const Grid& g = u.grid();
    Field ut = diff(u, Derivative::dt);
    Field ux = diff(u, Derivative::dx);
    for (std::size_t i = 0; i < g.nt(); ++i)
        for (std::size_t j = 0; j < g.nx(); ++j)
            for (std::size_t k = 0; k < g.nv(); ++k) {
                const std::size_t idx = g.index(i, j, k);
                ut[idx] += g.v(k) * ux[idx];
            }
    return ut;
}

namespace {

struct Locate {
    std::size_t i0;
    double w;
};

Locate locate(double s, double lo, double h, std::size_t N) {
    double p = (s - lo) / h;
    if (p < 0.0) p = 0.0;
    if (p > static_cast<double>(N)) p = static_cast<double>(N);
    std::size_t i0 = static_cast<std::size_t>(std::floor(p));
    if (i0 >= N) i0 = N - 1;
    return {i0, p - static_cast<double>(i0)};
}

}  // namespace

double interpolate(const Field& u, double t, double x, double v) {
    const Grid& g = u.grid();
    if (!g.contains(t, x, v)) {
        std::ostringstream os;
        os << "interpolate: point (" << t << ", " << x << ", " << v << ") outside the grid";
        throw RangeError(os.str());
    }
    const Locate a = locate(t, g.t_lo, g.dt(), g.Nt);
    const Locate b = locate(x, -g.x_ext, g.dx(), g.Nx);
    const Locate c = locate(v, -g.v_ext, g.dv(), g.Nv);
    double r = 0.0;
    for (int di = 0; di < 2; ++di) {
        const double wi = di ? a.w : 1.0 - a.w;
        if (wi == 0.0) continue;
        for (int dj = 0; dj < 2; ++dj) {
            const double wj = dj ? b.w : 1.0 - b.w;
            if (wj == 0.0) continue;
            for (int dk = 0; dk < 2; ++dk) {
                const double wk = dk ? c.w : 1.0 - c.w;
                if (wk == 0.0) continue;
                r += wi * wj * wk * u.at(a.i0 + di, b.i0 + dj, c.i0 + dk);
            }
        }
    }
    return r;
}

void time_section(const Field& u, double t, std::size_t j, std::vector<double>& out) {
    const Grid& g = u.grid();
    if (!g.contains(t, 0.0, 0.0)) throw RangeError("time_section: t outside the grid");
    const Locate a = locate(t, g.t_lo, g.dt(), g.Nt);
    out.resize(g.nv());
    for (std::size_t k = 0; k < g.nv(); ++k) {
        const double lo = u.at(a.i0, j, k), hi = u.at(a.i0 + 1, j, k);
        out[k] = a.w == 0.0 ? lo : (1.0 - a.w) * lo + a.w * hi;
    }
}

// --- binary I/O ---

namespace {

constexpr char kMagic[5] = {'K', 'O', 'B', 'S', '1'};

template <class T>
void put_le(std::ostream& os, T value) {
    static_assert(sizeof(T) == 8);
    std::uint64_t bits;
    std::memcpy(&bits, &value, 8);
    unsigned char buf[8];
    for (int b = 0; b < 8; ++b) buf[b] = static_cast<unsigned char>(bits >> (8 * b));
    os.write(reinterpret_cast<const char*>(buf), 8);
}

template <class T>
T get_le(std::istream& is, std::uint64_t& offset) {
    unsigned char buf[8];
    is.read(reinterpret_cast<char*>(buf), 8);
    if (is.gcount() != 8)
        throw FormatError("field file truncated at byte offset " + std::to_string(offset + is.gcount()));
    offset += 8;
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(buf[b]) << (8 * b);
    T value;
    std::memcpy(&value, &bits, 8);
    return value;
}

}  // namespace

void write_field(std::ostream& os, const Field& u) {
    const Grid& g = u.grid();
    os.write(kMagic, 5);
    put_le<std::uint64_t>(os, g.n);
    put_le<std::uint64_t>(os, g.Nt);
    put_le<std::uint64_t>(os, g.Nx);
    put_le<std::uint64_t>(os, g.Nv);
    put_le<double>(os, g.t_lo);
    put_le<double>(os, g.t_hi);
    put_le<double>(os, g.x_ext);
    put_le<double>(os, g.v_ext);
    if constexpr (std::endian::native == std::endian::little) {
        os.write(reinterpret_cast<const char*>(u.values().data()),
                 static_cast<std::streamsize>(u.values().size() * sizeof(double)));
    } else {
        for (double x : u.values()) put_le<double>(os, x);
    }
    if (!os) throw FormatError("field write failed");
}

Field read_field(std::istream& is) {
    char magic[5];
    is.read(magic, 5);
    if (is.gcount() != 5) throw FormatError("field file truncated at byte offset " + std::to_string(is.gcount()));
    if (std::memcmp(magic, kMagic, 5) != 0) throw FormatError("bad magic: not a KOBS1 field file");
    std::uint64_t off = 5;
    Grid g;
    g.n = get_le<std::uint64_t>(is, off);
    g.Nt = get_le<std::uint64_t>(is, off);
    g.Nx = get_le<std::uint64_t>(is, off);
    g.Nv = get_le<std::uint64_t>(is, off);
    g.t_lo = get_le<double>(is, off);
    g.t_hi = get_le<double>(is, off);
    g.x_ext = get_le<double>(is, off);
    g.v_ext = get_le<double>(is, off);
    if (g.Nt > (1u << 20) || g.Nx > (1u << 20) || g.Nv > (1u << 20)) throw FormatError("implausible cell counts");
    try {
        g.validate();
    } catch (const ConfigError& e) {
        throw FormatError(std::string("bad header: ") + e.what());
    }
    std::vector<double> vals(g.size());
    if constexpr (std::endian::native == std::endian::little) {
        const auto bytes = static_cast<std::streamsize>(vals.size() * sizeof(double));
        is.read(reinterpret_cast<char*>(vals.data()), bytes);
        if (is.gcount() != bytes)
            throw FormatError("field file truncated at byte offset " + std::to_string(off + is.gcount()));
    } else {
        for (double& x : vals) x = get_le<double>(is, off);
    }
    return Field(g, std::move(vals));
}

void save_field(const std::string& path, const Field& u) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw FormatError("cannot open " + path + " for writing");
    write_field(os, u);
}

Field load_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open " + path);
    return read_field(is);
}

}  // namespace kobs

#include "kobs/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "kobs/errors.hpp"
#include "kobs/free_boundary.hpp"

namespace kobs {

RescaledField rescale(const Field& u, const KineticPoint& z0, double r, std::size_t N) {
    if (!(r > 0.0)) throw ConfigError("rescale: r must be positive");
    if (z0.dim() != 1) throw ConfigError("rescale: n = 1 only");
    const Grid& g = u.grid();
    const double t0 = z0.t, x0 = z0.x[0], v0 = z0.v[0];
    const double r2 = r * r, r3 = r2 * r;
    const bool fits = g.contains(t0 - r2, 0.0, 0.0) && g.contains(t0, 0.0, 0.0) &&
                      g.contains(t0, 0.0, v0 - r) && g.contains(t0, 0.0, v0 + r) &&
                      g.contains(t0, x0 + r3, 0.0) && g.contains(t0, x0 - r3, 0.0) &&
                      g.contains(t0, x0 + r3 - r2 * v0, 0.0) && g.contains(t0, x0 - r3 - r2 * v0, 0.0);
    if (!fits) throw RangeError("rescale: z0 o S_r(Q_1) leaves the grid");
    const Grid ref = Grid::make(N, N, N);
    RescaledField out{Field(ref), z0, r};
    for (std::size_t i = 0; i < ref.nt(); ++i)
        for (std::size_t j = 0; j < ref.nx(); ++j)
            for (std::size_t k = 0; k < ref.nv(); ++k) {
                const double t = ref.t(i), x = ref.x(j), v = ref.v(k);
                const double T = t0 + r2 * t, X = x0 + r3 * x + r2 * t * v0, V = v0 + r * v;
                out.w.at(i, j, k) = interpolate(u, T, X, V) / r2;
            }
    return out;
}

HalfspaceFit fit_halfspace(const Field& w) {
    const Grid& g = w.grid();
    HalfspaceFit best;
    best.residual = INFINITY;
    for (double e : {1.0, -1.0}) {
        double res = 0.0;
        for (std::size_t i = 0; i < g.nt(); ++i)
            for (std::size_t j = 0; j < g.nx(); ++j)
                for (std::size_t k = 0; k < g.nv(); ++k) {
                    const double p = std::max(e * g.v(k), 0.0);
                    res = std::max(res, std::abs(w.at(i, j, k) - 0.5 * p * p));
                }
        if (res < best.residual) best = {e, res};
    }
    return best;
}

PolynomialFit fit_polynomial(const Field& w) {
    // With m = 2a - 1 the model is w + t = a (2t + v^2): one-parameter least squares.
    const Grid& g = w.grid();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < g.nt(); ++i)
        for (std::size_t j = 0; j < g.nx(); ++j)
            for (std::size_t k = 0; k < g.nv(); ++k) {
                const double t = g.t(i), v = g.v(k);
                const double b = 2.0 * t + v * v;
                num += (w.at(i, j, k) + t) * b;
                den += b * b;
            }
    PolynomialFit fit;
    fit.a = num / den;
    fit.m = 2.0 * fit.a - 1.0;
    for (std::size_t i = 0; i < g.nt(); ++i)
        for (std::size_t j = 0; j < g.nx(); ++j)
            for (std::size_t k = 0; k < g.nv(); ++k) {
                const double t = g.t(i), v = g.v(k);
                fit.residual = std::max(fit.residual, std::abs(w.at(i, j, k) - fit.m * t - fit.a * v * v));
            }
    return fit;
}

std::string to_string(PointClass c) {
    switch (c) {
        case PointClass::regular: return "regular";
        case PointClass::singular: return "singular";
        default: return "undetermined";
    }
}

PointClassification classify_point(const Field& u, const KineticPoint& z0, const std::vector<double>& radii,
                                   const BlowupOptions& opt) {
    if (radii.empty()) throw ConfigError("classify_point: no radii");
    PointClassification out;
    for (double r : radii) {
        const RescaledField rf = rescale(u, z0, r, opt.N);
        out.fits.push_back({r, fit_halfspace(rf.w), fit_polynomial(rf.w)});
    }
    const auto smallest = std::min_element(out.fits.begin(), out.fits.end(),
                                           [](const RadiusFit& a, const RadiusFit& b) { return a.r < b.r; });
    const double hs = smallest->hs.residual, poly = smallest->poly.residual;
    PointClass tmpl = PointClass::undetermined;
    if (hs < poly - opt.dead_band) tmpl = PointClass::regular;
    else if (poly < hs - opt.dead_band) tmpl = PointClass::singular;
    if (tmpl == PointClass::undetermined) {
        out.reason = "template residuals within the dead band";
        return out;
    }
    if (opt.energy_radii.empty()) {
        out.cls = tmpl;
        out.reason = "template decision only";
        return out;
    }
    out.energy_checked = true;
    out.energy = balanced_energy(source_from_field(u), z0, opt.energy_radii, opt.energy_band);
    const EnergyClass want = tmpl == PointClass::regular ? EnergyClass::low : EnergyClass::high;
    if (out.energy.cls == want) {
        out.cls = tmpl;
        out.reason = "template and balanced energy agree";
    } else {
        out.reason = "balanced energy is " + to_string(out.energy.cls) + ", template says " + to_string(tmpl);
    }
    return out;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2) throw ConfigError("spearman: need two equal-length samples");
    auto ranks = [](const std::vector<double>& x) {
        std::vector<std::size_t> idx(x.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) { return x[p] < x[q]; });
        std::vector<double> r(x.size());
        for (std::size_t s = 0; s < idx.size();) {
            std::size_t e = s;
            while (e + 1 < idx.size() && x[idx[e + 1]] == x[idx[s]]) ++e;
            const double avg = 0.5 * static_cast<double>(s + e);
            for (std::size_t q = s; q <= e; ++q) r[idx[q]] = avg;
            s = e + 1;
        }
        return r;
    };
    const auto ra = ranks(a), rb = ranks(b);
    const double n = static_cast<double>(a.size());
    const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
    const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        sab += (ra[i] - ma) * (rb[i] - mb);
        saa += (ra[i] - ma) * (ra[i] - ma);
        sbb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (saa == 0.0 || sbb == 0.0) return 0.0;
    return sab / std::sqrt(saa * sbb);
}

double spearman_negative_p(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 3) return 1.0;
    std::vector<double> pos(n);
    std::iota(pos.begin(), pos.end(), 0.0);
    const double obs = spearman(pos, values);
    if (n <= 9) {
        std::vector<double> perm = values;
        std::sort(perm.begin(), perm.end());
        std::size_t hit = 0, tot = 0;
        do {
            ++tot;
            if (spearman(pos, perm) <= obs + 1e-12) ++hit;
        } while (std::next_permutation(perm.begin(), perm.end()));
        // Distinct permutations of a multiset are equally likely under exchangeability.
        return static_cast<double>(hit) / static_cast<double>(tot);
    }
    if (obs <= -1.0) return 0.0;
    const double df = static_cast<double>(n) - 2.0;
    const double tstat = obs * std::sqrt(df / (1.0 - obs * obs));
    return boost::math::cdf(boost::math::students_t(df), tstat);
}

TransportScan transport_sup_scan(const Field& u, const KineticPoint& z0, const std::vector<double>& radii,
                                 double tol_pos) {
    if (radii.empty()) throw ConfigError("transport scan: no radii");
    const Grid& g = u.grid();
    const Field Yu = apply_Y(u);
    TransportScan out;
    out.radii = radii;
    for (double r : radii) {
        const Cylinder q(z0, r);
        if (!cylinder_fits(g, q)) throw RangeError("transport scan: Q_r(z0) leaves the grid");
        double sup = 0.0;
        for_each_node(g, q, [&](std::size_t i, std::size_t j, std::size_t k) {
            const std::size_t idx = g.index(i, j, k);
            if (u[idx] > tol_pos) sup = std::max(sup, std::abs(Yu[idx]));
        });
        out.values.push_back(sup);
    }
    out.nonincreasing = true;
    for (std::size_t i = 0; i + 1 < out.values.size(); ++i)
        if (out.values[i + 1] > out.values[i]) out.nonincreasing = false;
    if (out.values.size() >= 2) {
        std::vector<double> pos(out.values.size());
        std::iota(pos.begin(), pos.end(), 0.0);
        out.spearman = spearman(pos, out.values);
        out.p_value = spearman_negative_p(out.values);
    }
    return out;
}

}  // namespace kobs

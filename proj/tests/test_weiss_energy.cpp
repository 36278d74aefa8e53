#include <cmath>
#include <functional>
#include <numbers>

#include <gtest/gtest.h>

#include "kobs/errors.hpp"
#include "kobs/weiss_energy.hpp"

using namespace kobs;

namespace {

// Independent oracle for x-independent sources f(t, v). The x integral of K is done by
// hand (int exp(x^2 / t^3) dx = sqrt(pi |t|^3)), leaving
//   r^{-4} int_{r^2}^{4 r^2} int (f_v^2 + 2 f - f^2 / s) s^{-1/2} exp(-v^2 / s) dv ds
// with t = -s, which is integrated by composite Simpson in (s, v) plus one Richardson step.
double simpson2(const std::function<double(double, double)>& g, double s0, double s1, double v0, double v1, int n) {
    auto w = [n](int i) { return (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0); };
    const double hs = (s1 - s0) / n, hv = (v1 - v0) / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) acc += w(i) * w(j) * g(s0 + i * hs, v0 + j * hv);
    return acc * hs * hv / 9.0;
}

double oracle_energy(const std::function<double(double, double)>& f, const std::function<double(double, double)>& fv,
                     double r, double vmax) {
    auto g = [&](double s, double v) {
        const double t = -s, a = f(t, v), b = fv(t, v);
        return (b * b + 2.0 * a - a * a / s) * std::exp(-v * v / s) / std::sqrt(s);
    };
    const double s0 = r * r, s1 = 4 * r * r;
    const double c = simpson2(g, s0, s1, -vmax, vmax, 400), f2 = simpson2(g, s0, s1, -vmax, vmax, 800);
    return (f2 + (f2 - c) / 15.0) / (r * r * r * r);
}

double half(double, double v) { return v > 0 ? 0.5 * v * v : 0.0; }
double half_v(double, double v) { return v > 0 ? v : 0.0; }

// Frozen oracle values.
constexpr double kOmegaHat = 5.4004453269;  // = (195/64) sqrt(pi)

}  // namespace

TEST(WeissOracle, HalfspaceEnergyMatchesFrozenValue) {
    const double oracle = oracle_energy(half, half_v, 1.0, 12.0);
    EXPECT_NEAR(oracle, kOmegaHat, 1e-9);
    EXPECT_NEAR(195.0 / 64.0 * std::sqrt(std::numbers::pi), kOmegaHat, 1e-9);
    EXPECT_NEAR(omega_hat(), kOmegaHat, 1e-9);
    EXPECT_NEAR(omega_hat(), oracle, 1e-9);
}

TEST(WeissOracle, PolynomialEnergies) {
    // m t + a v^2 with 2 a - m = 1.
    for (double m : {0.0, -0.5, -1.0}) {
        const double a = 0.5 * (1.0 + m);
        auto f = [m, a](double t, double v) { return m * t + a * v * v; };
        auto fv = [a](double, double v) { return 2 * a * v; };
        const double oracle = oracle_energy(f, fv, 0.5, 12.0);
        const double lib = weiss_I(source_from_reference(polynomial_solution(m, a)), KineticPoint::origin(1), 0.5);
        EXPECT_NEAR(lib, oracle, 1e-8 * std::abs(oracle)) << "m = " << m;
    }
    // m = 0 is exactly twice the half-space value.
    EXPECT_NEAR(weiss_I(source_from_reference(polynomial_solution(0.0, 0.5)), KineticPoint::origin(1), 1.0),
                2.0 * kOmegaHat, 1e-8);
}

TEST(Weiss, KernelMassIsSqrtPi) {
    for (double t : {-0.01, -0.3, -1.0, -4.0}) EXPECT_NEAR(kernel_mass(t), std::sqrt(std::numbers::pi), 1e-10);
}

TEST(Weiss, KernelFormula) {
    const double t = -0.5, x = 0.1, v = 0.3;
    const double expect = std::exp(v * v / t + x * x / (t * t * t)) / (std::sqrt(std::numbers::pi) * t * t);
    EXPECT_NEAR(kernel_K(t, Vec{x}, Vec{v}), expect, 1e-14);
    EXPECT_THROW(kernel_K(0.0, Vec{0.0}, Vec{0.0}), DomainError);
}

TEST(Weiss, HalfspaceEnergyIsConstantInRadiusAndTranslation) {
    const EnergySource src = source_from_reference(halfspace_solution(1.0));
    for (double r : {0.125, 0.25, 0.5, 1.0}) {
        EXPECT_NEAR(weiss_I(src, KineticPoint::origin(1), r), kOmegaHat, 1e-8);
        EXPECT_NEAR(weiss_I(src, KineticPoint::make1(0.7, -0.3, 0.0), r), kOmegaHat, 1e-8);
    }
    const WeissScan s = weiss_scan(src, KineticPoint::origin(1), {1.0, 0.25, 0.5});
    EXPECT_TRUE(s.monotone);
    EXPECT_EQ(s.radii.front(), 0.25);
}

TEST(Weiss, ScanDriftConstant) {
    // Degree-4 sources give I(r) = A r^4 + B r^2. For f = -t v^2 both A, B > 0, so no drift
    // is needed; for f = -t^2 both are negative and the scan needs C > 0.
    EnergySource up;
    up.f = [](double t, double, double v) { return -t * v * v; };
    up.f_v = [](double t, double, double v) { return -2 * t * v; };
    const WeissScan a = weiss_scan(up, KineticPoint::origin(1), {0.25, 0.5, 1.0});
    EnergySource down;
    down.f = [](double t, double, double) { return -t * t; };
    down.f_v = [](double, double, double) { return 0.0; };
    const WeissScan b = weiss_scan(down, KineticPoint::origin(1), {0.25, 0.5, 1.0});
    EXPECT_TRUE(a.monotone);
    EXPECT_FALSE(b.monotone);
    const WeissScan& dec = b;
    EXPECT_GT(dec.drift_C, 0.0);
    for (std::size_t i = 0; i + 1 < dec.radii.size(); ++i) {
        const double r0 = dec.radii[i], r1 = dec.radii[i + 1];
        EXPECT_LE(dec.values[i] + dec.drift_C * r0 * r0, dec.values[i + 1] + dec.drift_C * r1 * r1 + 1e-9);
    }
}

TEST(Weiss, CutoffShape) {
    EXPECT_EQ(cutoff_psi(0.5, -0.5), 1.0);
    EXPECT_EQ(cutoff_psi(1.0, 0.0), 0.0);
    EXPECT_EQ(cutoff_psi(0.0, 1.2), 0.0);
    EXPECT_GT(cutoff_psi(0.7, 0.7), 0.0);
    EXPECT_LT(cutoff_psi(0.7, 0.7), 1.0);
    const double h = 1e-6;
    for (double v : {0.55, 0.75, 0.95, -0.6})
        EXPECT_NEAR(cutoff_psi_v(0.2, v), (cutoff_psi(0.2, v + h) - cutoff_psi(0.2, v - h)) / (2 * h), 1e-6);
}

TEST(Weiss, BalancedEnergySeparatesTheTwoLevels) {
    const std::vector<double> radii{0.25, 0.125, 0.0625};
    const BalancedEnergy lo = balanced_energy(source_from_reference(halfspace_solution(-1.0)), KineticPoint::origin(1), radii);
    const BalancedEnergy hi = balanced_energy(source_from_reference(polynomial_solution(0.0, 0.5)), KineticPoint::origin(1), radii);
    EXPECT_EQ(lo.cls, EnergyClass::low);
    EXPECT_EQ(hi.cls, EnergyClass::high);
    EXPECT_NEAR(lo.ratio, 1.0, 1e-8);
    EXPECT_NEAR(hi.ratio, 2.0, 1e-8);
}

TEST(Weiss, FieldSourceNeedsTimeRoom) {
    const Field u = sample(Grid::cube(16), [](double, double, double v) { return v > 0 ? 0.5 * v * v : 0.0; });
    const EnergySource src = source_from_field(u);
    EXPECT_NO_THROW(weiss_I(src, KineticPoint::origin(1), 0.5));
    EXPECT_THROW(weiss_I(src, KineticPoint::origin(1), 0.6), RangeError);
    const Field small = sample(Grid::make(8, 8, 8, -1.0, 0.0, 0.5, 1.0), [](double, double, double) { return 0.0; });
    EXPECT_THROW(source_from_field(small), ConfigError);
}

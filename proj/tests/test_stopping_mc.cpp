#include <cmath>
#include <cstring>

#include <gtest/gtest.h>

#include "kobs/errors.hpp"
#include "kobs/parallel.hpp"
#include "kobs/stopping_mc.hpp"

using namespace kobs;

TEST(Paths, BitReproducibleAcrossThreadCaps) {
    const KineticPoint z0 = KineticPoint::make1(0.0, 0.1, -0.3);
    set_thread_cap(1);
    const PathSet a = simulate_paths(z0, 1.0, 20, 500, 99);
    set_thread_cap(3);
    const PathSet b = simulate_paths(z0, 1.0, 20, 500, 99);
    set_thread_cap(0);
    ASSERT_EQ(a.X.size(), b.X.size());
    EXPECT_EQ(std::memcmp(a.X.data(), b.X.data(), a.X.size() * sizeof(double)), 0);
    EXPECT_EQ(std::memcmp(a.V.data(), b.V.data(), a.V.size() * sizeof(double)), 0);
    const PathSet c = simulate_paths(z0, 1.0, 20, 500, 100);
    EXPECT_NE(std::memcmp(a.V.data(), c.V.data(), a.V.size() * sizeof(double)), 0);
    // A prefix of paths does not depend on how many paths follow.
    const PathSet d = simulate_paths(z0, 1.0, 20, 100, 99);
    EXPECT_EQ(std::memcmp(a.V.data(), d.V.data(), d.V.size() * sizeof(double)), 0);
}

TEST(Paths, TerminalMomentsMatchTheDiffusion) {
    const KineticPoint z0 = KineticPoint::make1(0.2, 0.1, -0.3);
    const PathSet ps = simulate_paths(z0, 0.7, 40, 40000, 5);
    const MomentReport m = terminal_moments(ps, z0);
    EXPECT_DOUBLE_EQ(m.expect_var_v, 1.0);
    EXPECT_NEAR(m.expect_x, 0.1 - 0.3 * 0.5, 1e-15);
    EXPECT_LE(std::abs(m.var_v - m.expect_var_v), 3.0 * m.se_var_v);
    // Euler's x update is exact in mean: E[X_T] = x0 + v0 (T - t0).
    EXPECT_LE(std::abs(m.mean_x - m.expect_x), 3.0 * m.se_x);
}

TEST(Lsmc, ConstantPayoffIsExact) {
    const LsmcResult r = lsmc_price([](double, double, double) { return 1.0; }, KineticPoint::make1(0, 0, 0), 1.0);
    EXPECT_EQ(r.value, 1.0);
    EXPECT_EQ(r.se, 0.0);
}

TEST(Lsmc, ValueDominatesImmediatePayoffAndIsReproducible) {
    const Payoff psi = [](double, double x, double v) { return std::exp(-x * x - v * v); };
    LsmcOptions o;
    o.paths = 4000;
    o.steps = 20;
    o.seed = 3;
    const KineticPoint z = KineticPoint::make1(0.0, 0.0, 0.9);
    const LsmcResult a = lsmc_price(psi, z, 0.25, o), b = lsmc_price(psi, z, 0.25, o);
    EXPECT_EQ(a.value, b.value);
    EXPECT_GE(a.value, psi(0, 0, 0.9));
    EXPECT_GT(a.se, 0.0);
    // At the peak stopping immediately is optimal.
    EXPECT_TRUE(lsmc_price(psi, KineticPoint::make1(0, 0, 0), 0.25, o).immediate);
    o.degree = 9;
    EXPECT_THROW(lsmc_price(psi, z, 0.25, o), ConfigError);
}

TEST(Lsmc, MapToObstacleCoordinates) {
    const KineticPoint z = map_to_obstacle(KineticPoint::make1(0.1, 0.4, -0.2), 1.0);
    EXPECT_DOUBLE_EQ(z.t, 0.9);
    EXPECT_DOUBLE_EQ(z.x[0], -0.4);
    EXPECT_DOUBLE_EQ(z.v[0], -0.2);
}

TEST(Lsmc, PdePriceOfConstantPayoffIsOne) {
    const Grid g = Grid::make(8, 16, 16, 0.0, 0.5, 2.0, 2.0);
    const PdePriceResult r = pde_price([](double, double, double) { return 1.0; }, 0.5, g,
                                       {KineticPoint::make1(0, 0, 0), KineticPoint::make1(0.2, 0.5, -0.5)});
    for (double v : r.values) EXPECT_NEAR(v, 1.0, 1e-12);
    EXPECT_THROW(pde_price([](double, double, double) { return 1.0; }, 1.0, g, {}), ConfigError);
}

TEST(Paths, RejectsBadArguments) {
    EXPECT_THROW(simulate_paths(KineticPoint::origin(1), 0.0, 10, 10, 1), ConfigError);
    EXPECT_THROW(simulate_paths(KineticPoint::origin(1), 1.0, 0, 10, 1), ConfigError);
    EXPECT_THROW(simulate_paths(KineticPoint::origin(2), 1.0, 10, 10, 1), ConfigError);
}

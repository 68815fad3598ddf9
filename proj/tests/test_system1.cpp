#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oscsat/system1.hpp"

using namespace oscsat;
using namespace oscsat::testing;

namespace {

doctest::Approx near(double v) { return doctest::Approx(v).epsilon(1e-12); }

const std::vector<double> kGrad0{-0.016320155763905407, 0.040063773765138859,
                                 -0.065937348128980625, 0.012602409120427078,
                                 -0.014963193152318151, 0.062691331199345376};

}  // namespace

TEST_CASE("energy spot values") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system1_defaults();
    CHECK(energy_v(f, p, kT0, kAlpha0) == near(0.026013437939905345));
    SystemParams pn = p;
    pn.kernel_normalized = true;
    CHECK(energy_v(f, pn, kT0, kAlpha0) == near(1.6648600281539421));
}

TEST_CASE("gradient and flow spot values") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system1_defaults();
    std::vector<double> g = grad_v(f, p, kT0, kAlpha0);
    REQUIRE(g.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(g[i] == near(kGrad0[i]));

    std::vector<double> r = rhs_system1(f, p, kT0, kAlpha0);
    CHECK(r[0] == near(-0.98367984423609456));
    CHECK(r[3] == near(-1.0126024091204271));
    for (std::size_t i = 0; i < 6; ++i) CHECK(r[i] == near(-(g[i] + 1.0)));
}

TEST_CASE("gradient matches finite differences") {
    SystemParams p = SystemParams::system1_defaults();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double h = 1e-6;

    for (int inst = 0; inst < 3; ++inst) {
        Formula f = inst == 0 ? load_a12() : generate_random_3sat(5 + inst, 12, rng());
        std::vector<double> alpha(static_cast<std::size_t>(f.num_vars));
        for (int trial = 0; trial < 3; ++trial) {
            for (double& a : alpha) a = unit(rng);
            double t = unit(rng);
            std::vector<double> g = grad_v(f, p, t, alpha);
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                double save = alpha[i];
                alpha[i] = save + h;
                double vp = energy_v(f, p, t, alpha);
                alpha[i] = save - h;
                double vm = energy_v(f, p, t, alpha);
                alpha[i] = save;
                double fd = (vp - vm) / (2.0 * h);
                CHECK(g[i] == doctest::Approx(fd).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("descent identity at omega = 1") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system1_defaults();
    p.omega = 1.0;
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, kTwoPi);
    const double h = 1e-5;

    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> alpha(6);
        for (double& a : alpha) a = unit(rng);
        double t = unit(rng);

        std::vector<double> r = rhs_system1(f, p, t, alpha);
        double expected = 0.0;
        for (double ri : r) expected -= (1.0 + ri) * (1.0 + ri);

        std::vector<double> fwd(6), bwd(6);
        for (std::size_t i = 0; i < 6; ++i) {
            fwd[i] = alpha[i] + h * r[i];
            bwd[i] = alpha[i] - h * r[i];
        }
        double dvdt = (energy_v(f, p, t + h, fwd) - energy_v(f, p, t - h, bwd)) / (2.0 * h);
        CHECK(dvdt == doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("satisfying corner is a zero-energy fixed point") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system1_defaults();
    std::vector<double> alpha(6);
    Assignment model = bits("000111");
    for (int i = 0; i < 6; ++i)
        alpha[static_cast<std::size_t>(i)] = model.bits[static_cast<std::size_t>(i)] ? 0.0 : 0.5;

    CHECK(energy_v(f, p, 0.0, alpha) == 0.0);
    std::vector<double> g = grad_v(f, p, 0.0, alpha);
    std::vector<double> r = rhs_system1(f, p, 0.0, alpha);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(g[i] == 0.0);
        CHECK(r[i] == -1.0);
    }
}

TEST_CASE("energy is nonnegative") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system1_defaults();
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> alpha(6);
        for (double& a : alpha) a = unit(rng);
        CHECK(energy_v(f, p, unit(rng), alpha) >= 0.0);
    }
}

TEST_CASE("coupling scales linearly in A") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system1_defaults();
    p.A = 0.0;
    CHECK(energy_v(f, p, kT0, kAlpha0) == 0.0);
    for (double g : grad_v(f, p, kT0, kAlpha0)) CHECK(g == 0.0);
    for (double r : rhs_system1(f, p, kT0, kAlpha0)) CHECK(r == -1.0);
}

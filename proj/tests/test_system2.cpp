#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oscsat/system2.hpp"

using namespace oscsat;
using namespace oscsat::testing;

namespace {

doctest::Approx near(double v) { return doctest::Approx(v).epsilon(1e-12); }

constexpr double kPi = std::numbers::pi;
constexpr double kE1 = 1.8382031250000002;
constexpr double kE2 = -0.50554687499999995;

const std::vector<double> kRhsFull0{0.0013235693597350529,  -0.003246913674961817,
                                    0.0052471274445492011,  -0.0010712775312798292,
                                    0.0012677337138598075,  -0.0050731948736579581};
const std::vector<double> kRhsPrinted0{0.0032754210713491954, 0.0066374417826344859,
                                       -0.004367332353437405, -0.012568858299854192,
                                       0.0042227954875265821, -0.0075020480854386682};
const std::vector<double> kRhsGradient0{0.0092480121653703666, 0.0099358743869376424,
                                        -0.0088158719575131723, -0.021811355249317786,
                                        0.0081507606004420623,  -0.0070100003431391219};

std::vector<double> corner_phases(const std::string& assignment) {
    std::vector<double> phi;
    for (char c : assignment) phi.push_back(c == '1' ? 0.0 : kPi);
    return phi;
}

}  // namespace

TEST_CASE("full dynamics spot values") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system2_defaults();
    std::vector<double> r = rhs_full(f, p, kT0, kAlpha0);
    REQUIRE(r.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(r[i] == near(kRhsFull0[i]));

    p.A = 0.0;
    p.A_s = 0.0;
    for (double ri : rhs_full(f, p, kT0, kAlpha0)) CHECK(ri == 0.0);
}

TEST_CASE("averaged energy spot value and flip symmetry") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system2_defaults();
    CHECK(energy_e(f, p, kPhi0) == near(-0.033628210299018142));

    std::vector<double> flipped = kPhi0;
    for (double& q : flipped) q += kPi;
    CHECK(energy_e(f, p, flipped) == near(energy_e(f, p, kPhi0)));
}

TEST_CASE("corner energies of the fixture") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system2_defaults();
    CHECK(energy_e(f, p, corner_phases("000111")) == near(-0.092819824218750013));
    CHECK(energy_e(f, p, corner_phases("111000")) == near(-0.092819824218750013));
    CHECK(energy_e(f, p, corner_phases("111111")) == near(0.12690673828124999));
}

TEST_CASE("averaged dynamics spot values") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system2_defaults();

    p.s2_mode = System2Mode::averaged_printed;
    std::vector<double> rp = rhs_averaged(f, p, kPhi0);
    for (std::size_t i = 0; i < 6; ++i) CHECK(rp[i] == near(kRhsPrinted0[i]));

    p.s2_mode = System2Mode::averaged_gradient;
    std::vector<double> rg = rhs_averaged(f, p, kPhi0);
    for (std::size_t i = 0; i < 6; ++i) CHECK(rg[i] == near(kRhsGradient0[i]));
}

TEST_CASE("gradient mode is exactly minus the energy gradient") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system2_defaults();
    p.s2_mode = System2Mode::averaged_gradient;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, kTwoPi);
    const double h = 1e-6;

    for (int trial = 0; trial < 2; ++trial) {
        std::vector<double> phi(6);
        for (double& q : phi) q = unit(rng);
        std::vector<double> r = rhs_averaged(f, p, phi);
        for (std::size_t i = 0; i < 6; ++i) {
            double save = phi[i];
            phi[i] = save + h;
            double ep = energy_e(f, p, phi);
            phi[i] = save - h;
            double em = energy_e(f, p, phi);
            phi[i] = save;
            double fd = -(ep - em) / (2.0 * h);
            CHECK(r[i] == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("corners are equilibria of the averaged dynamics") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system2_defaults();
    for (System2Mode mode : {System2Mode::averaged_printed, System2Mode::averaged_gradient}) {
        p.s2_mode = mode;
        for (const char* corner : {"000111", "101010", "111111"}) {
            for (double r : rhs_averaged(f, p, corner_phases(corner)))
                CHECK(std::abs(r) < 1e-12);
        }
    }
}

TEST_CASE("mode guards") {
    Formula f = load_a12();
    SystemParams p = SystemParams::system2_defaults();
    p.s2_mode = System2Mode::full;
    CHECK_THROWS_AS(rhs_averaged(f, p, kPhi0), std::invalid_argument);

    Formula two_lit = parse_dimacs("p cnf 3 1\n1 2 0\n");
    std::vector<double> phi{0.1, 0.2, 0.3};
    CHECK_THROWS_AS(energy_e(two_lit, p, phi), std::invalid_argument);
}

TEST_CASE("pair coupling at corners") {
    CHECK(pair_term_T(1, 1, 0.0, 0.0) == near(7.5));
    CHECK(pair_term_T(1, -1, 0.0, 0.0) == near(-7.5));
    CHECK(pair_term_T(1, 1, 0.0, kPi) == near(-7.5));
    CHECK(pair_term_T(-1, -1, kPi, kPi) == near(7.5));
    for (int ci : {-1, 1})
        for (int cj : {-1, 1})
            for (int bi : {0, 1})
                for (int bj : {0, 1}) {
                    double ui = bi ? 1.0 : -1.0;
                    double uj = bj ? 1.0 : -1.0;
                    CHECK(pair_term_T(ci, cj, bi ? 0.0 : kPi, bj ? 0.0 : kPi) ==
                          near(7.5 * ci * cj * ui * uj));
                }
}

TEST_CASE("discrete clause energy levels") {
    SystemParams p = SystemParams::system2_defaults();
    CHECK(discrete_clause_energy(p, {1, 1, 1}, {0.0, 0.0, 0.0}) == near(kE1));
    CHECK(discrete_clause_energy(p, {1, 1, 1}, {0.0, 0.0, kPi}) == near(kE2));
    CHECK(discrete_clause_energy(p, {-1, 1, -1}, {kPi, 0.0, kPi}) == near(kE1));
    CHECK(kE1 - kE2 == near(15.0 / 16.0 * kPi * p.A));

    CHECK_THROWS_AS(discrete_clause_energy(p, {1, 0, 1}, {0.0, 0.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(discrete_clause_energy(p, {1, 1, 1}, {0.0, 1.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("clause energy table") {
    SystemParams p = SystemParams::system2_defaults();
    std::vector<ClauseEnergyRow> rows = clause_energy_table(p);
    REQUIRE(rows.size() == 64);

    CHECK(rows[0].signs == std::array<int, 3>{1, 1, 1});
    CHECK(rows[0].corner == std::array<double, 3>{0.0, 0.0, 0.0});
    CHECK_FALSE(rows[0].nae_satisfied);
    CHECK(rows[0].energy == near(kE1));

    // row 13: sign bits 001, corner bits 101
    CHECK(rows[13].signs == std::array<int, 3>{1, 1, -1});
    CHECK(rows[13].corner == std::array<double, 3>{kPi, 0.0, kPi});

    CHECK(rows[63].signs == std::array<int, 3>{-1, -1, -1});
    CHECK(rows[63].corner == std::array<double, 3>{kPi, kPi, kPi});
    CHECK_FALSE(rows[63].nae_satisfied);

    int e1_rows = 0, e2_rows = 0;
    for (const ClauseEnergyRow& row : rows) {
        bool at_e1 = std::abs(row.energy - kE1) <= 1e-12 * std::abs(kE1);
        bool at_e2 = std::abs(row.energy - kE2) <= 1e-12 * std::abs(kE2);
        CHECK(at_e1 != at_e2);
        CHECK(row.nae_satisfied == at_e2);
        e1_rows += at_e1 ? 1 : 0;
        e2_rows += at_e2 ? 1 : 0;

        // independent recount through the clause evaluator
        Formula single;
        single.num_vars = 3;
        single.clauses.push_back(
            {{Lit{1, row.signs[0]}, Lit{2, row.signs[1]}, Lit{3, row.signs[2]}}});
        Assignment a;
        for (double q : row.corner) a.bits.push_back(q == 0.0 ? 1 : 0);
        CHECK(eval_assignment(single, a).nae_count == (row.nae_satisfied ? 1 : 0));
    }
    CHECK(e1_rows == 16);
    CHECK(e2_rows == 48);
}

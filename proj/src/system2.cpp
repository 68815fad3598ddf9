#include "oscsat/system2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oscsat/kernel.hpp"

namespace oscsat {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sizes(const Formula& f, std::span<const double> state) {
    if (static_cast<int>(state.size()) != f.num_vars)
        throw std::invalid_argument("state size does not match variable count");
}

void require_strict3(const Formula& f) {
    for (const Clause& cl : f.clauses)
        if (cl.lits.size() != 3)
            throw std::invalid_argument("averaged system 2 forms need 3-literal clauses");
}

double averaged_prefactor(const Formula& f, const SystemParams& p) {
    return kPi * p.A * std::exp2(static_cast<double>(-2 * f.num_vars + 1));
}

}  // namespace

void rhs_full(const Formula& f, const SystemParams& p, double t, std::span<const double> alpha,
              std::span<double> out) {
    check_sizes(f, alpha);
    if (out.size() != alpha.size()) throw std::invalid_argument("output size mismatch");
    TrigTable trig;
    trig.fill(p, t, alpha);
    for (double& v : out) v = 0.0;
    for (const Clause& cl : f.clauses) {
        double absent = absent_weight(p, f.num_vars, static_cast<int>(cl.lits.size()));
        ClauseTerms ct = eval_clause_terms(cl, absent, trig);
        for (std::size_t k = 0; k < cl.lits.size(); ++k) {
            const Lit& l = cl.lits[k];
            std::size_t i = static_cast<std::size_t>(l.var - 1);
            out[i] -= p.A * trig.s[i] * l.sign * ct.loo[k] * ct.loo[k] * ct.f[k];
        }
    }
    double inj_carrier = std::cos(2.0 * p.omega * t);
    for (std::size_t i = 0; i < out.size(); ++i) {
        double sin2 = 2.0 * trig.s[i] * trig.c[i];
        out[i] -= p.A_s * sin2 * inj_carrier;
    }
}

std::vector<double> rhs_full(const Formula& f, const SystemParams& p, double t,
                             std::span<const double> alpha) {
    std::vector<double> out(alpha.size());
    rhs_full(f, p, t, alpha, out);
    return out;
}

double energy_e(const Formula& f, const SystemParams& p, std::span<const double> phi) {
    check_sizes(f, phi);
    require_strict3(f);
    const double pref = averaged_prefactor(f, p);
    double total = 0.0;
    for (const Clause& cl : f.clauses) {
        for (std::size_t q = 0; q < 3; ++q) {
            const Lit& a = cl.lits[q];
            const Lit& b = cl.lits[(q + 1) % 3];
            const Lit& c = cl.lits[(q + 2) % 3];
            double ca = a.sign, cb = b.sign, cc = c.sign;
            double pa = phi[static_cast<std::size_t>(a.var - 1)];
            double pb = phi[static_cast<std::size_t>(b.var - 1)];
            double pc = phi[static_cast<std::size_t>(c.var - 1)];
            total += pref *
                     (2.0 * ca * cb * (1.0 + 0.5 * cc * cc) * std::cos(pa - pb) +
                      2.0 * ca * cc * (1.0 + 0.5 * cb * cb) * std::cos(pa - pc) +
                      0.5 * ca * cb * cc * cc * std::cos(pa + pb - 2.0 * pc) +
                      0.5 * ca * cc * cb * cb * std::cos(pa + pc - 2.0 * pb) +
                      0.125 * ca * ca * cc * cc * (1.0 + 0.5 * cb * cb) * std::cos(2.0 * pa - 2.0 * pc) +
                      0.125 * ca * ca * cb * cb * (1.0 + 0.5 * cc * cc) * std::cos(2.0 * pa - 2.0 * pb) +
                      0.5 * ca * ca * cb * cc * std::cos(2.0 * pa - pb - pc));
        }
    }
    for (std::size_t i = 0; i < phi.size(); ++i)
        total -= 0.5 * kPi * p.A_s * std::cos(2.0 * phi[i]);
    return total;
}

void rhs_averaged(const Formula& f, const SystemParams& p, std::span<const double> phi,
                  std::span<double> out) {
    check_sizes(f, phi);
    if (out.size() != phi.size()) throw std::invalid_argument("output size mismatch");
    require_strict3(f);
    if (p.s2_mode == System2Mode::full)
        throw std::invalid_argument("rhs_averaged needs an averaged s2_mode");
    const bool printed = p.s2_mode == System2Mode::averaged_printed;
    const double pref = averaged_prefactor(f, p);
    for (double& v : out) v = 0.0;
    for (const Clause& cl : f.clauses) {
        for (std::size_t q = 0; q < 3; ++q) {
            const Lit& a = cl.lits[q];
            const Lit& b = cl.lits[(q + 1) % 3];
            const Lit& c = cl.lits[(q + 2) % 3];
            double ca = a.sign, cb = b.sign, cc = c.sign;
            std::size_t ia = static_cast<std::size_t>(a.var - 1);
            double pa = phi[ia];
            double pb = phi[static_cast<std::size_t>(b.var - 1)];
            double pc = phi[static_cast<std::size_t>(c.var - 1)];
            double fam;
            if (printed) {
                fam = 2.0 * ca * cb * (1.0 + 0.5 * cc * cc) * std::sin(pa - pb) +
                      2.0 * ca * cc * (1.0 + 0.5 * cb * cb) * std::sin(pa - pc) +
                      0.5 * ca * cb * cc * cc * std::sin(pa + pb - 2.0 * pc) +
                      0.5 * ca * cc * cb * cb * std::sin(pa + pc - 2.0 * pb) +
                      0.25 * ca * ca * cc * cc * (1.0 + 0.5 * cb * cb) * std::sin(2.0 * pa - 2.0 * pc) +
                      0.25 * ca * ca * cb * cb * (1.0 + 0.5 * cc * cc) * std::sin(2.0 * pa - 2.0 * pb) +
                      ca * ca * cb * cc * std::sin(2.0 * pa - pb - pc);
            } else {
                // exact -dE/dphi_a, all blocks of the clause collected
                // (coefficients for sign values in {-1, +1})
                fam = 6.0 * ca * cb * std::sin(pa - pb) +
                      6.0 * ca * cc * std::sin(pa - pc) +
                      1.5 * ca * cb * std::sin(pa + pb - 2.0 * pc) +
                      1.5 * ca * cc * std::sin(pa + pc - 2.0 * pb) +
                      0.75 * std::sin(2.0 * pa - 2.0 * pc) +
                      0.75 * std::sin(2.0 * pa - 2.0 * pb) +
                      3.0 * cb * cc * std::sin(2.0 * pa - pb - pc);
            }
            out[ia] += pref * fam;
        }
    }
    for (std::size_t i = 0; i < phi.size(); ++i)
        out[i] -= kPi * p.A_s * std::sin(2.0 * phi[i]);
}

std::vector<double> rhs_averaged(const Formula& f, const SystemParams& p,
                                 std::span<const double> phi) {
    std::vector<double> out(phi.size());
    rhs_averaged(f, p, phi, out);
    return out;
}

double pair_term_T(int ci, int cj, double phi_i, double phi_j) {
    return ci * cj * (6.0 * std::cos(phi_i - phi_j) + 1.5 * std::cos(phi_i + phi_j));
}

double discrete_clause_energy(const SystemParams& p, const std::array<int, 3>& signs,
                              const std::array<double, 3>& corner) {
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("clause signs must be +1 or -1");
    for (double c : corner)
        if (std::abs(c) > 1e-9 && std::abs(c - kPi) > 1e-9)
            throw std::invalid_argument("corner phases must be 0 or pi");
    double T = pair_term_T(signs[0], signs[1], corner[0], corner[1]) +
               pair_term_T(signs[1], signs[2], corner[1], corner[2]) +
               pair_term_T(signs[2], signs[0], corner[2], corner[0]);
    return kPi * p.A / 32.0 * (T + 9.0 / 8.0) - 1.5 * kPi * p.A_s;
}

std::vector<ClauseEnergyRow> clause_energy_table(const SystemParams& p) {
    Formula f3;
    f3.num_vars = 3;
    f3.clauses.resize(1);

    std::vector<ClauseEnergyRow> rows;
    rows.reserve(64);
    for (int sb = 0; sb < 8; ++sb) {
        ClauseEnergyRow row;
        for (int q = 0; q < 3; ++q) row.signs[q] = ((sb >> (2 - q)) & 1) == 0 ? +1 : -1;
        f3.clauses[0].lits = {Lit{1, row.signs[0]}, Lit{2, row.signs[1]}, Lit{3, row.signs[2]}};
        for (int cb = 0; cb < 8; ++cb) {
            Assignment a;
            a.bits.resize(3);
            for (int q = 0; q < 3; ++q) {
                bool high = ((cb >> (2 - q)) & 1) == 0;
                row.corner[q] = high ? 0.0 : kPi;
                a.bits[static_cast<std::size_t>(q)] = high ? 1 : 0;
            }
            row.energy = discrete_clause_energy(p, row.signs, row.corner);
            row.nae_satisfied = eval_assignment(f3, a).nae_count == 1;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace oscsat

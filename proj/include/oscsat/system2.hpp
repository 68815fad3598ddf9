#ifndef OSCSAT_SYSTEM2_HPP
#define OSCSAT_SYSTEM2_HPP

#include <array>
#include <span>
#include <vector>

#include "oscsat/formula.hpp"
#include "oscsat/phase.hpp"

namespace oscsat {

// Full sub-harmonically injected dynamics:
// dalpha_i/dt = -A sin(theta_i) sum_{m : c_mi != 0} c_mi (K_m^(i))^2 f_mi
//               - A_s sin(2 theta_i) cos(2 omega t)
// with f_mi = (1 - c_mi cos theta_i)/2.
void rhs_full(const Formula& f, const SystemParams& p, double t, std::span<const double> alpha,
              std::span<double> out);
std::vector<double> rhs_full(const Formula& f, const SystemParams& p, double t,
                             std::span<const double> alpha);

// Time-averaged Lyapunov energy of the slow phases. Requires every clause to
// have exactly 3 literals.
double energy_e(const Formula& f, const SystemParams& p, std::span<const double> phi);

// Averaged slow dynamics dphi_i/dt. Two variants selected by p.s2_mode:
// averaged_printed uses the harmonic-balance family coefficients as derived,
// averaged_gradient uses -dE/dphi_i exactly (so dE/dt = -sum (dphi/dt)^2).
// Throws std::invalid_argument when p.s2_mode == full.
void rhs_averaged(const Formula& f, const SystemParams& p, std::span<const double> phi,
                  std::span<double> out);
std::vector<double> rhs_averaged(const Formula& f, const SystemParams& p,
                                 std::span<const double> phi);

// Pair coupling of two phase-binarized variables:
// T = c_i c_j (6 cos(phi_i - phi_j) + 3/2 cos(phi_i + phi_j)).
double pair_term_T(int ci, int cj, double phi_i, double phi_j);

// Energy of one isolated 3-literal clause (its 3 variables only, N = 3) at a
// corner configuration (each entry 0 or pi):
// (pi A / 32) [T_ij + T_jk + T_ki + 9/8] - (3/2) pi A_s.
// The result is always one of the two corner levels
// E1 = (189/256) pi A - (3/2) pi A_s  (not-all-equal violated)
// E2 = -(51/256) pi A - (3/2) pi A_s  (not-all-equal satisfied).
double discrete_clause_energy(const SystemParams& p, const std::array<int, 3>& signs,
                              const std::array<double, 3>& corner);

struct ClauseEnergyRow {
    std::array<int, 3> signs;
    std::array<double, 3> corner;
    double energy = 0.0;
    bool nae_satisfied = false;
};

// All 8 sign patterns x 8 corners of a single clause, sign-major order
// (+1 before -1, first slot most significant; corners likewise with 0
// before pi). 64 rows.
std::vector<ClauseEnergyRow> clause_energy_table(const SystemParams& p);

}  // namespace oscsat

#endif

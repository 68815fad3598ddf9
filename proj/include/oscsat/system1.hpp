#ifndef OSCSAT_SYSTEM1_HPP
#define OSCSAT_SYSTEM1_HPP

#include <span>
#include <vector>

#include "oscsat/formula.hpp"
#include "oscsat/phase.hpp"

namespace oscsat {

// V(t, alpha) = sum_m A * K_m^2. Nonnegative; zero exactly at satisfying
// phase configurations.
double energy_v(const Formula& f, const SystemParams& p, double t,
                std::span<const double> alpha);

// dV/dalpha_i, computed clause-wise with leave-one-out products:
// grad_i = sum_m 2 A K_m c_mi (K_m^(i)/2) sin(theta_i) * omega.
void grad_v(const Formula& f, const SystemParams& p, double t, std::span<const double> alpha,
            std::span<double> out);
std::vector<double> grad_v(const Formula& f, const SystemParams& p, double t,
                           std::span<const double> alpha);

// dalpha_i/dt = -(grad_i + 1).
void rhs_system1(const Formula& f, const SystemParams& p, double t,
                 std::span<const double> alpha, std::span<double> out);
std::vector<double> rhs_system1(const Formula& f, const SystemParams& p, double t,
                                std::span<const double> alpha);

}  // namespace oscsat

#endif

#ifndef OSCSAT_KERNEL_HPP
#define OSCSAT_KERNEL_HPP

#include <array>
#include <span>
#include <vector>

#include "oscsat/formula.hpp"
#include "oscsat/phase.hpp"

namespace oscsat {

// cos/sin of theta_i for every variable at one evaluation point.
struct TrigTable {
    std::vector<double> c;
    std::vector<double> s;

    void fill(const SystemParams& p, double t, std::span<const double> alpha);
};

// Per-clause kernel pieces. Slot k corresponds to clause literal k:
// f[k] = (1 - c_k cos theta_k)/2, loo[k] = K without the f[k] factor,
// K = loo[k] * f[k] for every k.
struct ClauseTerms {
    double K = 0.0;
    std::array<double, 3> loo{};
    std::array<double, 3> f{};
};

// Weight contributed by the variables absent from a clause of arity L:
// 2^-(N-L), or 1 when the normalized kernel is selected.
double absent_weight(const SystemParams& p, int num_vars, int arity);

ClauseTerms eval_clause_terms(const Clause& cl, double absent, const TrigTable& trig);

// K_m(t, alpha) = absent_weight * prod_{literals} (1 - c_mi cos theta_i)/2.
// Lies in [0, absent_weight]; zero iff some present literal is true exactly.
double kernel_value(const Formula& f, int m, const SystemParams& p, double t,
                    std::span<const double> alpha);

// K_m with the factor of variable `var` left out. Throws std::invalid_argument
// if `var` does not appear in clause m.
double kernel_leave_one_out(const Formula& f, int m, int var, const SystemParams& p, double t,
                            std::span<const double> alpha);

}  // namespace oscsat

#endif

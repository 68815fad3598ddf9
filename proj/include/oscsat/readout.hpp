#ifndef OSCSAT_READOUT_HPP
#define OSCSAT_READOUT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "oscsat/formula.hpp"
#include "oscsat/integrator.hpp"
#include "oscsat/phase.hpp"

namespace oscsat {

// Phase-to-Boolean decoding. A variable reads 1 near phase 0 and 0 near
// phase pi; ties on the decision boundary break toward 1 and are flagged.
struct ReadoutResult {
    Assignment x;
    std::vector<double> confidence;           // |cos phase|, in [0,1]
    std::vector<std::uint8_t> ambiguous_flags;  // within 1e-9 of the boundary

    bool any_ambiguous() const;
};

// System 1: decode from x_i(t) = (1 + cos theta_i)/2 >= 1/2, i.e.
// bit = cos(theta_i) >= 0.
ReadoutResult binarize_system1(const SystemParams& p, double t, std::span<const double> alpha);

// System 2: decode from the slow phase (nearer 0 than pi reads 1), with
// phi_i = omega * alpha_i in full mode and phi_i = state_i in the averaged
// modes.
ReadoutResult binarize_system2(const SystemParams& p, std::span<const double> state);

// True iff the decoded assignment is constant over the window and the
// objective shows no further progress to wait for: sat additionally requires
// sat_count = M (a partial plateau keeps running), max_sat/max_nae only need
// the stable assignment.
bool convergence_check(std::span<const TraceRow> window, const Formula& f, Objective objective);

}  // namespace oscsat

#endif

#include "oscsat/readout.hpp"

#include <algorithm>
#include <cmath>

namespace oscsat {

namespace {

constexpr double kAmbiguous = 1e-9;

ReadoutResult classify(std::span<const double> phase) {
    ReadoutResult res;
    res.x.bits.resize(phase.size());
    res.confidence.resize(phase.size());
    res.ambiguous_flags.resize(phase.size());
    for (std::size_t i = 0; i < phase.size(); ++i) {
        double c = std::cos(phase[i]);
        res.x.bits[i] = c >= 0.0 ? 1 : 0;
        res.confidence[i] = std::abs(c);
        res.ambiguous_flags[i] = res.confidence[i] < kAmbiguous ? 1 : 0;
    }
    return res;
}

}  // namespace

bool ReadoutResult::any_ambiguous() const {
    return std::any_of(ambiguous_flags.begin(), ambiguous_flags.end(),
                       [](std::uint8_t f) { return f != 0; });
}

ReadoutResult binarize_system1(const SystemParams& p, double t, std::span<const double> alpha) {
    std::vector<double> phase(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) phase[i] = theta(p, t, alpha[i]);
    return classify(phase);
}

ReadoutResult binarize_system2(const SystemParams& p, std::span<const double> state) {
    if (p.s2_mode == System2Mode::full) {
        std::vector<double> phase(state.size());
        for (std::size_t i = 0; i < state.size(); ++i) phase[i] = p.omega * state[i];
        return classify(phase);
    }
    return classify(state);
}

bool convergence_check(std::span<const TraceRow> window, const Formula& f, Objective objective) {
    if (window.size() < 2) return false;
    const TraceRow& first = window.front();
    for (const TraceRow& row : window)
        if (row.x != first.x) return false;
    if (objective == Objective::sat) return first.sat_count == f.num_clauses();
    return true;
}

}  // namespace oscsat

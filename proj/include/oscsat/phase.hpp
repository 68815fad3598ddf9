#ifndef OSCSAT_PHASE_HPP
#define OSCSAT_PHASE_HPP

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscsat {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class System2Mode { full, averaged_printed, averaged_gradient };

inline const char* s2_mode_name(System2Mode m) {
    switch (m) {
        case System2Mode::full: return "full";
        case System2Mode::averaged_printed: return "averaged_printed";
        case System2Mode::averaged_gradient: return "averaged_gradient";
    }
    return "?";
}

inline System2Mode s2_mode_from_name(const std::string& name) {
    if (name == "full") return System2Mode::full;
    if (name == "averaged_printed" || name == "printed") return System2Mode::averaged_printed;
    if (name == "averaged_gradient" || name == "gradient") return System2Mode::averaged_gradient;
    throw std::invalid_argument("unknown system 2 mode: " + name);
}

// Continuous-time parameters shared by both systems.
//
// `A` scales the clause coupling, `A_s` the sub-harmonic injection (system 2
// only), `omega` the carrier frequency. With kernel_normalized = false a
// clause kernel keeps one factor 1/2 for every variable absent from the
// clause; true drops those factors.
struct SystemParams {
    double A = 1.0;
    double A_s = 0.0;
    double omega = kTwoPi;
    bool kernel_normalized = false;
    System2Mode s2_mode = System2Mode::full;

    double period() const { return kTwoPi / omega; }

    static SystemParams system1_defaults() {
        SystemParams p;
        p.A = 10.0 / kTwoPi;
        p.A_s = 0.0;
        return p;
    }

    static SystemParams system2_defaults() {
        SystemParams p;
        p.A = 5.0 / kTwoPi;
        p.A_s = 0.01 / kTwoPi;
        return p;
    }
};

// State of the phase dynamics. For system 1 and the full system 2 dynamics
// `alpha` holds the phase shifts alpha_i (theta_i = omega*(t + alpha_i)); for
// the averaged system 2 modes it holds the slow phases phi_i directly.
struct PhaseState {
    double t = 0.0;
    std::vector<double> alpha;

    int size() const { return static_cast<int>(alpha.size()); }
};

inline double theta(const SystemParams& p, double t, double alpha_i) {
    return p.omega * (t + alpha_i);
}

}  // namespace oscsat

#endif

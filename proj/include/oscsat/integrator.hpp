#ifndef OSCSAT_INTEGRATOR_HPP
#define OSCSAT_INTEGRATOR_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscsat/formula.hpp"
#include "oscsat/phase.hpp"

namespace oscsat {

enum class SystemKind { system1, system2 };

std::string system_name(SystemKind kind);

// dydt = F(t, y)
using RhsFn = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

struct Rk4Workspace {
    std::vector<double> k1, k2, k3, k4, tmp;
    void resize(std::size_t n);
};

// Classical fixed-step RK4 stage; advances y and t by dt.
void rk4_drift_step(const RhsFn& rhs, double& t, std::span<double> y, double dt,
                    Rk4Workspace& ws);
void rk4_drift_step(const RhsFn& rhs, double& t, std::vector<double>& y, double dt);

// Euler-Maruyama style additive noise on top of the RK4 drift:
// y_i += a_n * sqrt(dt) * xi_i with xi_i ~ N(0,1) drawn in index order.
void sde_step(const RhsFn& rhs, double& t, std::span<double> y, double dt, double a_n,
              std::mt19937_64& rng, Rk4Workspace& ws);
void sde_step(const RhsFn& rhs, double& t, std::vector<double>& y, double dt, double a_n,
              std::mt19937_64& rng);

struct IntegratorConfig {
    double dt = 1e-3;
    double a_n = 5e-4;
    double t_end = 100.0;
    std::uint64_t seed = 0;
    long sample_stride = 100;
};

struct TraceRow {
    long step = 0;
    double t = 0.0;
    double energy = 0.0;
    int sat_count = 0;
    int nae_count = 0;
    std::vector<double> alpha;
    std::vector<std::uint8_t> x;
};

struct TraceMeta {
    SystemKind system = SystemKind::system1;
    SystemParams params;
    std::uint64_t seed = 0;
    double dt = 0.0;
    long sample_stride = 0;
    int num_vars = 0;
    int num_clauses = 0;
};

struct Trace {
    TraceMeta meta;
    std::vector<TraceRow> rows;
    long steps_executed = 0;
};

class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& msg, long step) : std::runtime_error(msg), step(step) {}
    long step = 0;
};

// Called after each appended sample row; return true to stop early.
using SampleCallback = std::function<bool(const Trace&)>;

// Integrates the selected dynamics from `init` to t_end, sampling every
// sample_stride steps (plus the initial state). Rows carry the energy of the
// active system (V for system 1, E for system 2) and the decoded assignment
// with its clause counts. Throws IntegrationError if the state leaves the
// finite range.
Trace integrate(const Formula& f, SystemKind kind, const SystemParams& p,
                const IntegratorConfig& cfg, const PhaseState& init,
                const SampleCallback& on_sample = {});

// Same, but noise is drawn from an external generator (the caller owns the
// stream; cfg.seed is ignored).
Trace integrate(const Formula& f, SystemKind kind, const SystemParams& p,
                const IntegratorConfig& cfg, const PhaseState& init, std::mt19937_64& rng,
                const SampleCallback& on_sample = {});

}  // namespace oscsat

#endif

#include "oscsat/integrator.hpp"

#include <cmath>

#include "oscsat/readout.hpp"
#include "oscsat/system1.hpp"
#include "oscsat/system2.hpp"

namespace oscsat {

std::string system_name(SystemKind kind) {
    return kind == SystemKind::system1 ? "system1" : "system2";
}

void Rk4Workspace::resize(std::size_t n) {
    k1.resize(n);
    k2.resize(n);
    k3.resize(n);
    k4.resize(n);
    tmp.resize(n);
}

void rk4_drift_step(const RhsFn& rhs, double& t, std::span<double> y, double dt,
                    Rk4Workspace& ws) {
    const std::size_t n = y.size();
    ws.resize(n);
    rhs(t, y, ws.k1);
    for (std::size_t i = 0; i < n; ++i) ws.tmp[i] = y[i] + 0.5 * dt * ws.k1[i];
    rhs(t + 0.5 * dt, ws.tmp, ws.k2);
    for (std::size_t i = 0; i < n; ++i) ws.tmp[i] = y[i] + 0.5 * dt * ws.k2[i];
    rhs(t + 0.5 * dt, ws.tmp, ws.k3);
    for (std::size_t i = 0; i < n; ++i) ws.tmp[i] = y[i] + dt * ws.k3[i];
    rhs(t + dt, ws.tmp, ws.k4);
    for (std::size_t i = 0; i < n; ++i)
        y[i] += dt / 6.0 * (ws.k1[i] + 2.0 * ws.k2[i] + 2.0 * ws.k3[i] + ws.k4[i]);
    t += dt;
}

void rk4_drift_step(const RhsFn& rhs, double& t, std::vector<double>& y, double dt) {
    Rk4Workspace ws;
    rk4_drift_step(rhs, t, std::span<double>(y), dt, ws);
}

void sde_step(const RhsFn& rhs, double& t, std::span<double> y, double dt, double a_n,
              std::mt19937_64& rng, Rk4Workspace& ws) {
    rk4_drift_step(rhs, t, y, dt, ws);
    if (a_n == 0.0) return;
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double amp = a_n * std::sqrt(dt);
    for (double& yi : y) yi += amp * gauss(rng);
}

void sde_step(const RhsFn& rhs, double& t, std::vector<double>& y, double dt, double a_n,
              std::mt19937_64& rng) {
    Rk4Workspace ws;
    sde_step(rhs, t, std::span<double>(y), dt, a_n, rng, ws);
}

namespace {

RhsFn make_rhs(const Formula& f, SystemKind kind, const SystemParams& p) {
    if (kind == SystemKind::system1) {
        return [&f, p](double t, std::span<const double> y, std::span<double> dydt) {
            rhs_system1(f, p, t, y, dydt);
        };
    }
    if (p.s2_mode == System2Mode::full) {
        return [&f, p](double t, std::span<const double> y, std::span<double> dydt) {
            rhs_full(f, p, t, y, dydt);
        };
    }
    return [&f, p](double, std::span<const double> y, std::span<double> dydt) {
        rhs_averaged(f, p, y, dydt);
    };
}

TraceRow make_row(const Formula& f, SystemKind kind, const SystemParams& p, long step, double t,
                  const std::vector<double>& y, std::vector<double>& phi_buf) {
    TraceRow row;
    row.step = step;
    row.t = t;
    ReadoutResult read;
    if (kind == SystemKind::system1) {
        row.energy = energy_v(f, p, t, y);
        read = binarize_system1(p, t, y);
    } else {
        if (p.s2_mode == System2Mode::full) {
            phi_buf.resize(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) phi_buf[i] = p.omega * y[i];
            row.energy = energy_e(f, p, phi_buf);
        } else {
            row.energy = energy_e(f, p, y);
        }
        read = binarize_system2(p, y);
    }
    ClauseStats st = eval_assignment(f, read.x);
    row.sat_count = st.sat_count;
    row.nae_count = st.nae_count;
    row.alpha = y;
    row.x = std::move(read.x.bits);
    return row;
}

}  // namespace

Trace integrate(const Formula& f, SystemKind kind, const SystemParams& p,
                const IntegratorConfig& cfg, const PhaseState& init, std::mt19937_64& rng,
                const SampleCallback& on_sample) {
    validate_formula(f);
    if (static_cast<int>(init.alpha.size()) != f.num_vars)
        throw std::invalid_argument("initial state size does not match variable count");
    if (cfg.dt <= 0.0) throw std::invalid_argument("dt must be positive");
    if (cfg.sample_stride < 1) throw std::invalid_argument("sample_stride must be >= 1");
    if (cfg.t_end < init.t) throw std::invalid_argument("t_end before initial time");

    const long steps = std::lround((cfg.t_end - init.t) / cfg.dt);
    RhsFn rhs = make_rhs(f, kind, p);

    Trace trace;
    trace.meta.system = kind;
    trace.meta.params = p;
    trace.meta.seed = cfg.seed;
    trace.meta.dt = cfg.dt;
    trace.meta.sample_stride = cfg.sample_stride;
    trace.meta.num_vars = f.num_vars;
    trace.meta.num_clauses = f.num_clauses();
    trace.rows.reserve(static_cast<std::size_t>(steps / cfg.sample_stride) + 1);

    std::vector<double> y = init.alpha;
    std::vector<double> phi_buf;
    double t = init.t;
    Rk4Workspace ws;

    trace.rows.push_back(make_row(f, kind, p, 0, t, y, phi_buf));
    if (on_sample && on_sample(trace)) return trace;

    for (long k = 1; k <= steps; ++k) {
        sde_step(rhs, t, std::span<double>(y), cfg.dt, cfg.a_n, rng, ws);
        trace.steps_executed = k;
        for (double yi : y) {
            if (!std::isfinite(yi))
                throw IntegrationError("non-finite state at step " + std::to_string(k), k);
        }
        if (k % cfg.sample_stride == 0) {
            trace.rows.push_back(make_row(f, kind, p, k, t, y, phi_buf));
            if (on_sample && on_sample(trace)) break;
        }
    }
    return trace;
}

Trace integrate(const Formula& f, SystemKind kind, const SystemParams& p,
                const IntegratorConfig& cfg, const PhaseState& init,
                const SampleCallback& on_sample) {
    std::mt19937_64 rng(cfg.seed);
    return integrate(f, kind, p, cfg, init, rng, on_sample);
}

}  // namespace oscsat

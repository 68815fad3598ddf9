#ifndef OSCSAT_SOLVER_HPP
#define OSCSAT_SOLVER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "oscsat/formula.hpp"
#include "oscsat/integrator.hpp"
#include "oscsat/phase.hpp"

namespace oscsat {

struct SolveOptions {
    SystemKind system = SystemKind::system1;
    Objective objective = Objective::sat;
    SystemParams params = SystemParams::system1_defaults();
    double dt = 1e-3;
    double a_n = 5e-4;
    double periods = 100.0;
    int restarts = 20;
    std::uint64_t base_seed = 1;
    long sample_stride = 100;
    int threads = 0;       // 0 = hardware concurrency
    bool use_oracle = true;
    int oracle_cap = 24;   // exhaustive target lookup only up to this many vars
    bool capture_trace = false;
};

struct RestartRecord {
    int index = 0;
    std::uint64_t seed = 0;
    int best_value = 0;      // objective count, best over all sampled rows
    double best_t = 0.0;     // time of the first best sample
    Assignment best_assignment;
    long steps = 0;
    bool converged = false;  // stopped early: a sampled row hit the target
    double final_energy = 0.0;
    int final_sat = 0;
    int final_nae = 0;
};

enum class SolveStatus { solved, best_effort };

struct SolveReport {
    SolveStatus status = SolveStatus::best_effort;
    SystemKind system = SystemKind::system1;
    Objective objective = Objective::sat;
    int best_value = 0;
    Assignment best_assignment;
    int best_restart = -1;
    int target = 0;           // M for sat, oracle optimum when known
    bool target_known = false;
    int restarts_used = 0;
    long total_steps = 0;
    double wall_time_s = 0.0;
    SolveOptions options;
    std::vector<RestartRecord> restarts;
    bool has_trace = false;
    Trace trace;  // trajectory of the winning restart when requested
};

// Runs the configured number of seeded restarts (seed_k = base_seed + k),
// each integrating up to `periods` carrier periods with early stop once a
// sampled readout provably hits the target, and aggregates the best
// assignment across all sampled rows. Every reported value is re-validated
// through eval_assignment. Deterministic for a fixed (formula, options)
// regardless of thread count.
SolveReport run_solve(const Formula& f, const SolveOptions& opts);

std::string solve_status_name(SolveStatus s);

// JSON report; wall_time_s is included but comparisons should ignore it.
void write_report_json(const SolveReport& report, std::ostream& out);

}  // namespace oscsat

#endif

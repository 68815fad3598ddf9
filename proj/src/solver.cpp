#include "oscsat/solver.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "json.hpp"
#include "oscsat/readout.hpp"

namespace oscsat {

namespace {

int objective_value(const TraceRow& row, Objective obj) {
    return obj == Objective::max_nae ? row.nae_count : row.sat_count;
}

void validate_options(const SolveOptions& opts) {
    if (opts.dt <= 0.0) throw std::invalid_argument("dt must be positive");
    if (opts.a_n < 0.0) throw std::invalid_argument("a_n must be nonnegative");
    if (opts.periods <= 0.0) throw std::invalid_argument("periods must be positive");
    if (opts.restarts < 1) throw std::invalid_argument("need at least one restart");
    if (opts.sample_stride < 1) throw std::invalid_argument("sample_stride must be >= 1");
    if (opts.params.omega <= 0.0) throw std::invalid_argument("omega must be positive");
    if (opts.oracle_cap < 1) throw std::invalid_argument("oracle_cap must be >= 1");
}

RestartRecord run_one_restart(const Formula& f, const SolveOptions& opts, int index,
                              int stop_target, Trace* keep_trace) {
    RestartRecord rec;
    rec.index = index;
    rec.seed = opts.base_seed + static_cast<std::uint64_t>(index);

    const double period = opts.params.period();
    const bool averaged = opts.system == SystemKind::system2 &&
                          opts.params.s2_mode != System2Mode::full;

    std::mt19937_64 rng(rec.seed);
    PhaseState init;
    init.t = 0.0;
    init.alpha.resize(static_cast<std::size_t>(f.num_vars));
    std::uniform_real_distribution<double> uniform(0.0, averaged ? kTwoPi : period);
    for (double& a : init.alpha) a = uniform(rng);

    IntegratorConfig icfg;
    icfg.dt = opts.dt;
    icfg.a_n = opts.a_n;
    icfg.t_end = opts.periods * period;
    icfg.seed = rec.seed;
    icfg.sample_stride = opts.sample_stride;

    rec.best_value = -1;
    auto on_sample = [&](const Trace& tr) -> bool {
        const TraceRow& row = tr.rows.back();
        int v = objective_value(row, opts.objective);
        if (v > rec.best_value) {
            rec.best_value = v;
            rec.best_t = row.t;
            rec.best_assignment.bits = row.x;
        }
        // stop only on a certificate; a merely stagnant readout keeps
        // integrating, since noise may still move it within the budget
        if (v >= stop_target) {
            rec.converged = true;
            return true;
        }
        return false;
    };

    Trace trace = integrate(f, opts.system, opts.params, icfg, init, rng, on_sample);
    rec.steps = trace.steps_executed;
    const TraceRow& last = trace.rows.back();
    rec.final_energy = last.energy;
    rec.final_sat = last.sat_count;
    rec.final_nae = last.nae_count;
    if (keep_trace) *keep_trace = std::move(trace);
    return rec;
}

}  // namespace

SolveReport run_solve(const Formula& f, const SolveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    validate_formula(f);
    validate_options(opts);

    SolveReport report;
    report.system = opts.system;
    report.objective = opts.objective;
    report.options = opts;

    if (opts.objective == Objective::max_nae && opts.use_oracle &&
        f.num_vars <= opts.oracle_cap) {
        report.target = brute_force(f, Objective::max_nae, opts.oracle_cap).best_value;
        report.target_known = true;
    } else {
        // nae/sat counts can never exceed M, so hitting M always means solved
        report.target = f.num_clauses();
        report.target_known = opts.objective != Objective::max_nae;
    }

    const int stop_target = report.target;

    report.restarts.resize(static_cast<std::size_t>(opts.restarts));
    unsigned pool = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
    pool = std::min<unsigned>(pool, static_cast<unsigned>(opts.restarts));

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&]() {
        for (;;) {
            int k = next.fetch_add(1);
            if (k >= opts.restarts) return;
            try {
                report.restarts[static_cast<std::size_t>(k)] =
                    run_one_restart(f, opts, k, stop_target, nullptr);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (unsigned i = 0; i < pool; ++i) threads.emplace_back(worker);
        for (std::thread& th : threads) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    report.restarts_used = opts.restarts;
    int best = -1;
    for (const RestartRecord& rec : report.restarts) {
        report.total_steps += rec.steps;
        if (rec.best_value > best) {
            best = rec.best_value;
            report.best_restart = rec.index;
        }
    }
    const RestartRecord& winner = report.restarts[static_cast<std::size_t>(report.best_restart)];
    report.best_assignment = winner.best_assignment;

    // never trust the dynamics path: recount through eval_assignment
    ClauseStats st = eval_assignment(f, report.best_assignment);
    int recount = opts.objective == Objective::max_nae ? st.nae_count : st.sat_count;
    if (recount != winner.best_value)
        throw std::logic_error("reported best_value failed re-validation");
    report.best_value = recount;

    report.status = report.best_value == report.target ? SolveStatus::solved
                                                       : SolveStatus::best_effort;

    if (opts.capture_trace) {
        run_one_restart(f, opts, report.best_restart, stop_target, &report.trace);
        report.has_trace = true;
    }

    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string solve_status_name(SolveStatus s) {
    return s == SolveStatus::solved ? "solved" : "best_effort";
}

void write_report_json(const SolveReport& report, std::ostream& out) {
    nlohmann::json assignment = nlohmann::json::array();
    for (auto b : report.best_assignment.bits) assignment.push_back(static_cast<int>(b));

    nlohmann::json restarts = nlohmann::json::array();
    for (const RestartRecord& rec : report.restarts) {
        nlohmann::json ra = nlohmann::json::array();
        for (auto b : rec.best_assignment.bits) ra.push_back(static_cast<int>(b));
        restarts.push_back({{"index", rec.index},
                            {"seed", rec.seed},
                            {"best_value", rec.best_value},
                            {"best_t", rec.best_t},
                            {"best_assignment", std::move(ra)},
                            {"steps", rec.steps},
                            {"converged", rec.converged},
                            {"final_energy", rec.final_energy},
                            {"final_sat", rec.final_sat},
                            {"final_nae", rec.final_nae}});
    }

    const SolveOptions& o = report.options;
    nlohmann::json doc{
        {"status", solve_status_name(report.status)},
        {"system", system_name(report.system)},
        {"objective", objective_name(report.objective)},
        {"best_value", report.best_value},
        {"target", report.target},
        {"target_known", report.target_known},
        {"best_assignment", std::move(assignment)},
        {"best_restart", report.best_restart},
        {"restarts_used", report.restarts_used},
        {"total_steps", report.total_steps},
        {"wall_time_s", report.wall_time_s},
        {"options",
         {{"system", system_name(o.system)},
          {"objective", objective_name(o.objective)},
          {"dt", o.dt},
          {"a_n", o.a_n},
          {"periods", o.periods},
          {"restarts", o.restarts},
          {"base_seed", o.base_seed},
          {"sample_stride", o.sample_stride},
          {"use_oracle", o.use_oracle},
          {"oracle_cap", o.oracle_cap},
          {"params",
           {{"A", o.params.A},
            {"A_s", o.params.A_s},
            {"omega", o.params.omega},
            {"kernel_normalized", o.params.kernel_normalized},
            {"s2_mode", s2_mode_name(o.params.s2_mode)}}}}},
        {"restarts", std::move(restarts)},
    };
    out << doc.dump(2) << '\n';
}

}  // namespace oscsat

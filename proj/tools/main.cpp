#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oscsat/formula.hpp"
#include "oscsat/integrator.hpp"
#include "oscsat/kernel.hpp"
#include "oscsat/readout.hpp"
#include "oscsat/solver.hpp"
#include "oscsat/system1.hpp"
#include "oscsat/system2.hpp"
#include "oscsat/trace_io.hpp"

namespace {

using namespace oscsat;

constexpr int kExitSolved = 0;
constexpr int kExitBestEffort = 1;
constexpr int kExitInputError = 2;
constexpr int kExitIoError = 3;

bool log_enabled() {
    const char* v = std::getenv("OSCSAT_LOG");
    return v != nullptr && std::string(v) != "" && std::string(v) != "quiet";
}

Formula load_formula(const std::string& path, const ParseOptions& opts) {
    if (path == "-") return parse_dimacs(std::cin, opts);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_dimacs(in, opts);
}

std::string bits_string(const Assignment& a) {
    std::string s;
    s.reserve(a.bits.size());
    for (auto b : a.bits) s.push_back(b ? '1' : '0');
    return s;
}

// Applies "key=value" entries from --params.
void apply_param(const std::string& kv, SystemParams& params, double& dt, double& a_n) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--params entry needs key=value: " + kv);
    std::string key = kv.substr(0, eq);
    double value = std::stod(kv.substr(eq + 1));
    if (key == "A") {
        params.A = value;
    } else if (key == "As" || key == "A_s") {
        params.A_s = value;
    } else if (key == "omega") {
        params.omega = value;
    } else if (key == "an" || key == "a_n") {
        a_n = value;
    } else if (key == "dt") {
        dt = value;
    } else {
        throw std::invalid_argument("unknown --params key: " + key);
    }
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path == "-" || path.empty()) return std::cout;
    file.open(path);
    if (!file) throw IoError("cannot open " + path + " for writing");
    return file;
}

// Best rational p/q approximation of r (continued fractions), or nothing if
// r is not a simple ratio.
std::optional<std::pair<long long, long long>> rationalize(double r, long long max_den = 1000000) {
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = r;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(x);
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0;
        long long q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - r) <= 1e-12 * std::max(1.0, std::abs(r)))
            return std::make_pair(p1, q1);
        double frac = x - fl;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    return std::nullopt;
}

std::string rational_string(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 0) {
        num /= g;
        den /= g;
    }
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

int run_solve_cmd(const std::string& input, int system, const std::string& mode,
                  std::string objective, SolveOptions opts, const std::vector<std::string>& params,
                  bool normalized, bool permissive, bool strict3, const std::string& trace_path,
                  const std::string& trace_format, const std::string& report_path) {
    opts.system = system == 1 ? SystemKind::system1 : SystemKind::system2;
    opts.params = system == 1 ? SystemParams::system1_defaults() : SystemParams::system2_defaults();
    opts.params.s2_mode = s2_mode_from_name(mode);
    opts.params.kernel_normalized = normalized;
    for (const std::string& kv : params) apply_param(kv, opts.params, opts.dt, opts.a_n);
    if (objective == "auto") objective = system == 1 ? "sat" : "max_nae";
    opts.objective = objective_from_name(objective);
    opts.capture_trace = !trace_path.empty();

    ParseOptions popts;
    popts.permissive = permissive;
    popts.strict3 = strict3;
    Formula f = load_formula(input, popts);

    SolveReport report = run_solve(f, opts);

    if (log_enabled()) {
        for (const RestartRecord& rec : report.restarts)
            std::cerr << "restart " << rec.index << " seed " << rec.seed << " best "
                      << rec.best_value << " at t=" << rec.best_t
                      << (rec.converged ? " (converged)" : "") << "\n";
    }

    // keep stdout pure JSON when the report goes there
    std::ostream& log = report_path == "-" ? std::cerr : std::cout;
    log << "status: " << solve_status_name(report.status) << "\n"
        << "objective: " << objective_name(report.objective) << "\n"
        << "best_value: " << report.best_value << " of " << f.num_clauses() << " clauses";
    if (report.target_known) log << " (target " << report.target << ")";
    log << "\n"
        << "assignment: " << bits_string(report.best_assignment) << "\n"
        << "best_restart: " << report.best_restart << " (seed "
        << report.restarts[static_cast<std::size_t>(report.best_restart)].seed << ", t="
        << report.restarts[static_cast<std::size_t>(report.best_restart)].best_t << ")\n"
        << "restarts: " << report.restarts_used << ", total_steps: " << report.total_steps
        << ", wall_time_s: " << report.wall_time_s << "\n";

    if (!trace_path.empty()) emit_trace(report.trace, trace_format, trace_path);
    if (!report_path.empty()) {
        std::ofstream file;
        std::ostream& out = open_output(report_path, file);
        write_report_json(report, out);
        out.flush();
        if (!out) throw IoError("write failed for " + report_path);
    }
    return report.status == SolveStatus::solved ? kExitSolved : kExitBestEffort;
}

int run_oracle_cmd(const std::string& input, const std::string& objective, int cap,
                   bool permissive, bool strict3) {
    ParseOptions popts;
    popts.permissive = permissive;
    popts.strict3 = strict3;
    Formula f = load_formula(input, popts);
    OracleResult res = brute_force(f, objective_from_name(objective), cap);
    nlohmann::json doc{{"objective", objective_name(res.objective)},
                       {"best_value", res.best_value},
                       {"optimal_count", res.optimal_count},
                       {"satisfiable", res.satisfiable},
                       {"best_assignment", bits_string(res.best_assignment)},
                       {"num_vars", f.num_vars},
                       {"num_clauses", f.num_clauses()}};
    std::cout << doc.dump(2) << "\n";
    return kExitSolved;
}

int run_gen_cmd(int n_vars, int n_clauses, std::uint64_t seed, const std::string& out_path) {
    Formula f = generate_random_3sat(n_vars, n_clauses, seed);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "c random 3-SAT n=" << n_vars << " m=" << n_clauses << " seed=" << seed << "\n";
    serialize_dimacs(f, out);
    out.flush();
    if (!out) throw IoError("write failed");
    return kExitSolved;
}

int run_table_cmd(double A, double As, const std::string& out_path) {
    SystemParams p = SystemParams::system2_defaults();
    p.A = A;
    p.A_s = As;
    std::vector<ClauseEnergyRow> rows = clause_energy_table(p);

    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "signs,corner,energy_over_piA,nae_satisfied\n";
    auto ratio = rationalize(p.A_s / p.A);
    for (const ClauseEnergyRow& row : rows) {
        std::string signs, corner;
        for (int q = 0; q < 3; ++q) {
            signs.push_back(row.signs[q] > 0 ? '+' : '-');
            corner += row.corner[q] == 0.0 ? "0" : "pi";
            if (q < 2) corner.push_back(' ');
        }
        // corner sum is k/256 with k = 189 (all c_i*cos(phi_i) equal) or -51
        int prod_sum = 0;
        std::array<int, 3> s{};
        for (int q = 0; q < 3; ++q)
            s[static_cast<std::size_t>(q)] = row.signs[q] * (row.corner[q] == 0.0 ? 1 : -1);
        prod_sum = s[0] * s[1] + s[1] * s[2] + s[2] * s[0];
        long long k = 60 * prod_sum + 9;
        out << signs << ',' << corner << ',';
        if (ratio) {
            // k/256 - (3/2)(As/A) = (k*2*q - 768*p) / (512*q)
            out << rational_string(k * 2 * ratio->second - 768 * ratio->first,
                                   512 * ratio->second);
        } else {
            out << format_double(row.energy / (std::numbers::pi * p.A));
        }
        out << ',' << (row.nae_satisfied ? "true" : "false") << "\n";
    }
    out.flush();
    if (!out) throw IoError("write failed");
    return kExitSolved;
}

int run_gradcheck_cmd(int instances, int states, std::uint64_t seed, int n_max, int m_max) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(3, n_max);
    std::uniform_int_distribution<int> pick_m(1, m_max);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const double h = 1e-6;
    double worst_v = 0.0, worst_e = 0.0;

    for (int inst = 0; inst < instances; ++inst) {
        int n = pick_n(rng);
        int m = pick_m(rng);
        Formula f = generate_random_3sat(n, m, rng());

        SystemParams p1 = SystemParams::system1_defaults();
        SystemParams p2 = SystemParams::system2_defaults();
        p2.s2_mode = System2Mode::averaged_gradient;

        for (int st = 0; st < states; ++st) {
            double t = 2.0 * unit(rng);
            std::vector<double> alpha(static_cast<std::size_t>(n));
            std::vector<double> phi(static_cast<std::size_t>(n));
            for (double& a : alpha) a = unit(rng);
            for (double& q : phi) q = kTwoPi * unit(rng);

            std::vector<double> g = grad_v(f, p1, t, alpha);
            double gmax = 0.0;
            for (double v : g) gmax = std::max(gmax, std::abs(v));
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                double save = alpha[i];
                alpha[i] = save + h;
                double vp = energy_v(f, p1, t, alpha);
                alpha[i] = save - h;
                double vm = energy_v(f, p1, t, alpha);
                alpha[i] = save;
                double fd = (vp - vm) / (2.0 * h);
                // components below 1e-3 of the gradient scale sit at the FD
                // noise floor (roundoff ~ eps|V|/h), so compare against scale
                double den = std::max({std::abs(fd), std::abs(g[i]), 1e-3 * gmax, 1e-12});
                worst_v = std::max(worst_v, std::abs(fd - g[i]) / den);
            }

            std::vector<double> r = rhs_averaged(f, p2, phi);
            double rmax = 0.0;
            for (double v : r) rmax = std::max(rmax, std::abs(v));
            for (std::size_t i = 0; i < phi.size(); ++i) {
                double save = phi[i];
                phi[i] = save + h;
                double ep = energy_e(f, p2, phi);
                phi[i] = save - h;
                double em = energy_e(f, p2, phi);
                phi[i] = save;
                double fd = -(ep - em) / (2.0 * h);
                double den = std::max({std::abs(fd), std::abs(r[i]), 1e-3 * rmax, 1e-12});
                worst_e = std::max(worst_e, std::abs(fd - r[i]) / den);
            }
        }
    }

    std::cout << "grad_v max rel error:            " << worst_v << "\n"
              << "averaged_gradient max rel error: " << worst_e << "\n";
    bool ok = worst_v < 1e-6 && worst_e < 1e-6;
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Oscillator-dynamics 3-SAT / Max-NAE-3-SAT solver"};
    app.require_subcommand(1);
    // config keys live under a [solve] / [gradcheck] section (or a dotted
    // prefix); command-line flags win over config values
    app.set_config("--config", "", "key=value configuration file");
    app.fallthrough(true);

    // solve
    std::string input;
    int system = 1;
    std::string mode = "full";
    std::string objective = "auto";
    SolveOptions opts;
    std::vector<std::string> params;
    bool normalized = false, permissive = false, strict3 = false;
    std::string trace_path, trace_format = "csv", report_path;

    CLI::App* solve = app.add_subcommand("solve", "integrate the dynamics with restarts");
    solve->add_option("input", input, "DIMACS CNF path, or - for stdin")->required();
    solve->add_option("--system", system, "dynamical system (1 = 3-SAT, 2 = Max-NAE-3-SAT)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    solve->add_option("--mode", mode, "system 2 dynamics: full|averaged_printed|averaged_gradient")
        ->capture_default_str();
    solve->add_option("--objective", objective, "sat|max_sat|max_nae|auto")
        ->capture_default_str();
    solve->add_option("--restarts", opts.restarts)->capture_default_str();
    solve->add_option("--periods", opts.periods, "integration horizon per restart, in periods")
        ->capture_default_str();
    solve->add_option("--seed", opts.base_seed, "base seed; restart k uses base+k")
        ->capture_default_str();
    solve->add_option("--threads", opts.threads, "worker pool size (0 = cores)")
        ->capture_default_str();
    solve->add_option("--stride", opts.sample_stride, "steps between trace samples")
        ->capture_default_str();
    solve->add_option("--params", params,
                      "inline overrides A=..,As=..,omega=..,an=..,dt=.. (comma separated)")
        ->delimiter(',');
    solve->add_flag("--normalized-kernel", normalized, "drop absent-variable kernel factors");
    solve->add_flag("--permissive", permissive, "merge duplicate literals while parsing");
    solve->add_flag("--strict3", strict3, "require exactly 3 literals per clause");
    solve->add_option("--oracle-cap", opts.oracle_cap)->capture_default_str();
    solve->add_flag("!--no-oracle", opts.use_oracle, "skip the exhaustive target lookup");
    solve->add_option("--trace", trace_path, "write the winning restart's trace here");
    solve->add_option("--trace-format", trace_format)->check(CLI::IsMember({"csv", "json"}));
    solve->add_option("--report", report_path, "write a JSON report here (- for stdout)");

    // oracle
    std::string o_input, o_objective = "sat";
    int o_cap = 24;
    bool o_permissive = false, o_strict3 = false;
    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive optimum by enumeration");
    oracle->add_option("input", o_input, "DIMACS CNF path, or - for stdin")->required();
    oracle->add_option("--objective", o_objective, "sat|max_sat|max_nae")->capture_default_str();
    oracle->add_option("--cap", o_cap, "variable-count cap")->capture_default_str();
    oracle->add_flag("--permissive", o_permissive);
    oracle->add_flag("--strict3", o_strict3);

    // gen
    int g_n = 6, g_m = 10;
    std::uint64_t g_seed = 42;
    std::string g_out = "-";
    CLI::App* gen = app.add_subcommand("gen", "generate a random 3-SAT instance");
    gen->add_option("n_vars", g_n)->required()->check(CLI::Range(3, 1000000));
    gen->add_option("n_clauses", g_m)->required()->check(CLI::Range(1, 10000000));
    gen->add_option("--seed", g_seed)->capture_default_str();
    gen->add_option("-o,--output", g_out, "output path (- for stdout)")->capture_default_str();

    // table
    double t_A = 5.0 / kTwoPi, t_As = 0.01 / kTwoPi;
    std::string t_out = "-";
    CLI::App* table = app.add_subcommand("table", "single-clause corner energy table (64 rows)");
    table->add_option("--A", t_A)->capture_default_str();
    table->add_option("--As", t_As)->capture_default_str();
    table->add_option("-o,--output", t_out)->capture_default_str();

    // gradcheck
    int gc_instances = 50, gc_states = 10, gc_nmax = 8, gc_mmax = 20;
    std::uint64_t gc_seed = 7;
    CLI::App* gradcheck =
        app.add_subcommand("gradcheck", "finite-difference checks of both analytic gradients");
    gradcheck->add_option("--instances", gc_instances)->capture_default_str();
    gradcheck->add_option("--states", gc_states)->capture_default_str();
    gradcheck->add_option("--seed", gc_seed)->capture_default_str();
    gradcheck->add_option("--n-max", gc_nmax)->check(CLI::Range(3, 16))->capture_default_str();
    gradcheck->add_option("--m-max", gc_mmax)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (solve->parsed())
            return run_solve_cmd(input, system, mode, objective, opts, params, normalized,
                                 permissive, strict3, trace_path, trace_format, report_path);
        if (oracle->parsed())
            return run_oracle_cmd(o_input, o_objective, o_cap, o_permissive, o_strict3);
        if (gen->parsed()) return run_gen_cmd(g_n, g_m, g_seed, g_out);
        if (table->parsed()) return run_table_cmd(t_A, t_As, t_out);
        if (gradcheck->parsed())
            return run_gradcheck_cmd(gc_instances, gc_states, gc_seed, gc_nmax, gc_mmax);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitInputError;
}

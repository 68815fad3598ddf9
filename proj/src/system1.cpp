#include "oscsat/system1.hpp"

#include <stdexcept>

#include "oscsat/kernel.hpp"

namespace oscsat {

namespace {

void check_sizes(const Formula& f, std::span<const double> alpha) {
    if (static_cast<int>(alpha.size()) != f.num_vars)
        throw std::invalid_argument("alpha size does not match variable count");
}

}  // namespace

double energy_v(const Formula& f, const SystemParams& p, double t,
                std::span<const double> alpha) {
    check_sizes(f, alpha);
    TrigTable trig;
    trig.fill(p, t, alpha);
    double v = 0.0;
    for (const Clause& cl : f.clauses) {
        double absent = absent_weight(p, f.num_vars, static_cast<int>(cl.lits.size()));
        ClauseTerms ct = eval_clause_terms(cl, absent, trig);
        v += p.A * ct.K * ct.K;
    }
    return v;
}

void grad_v(const Formula& f, const SystemParams& p, double t, std::span<const double> alpha,
            std::span<double> out) {
    check_sizes(f, alpha);
    if (out.size() != alpha.size()) throw std::invalid_argument("output size mismatch");
    TrigTable trig;
    trig.fill(p, t, alpha);
    for (double& g : out) g = 0.0;
    for (const Clause& cl : f.clauses) {
        double absent = absent_weight(p, f.num_vars, static_cast<int>(cl.lits.size()));
        ClauseTerms ct = eval_clause_terms(cl, absent, trig);
        for (std::size_t k = 0; k < cl.lits.size(); ++k) {
            const Lit& l = cl.lits[k];
            std::size_t i = static_cast<std::size_t>(l.var - 1);
            out[i] += 2.0 * p.A * ct.K * l.sign * (ct.loo[k] / 2.0) * trig.s[i] * p.omega;
        }
    }
}

std::vector<double> grad_v(const Formula& f, const SystemParams& p, double t,
                           std::span<const double> alpha) {
    std::vector<double> out(alpha.size());
    grad_v(f, p, t, alpha, out);
    return out;
}

void rhs_system1(const Formula& f, const SystemParams& p, double t,
                 std::span<const double> alpha, std::span<double> out) {
    grad_v(f, p, t, alpha, out);
    for (double& v : out) v = -(v + 1.0);
}

std::vector<double> rhs_system1(const Formula& f, const SystemParams& p, double t,
                                std::span<const double> alpha) {
    std::vector<double> out(alpha.size());
    rhs_system1(f, p, t, alpha, out);
    return out;
}

}  // namespace oscsat

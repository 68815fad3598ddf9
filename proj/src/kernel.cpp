#include "oscsat/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace oscsat {

void TrigTable::fill(const SystemParams& p, double t, std::span<const double> alpha) {
    c.resize(alpha.size());
    s.resize(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        double th = theta(p, t, alpha[i]);
        c[i] = std::cos(th);
        s[i] = std::sin(th);
    }
}

double absent_weight(const SystemParams& p, int num_vars, int arity) {
    if (p.kernel_normalized) return 1.0;
    return std::exp2(static_cast<double>(arity - num_vars));
}

ClauseTerms eval_clause_terms(const Clause& cl, double absent, const TrigTable& trig) {
    ClauseTerms out;
    const std::size_t L = cl.lits.size();
    for (std::size_t k = 0; k < L; ++k) {
        const Lit& l = cl.lits[k];
        out.f[k] = (1.0 - l.sign * trig.c[static_cast<std::size_t>(l.var - 1)]) / 2.0;
    }
    for (std::size_t k = 0; k < L; ++k) {
        double prod = absent;
        for (std::size_t j = 0; j < L; ++j)
            if (j != k) prod *= out.f[j];
        out.loo[k] = prod;
    }
    out.K = out.loo[0] * out.f[0];
    return out;
}

namespace {

void check_eval_args(const Formula& f, int m, std::span<const double> alpha) {
    if (m < 0 || m >= f.num_clauses()) throw std::invalid_argument("clause index out of range");
    if (static_cast<int>(alpha.size()) != f.num_vars)
        throw std::invalid_argument("alpha size does not match variable count");
}

}  // namespace

double kernel_value(const Formula& f, int m, const SystemParams& p, double t,
                    std::span<const double> alpha) {
    check_eval_args(f, m, alpha);
    const Clause& cl = f.clauses[static_cast<std::size_t>(m)];
    double prod = absent_weight(p, f.num_vars, static_cast<int>(cl.lits.size()));
    for (const Lit& l : cl.lits) {
        double cth = std::cos(theta(p, t, alpha[static_cast<std::size_t>(l.var - 1)]));
        prod *= (1.0 - l.sign * cth) / 2.0;
    }
    return prod;
}

double kernel_leave_one_out(const Formula& f, int m, int var, const SystemParams& p, double t,
                            std::span<const double> alpha) {
    check_eval_args(f, m, alpha);
    const Clause& cl = f.clauses[static_cast<std::size_t>(m)];
    if (f.sign_of(m, var) == 0)
        throw std::invalid_argument("variable " + std::to_string(var) + " absent from clause " +
                                    std::to_string(m));
    double prod = absent_weight(p, f.num_vars, static_cast<int>(cl.lits.size()));
    for (const Lit& l : cl.lits) {
        if (l.var == var) continue;
        double cth = std::cos(theta(p, t, alpha[static_cast<std::size_t>(l.var - 1)]));
        prod *= (1.0 - l.sign * cth) / 2.0;
    }
    return prod;
}

}  // namespace oscsat

#include "oscsat/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace oscsat {

int Formula::sign_of(int m, int var) const {
    for (const Lit& l : clauses.at(static_cast<std::size_t>(m)).lits) {
        if (l.var == var) return l.sign;
    }
    return 0;
}

std::string objective_name(Objective obj) {
    switch (obj) {
        case Objective::sat: return "sat";
        case Objective::max_sat: return "max_sat";
        case Objective::max_nae: return "max_nae";
    }
    return "?";
}

Objective objective_from_name(const std::string& name) {
    std::string s = name;
    std::replace(s.begin(), s.end(), '-', '_');
    if (s == "sat") return Objective::sat;
    if (s == "max_sat" || s == "maxsat") return Objective::max_sat;
    if (s == "max_nae" || s == "maxnae" || s == "nae") return Objective::max_nae;
    throw std::invalid_argument("unknown objective: " + name);
}

namespace {

void check_clause(const Clause& cl, int num_vars, bool strict3) {
    if (cl.lits.empty() || cl.lits.size() > 3)
        throw std::invalid_argument("clause must have 1..3 literals");
    if (strict3 && cl.lits.size() != 3)
        throw std::invalid_argument("clause must have exactly 3 literals");
    for (const Lit& l : cl.lits) {
        if (l.var < 1 || l.var > num_vars)
            throw std::invalid_argument("literal variable out of range");
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("literal sign must be +1 or -1");
    }
    for (std::size_t a = 0; a < cl.lits.size(); ++a)
        for (std::size_t b = a + 1; b < cl.lits.size(); ++b)
            if (cl.lits[a].var == cl.lits[b].var)
                throw std::invalid_argument("duplicate variable in clause");
}

}  // namespace

void validate_formula(const Formula& f, bool strict3) {
    if (f.num_vars < 1) throw std::invalid_argument("formula needs at least one variable");
    for (const Clause& cl : f.clauses) check_clause(cl, f.num_vars, strict3);
}

Formula parse_dimacs(std::istream& in, const ParseOptions& opts) {
    Formula f;
    bool have_header = false;
    long declared_clauses = 0;
    std::string line;
    std::vector<int> pending;  // literals of the clause currently being read
    long line_no = 0;

    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    };

    auto finish_clause = [&]() {
        Clause cl;
        for (int v : pending) {
            Lit lit{std::abs(v), v > 0 ? +1 : -1};
            bool dup = false;
            for (const Lit& seen : cl.lits) {
                if (seen.var != lit.var) continue;
                if (seen.sign != lit.sign) fail("tautological clause");
                if (!opts.permissive) fail("duplicate variable in clause");
                dup = true;
            }
            if (!dup) cl.lits.push_back(lit);
        }
        if (cl.lits.empty()) fail("empty clause");
        if (cl.lits.size() > 3) fail("clause has more than 3 literals");
        if (opts.strict3 && cl.lits.size() != 3) fail("clause must have exactly 3 literals");
        for (const Lit& l : cl.lits)
            if (l.var > f.num_vars) fail("literal exceeds declared variable count");
        f.clauses.push_back(std::move(cl));
        pending.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok.starts_with("c")) continue;
        if (tok == "p") {
            if (have_header) fail("duplicate problem header");
            std::string fmt;
            if (!(ls >> fmt >> f.num_vars >> declared_clauses)) fail("malformed problem header");
            if (fmt != "cnf") fail("unsupported format '" + fmt + "'");
            if (f.num_vars < 1 || declared_clauses < 0) fail("invalid header counts");
            have_header = true;
            continue;
        }
        if (!have_header) fail("clause data before 'p cnf' header");
        ls.clear();
        ls.str(line);
        int v = 0;
        while (ls >> v) {
            if (v == 0) {
                finish_clause();
            } else {
                pending.push_back(v);
            }
        }
        if (!ls.eof()) fail("non-integer token in clause data");
    }

    if (!have_header) throw ParseError("missing 'p cnf' header");
    if (!pending.empty()) throw ParseError("unterminated clause at end of input");
    if (f.num_clauses() != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(f.num_clauses()));
    validate_formula(f, opts.strict3);
    return f;
}

Formula parse_dimacs(const std::string& text, const ParseOptions& opts) {
    std::istringstream in(text);
    return parse_dimacs(in, opts);
}

void serialize_dimacs(const Formula& f, std::ostream& out) {
    out << "p cnf " << f.num_vars << ' ' << f.num_clauses() << '\n';
    for (const Clause& cl : f.clauses) {
        for (const Lit& l : cl.lits) out << l.sign * l.var << ' ';
        out << "0\n";
    }
}

std::string serialize_dimacs(const Formula& f) {
    std::ostringstream out;
    serialize_dimacs(f, out);
    return out.str();
}

Formula generate_random_3sat(int n_vars, int n_clauses, std::uint64_t seed) {
    if (n_vars < 3) throw std::invalid_argument("random 3-SAT needs at least 3 variables");
    if (n_clauses < 1) throw std::invalid_argument("random 3-SAT needs at least 1 clause");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_var(1, n_vars);
    std::uniform_int_distribution<int> pick_bit(0, 1);

    Formula f;
    f.num_vars = n_vars;
    f.clauses.reserve(static_cast<std::size_t>(n_clauses));
    for (int m = 0; m < n_clauses; ++m) {
        Clause cl;
        while (cl.lits.size() < 3) {
            int v = pick_var(rng);
            bool used = std::any_of(cl.lits.begin(), cl.lits.end(),
                                    [v](const Lit& l) { return l.var == v; });
            if (!used) cl.lits.push_back(Lit{v, 0});
        }
        for (Lit& l : cl.lits) l.sign = pick_bit(rng) ? +1 : -1;
        f.clauses.push_back(std::move(cl));
    }
    return f;
}

ClauseStats eval_assignment(const Formula& f, const Assignment& a) {
    if (static_cast<int>(a.bits.size()) != f.num_vars)
        throw std::invalid_argument("assignment size does not match variable count");
    ClauseStats st;
    st.sat_flags.reserve(f.clauses.size());
    st.nae_flags.reserve(f.clauses.size());
    for (const Clause& cl : f.clauses) {
        int n_true = 0;
        for (const Lit& l : cl.lits) {
            bool val = a.bits[static_cast<std::size_t>(l.var - 1)] != 0;
            if (l.sign < 0) val = !val;
            n_true += val ? 1 : 0;
        }
        bool sat = n_true > 0;
        bool nae = n_true > 0 && n_true < static_cast<int>(cl.lits.size());
        st.sat_flags.push_back(sat);
        st.nae_flags.push_back(nae);
        st.sat_count += sat ? 1 : 0;
        st.nae_count += nae ? 1 : 0;
    }
    return st;
}

OracleResult brute_force(const Formula& f, Objective obj, int max_n) {
    validate_formula(f);
    if (f.num_vars > max_n)
        throw std::invalid_argument("brute_force: instance exceeds " + std::to_string(max_n) +
                                    " variables");

    const int n = f.num_vars;
    const auto m = f.clauses.size();

    // Flat clause table, variables remapped so that x_1 is the most
    // significant bit of the enumeration index: ascending index order is then
    // lexicographic order on (x_1, ..., x_N).
    struct FlatLit {
        std::uint32_t shift;
        std::uint32_t flip;  // 1 for negated literals
    };
    std::vector<std::array<FlatLit, 3>> table(m);
    std::vector<std::uint32_t> arity(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Clause& cl = f.clauses[j];
        arity[j] = static_cast<std::uint32_t>(cl.lits.size());
        for (std::size_t k = 0; k < cl.lits.size(); ++k) {
            table[j][k].shift = static_cast<std::uint32_t>(n - cl.lits[k].var);
            table[j][k].flip = cl.lits[k].sign < 0 ? 1u : 0u;
        }
    }

    int best = -1;
    std::uint64_t best_idx = 0;
    std::int64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        int value = 0;
        for (std::size_t j = 0; j < m; ++j) {
            std::uint32_t n_true = 0;
            for (std::uint32_t k = 0; k < arity[j]; ++k) {
                n_true += (static_cast<std::uint32_t>(idx >> table[j][k].shift) & 1u) ^
                          table[j][k].flip;
            }
            if (obj == Objective::max_nae) {
                value += (n_true > 0 && n_true < arity[j]) ? 1 : 0;
            } else {
                value += n_true > 0 ? 1 : 0;
            }
        }
        if (value > best) {
            best = value;
            best_idx = idx;
            count = 1;
        } else if (value == best) {
            ++count;
        }
    }

    OracleResult res;
    res.objective = obj;
    res.best_value = best;
    res.optimal_count = count;
    res.satisfiable = best == static_cast<int>(m);
    res.best_assignment.bits.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        res.best_assignment.bits[static_cast<std::size_t>(i - 1)] =
            static_cast<std::uint8_t>((best_idx >> (n - i)) & 1u);
    return res;
}

}  // namespace oscsat

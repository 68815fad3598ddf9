#ifndef OSCSAT_FORMULA_HPP
#define OSCSAT_FORMULA_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscsat {

// A literal: 1-based variable index plus sign (+1 normal, -1 negated).
struct Lit {
    int var = 0;
    int sign = +1;

    friend bool operator==(const Lit&, const Lit&) = default;
};

// A disjunction of 1..3 literals over distinct variables.
struct Clause {
    std::vector<Lit> lits;

    friend bool operator==(const Clause&, const Clause&) = default;
};

// CNF instance. Variables are numbered 1..num_vars.
struct Formula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }

    // Sign coefficient of variable `var` (1-based) in clause m (0-based):
    // +1 normal, -1 negated, 0 absent.
    int sign_of(int m, int var) const;

    friend bool operator==(const Formula&, const Formula&) = default;
};

// Boolean assignment, bits[i] is the value of variable i+1.
struct Assignment {
    std::vector<std::uint8_t> bits;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Per-clause satisfaction summary for one assignment.
struct ClauseStats {
    std::vector<bool> sat_flags;  // some literal true
    std::vector<bool> nae_flags;  // some literal true and some literal false
    int sat_count = 0;
    int nae_count = 0;
};

enum class Objective { sat, max_sat, max_nae };

std::string objective_name(Objective obj);
Objective objective_from_name(const std::string& name);

// Exhaustive-search result.
struct OracleResult {
    Objective objective = Objective::sat;
    int best_value = 0;
    Assignment best_assignment;
    std::int64_t optimal_count = 0;  // assignments achieving best_value
    bool satisfiable = false;        // sat objective: best_value == M
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParseOptions {
    // Reject duplicate variables inside a clause by default; permissive mode
    // merges repeated identical literals and still rejects tautologies.
    bool permissive = false;
    // Require exactly 3 literals per clause.
    bool strict3 = false;
};

// DIMACS CNF reader: `c` comments, one `p cnf N M` header, M zero-terminated
// clauses of nonzero integers (free layout across lines).
Formula parse_dimacs(std::istream& in, const ParseOptions& opts = {});
Formula parse_dimacs(const std::string& text, const ParseOptions& opts = {});

void serialize_dimacs(const Formula& f, std::ostream& out);
std::string serialize_dimacs(const Formula& f);

// Validates the Formula invariants; throws std::invalid_argument on violation.
void validate_formula(const Formula& f, bool strict3 = false);

// Uniform random 3-SAT: each clause picks 3 distinct variables and random
// signs. Deterministic for a given seed.
Formula generate_random_3sat(int n_vars, int n_clauses, std::uint64_t seed);

ClauseStats eval_assignment(const Formula& f, const Assignment& a);

// Exhaustive 2^N scan. Ties break toward the lexicographically smallest
// assignment (x_1 is the most significant position). `max_n` guards runtime.
OracleResult brute_force(const Formula& f, Objective obj, int max_n = 24);

}  // namespace oscsat

#endif

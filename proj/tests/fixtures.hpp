#ifndef OSCSAT_TESTS_FIXTURES_HPP
#define OSCSAT_TESTS_FIXTURES_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscsat/formula.hpp"

namespace oscsat::testing {

inline std::string data_path(const std::string& name) {
    return std::string(OSCSAT_DATA_DIR) + "/" + name;
}

// The 6-variable, 10-clause fixture used throughout: satisfiable (16 models),
// max NAE value 10 with exactly two optima, 000111 and its complement.
inline Formula load_a12() {
    std::ifstream in(data_path("a12.cnf"));
    if (!in) throw std::runtime_error("missing fixture " + data_path("a12.cnf"));
    return parse_dimacs(in);
}

inline Assignment bits(const std::string& s) {
    Assignment a;
    a.bits.reserve(s.size());
    for (char c : s) a.bits.push_back(c == '1' ? 1 : 0);
    return a;
}

// Shared spot-check states for the frozen reference values.
inline const std::vector<double> kAlpha0{0.15, -0.42, 0.88, 1.57, -2.3, 0.05};
inline const std::vector<double> kPhi0{0.3, 2.9, 1.1, 4.0, 5.8, 0.7};
inline constexpr double kT0 = 0.37;

}  // namespace oscsat::testing

#endif

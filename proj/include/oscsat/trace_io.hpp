#ifndef OSCSAT_TRACE_IO_HPP
#define OSCSAT_TRACE_IO_HPP

#include <iosfwd>
#include <string>

#include "oscsat/integrator.hpp"

namespace oscsat {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// CSV with header step,t,energy,sat_count,nae_count,alpha_1..alpha_N,x_1..x_N.
// Floats are written as shortest round-trip decimals.
void emit_trace_csv(const Trace& trace, std::ostream& out);

// JSON object {"meta": {...}, "rows": [...]} mirroring the CSV columns.
void emit_trace_json(const Trace& trace, std::ostream& out);

// format is "csv" or "json"; throws IoError on unwritable path.
void emit_trace(const Trace& trace, const std::string& format, const std::string& path);

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace oscsat

#endif

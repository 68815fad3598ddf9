#include "oscsat/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include "json.hpp"

namespace oscsat {

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void emit_trace_csv(const Trace& trace, std::ostream& out) {
    out << "step,t,energy,sat_count,nae_count";
    for (int i = 1; i <= trace.meta.num_vars; ++i) out << ",alpha_" << i;
    for (int i = 1; i <= trace.meta.num_vars; ++i) out << ",x_" << i;
    out << '\n';
    for (const TraceRow& row : trace.rows) {
        out << row.step << ',' << format_double(row.t) << ',' << format_double(row.energy) << ','
            << row.sat_count << ',' << row.nae_count;
        for (double a : row.alpha) out << ',' << format_double(a);
        for (auto b : row.x) out << ',' << static_cast<int>(b);
        out << '\n';
    }
}

void emit_trace_json(const Trace& trace, std::ostream& out) {
    nlohmann::json meta{
        {"system", system_name(trace.meta.system)},
        {"seed", trace.meta.seed},
        {"dt", trace.meta.dt},
        {"sample_stride", trace.meta.sample_stride},
        {"num_vars", trace.meta.num_vars},
        {"num_clauses", trace.meta.num_clauses},
        {"params",
         {{"A", trace.meta.params.A},
          {"A_s", trace.meta.params.A_s},
          {"omega", trace.meta.params.omega},
          {"kernel_normalized", trace.meta.params.kernel_normalized},
          {"s2_mode", s2_mode_name(trace.meta.params.s2_mode)}}},
    };
    nlohmann::json rows = nlohmann::json::array();
    for (const TraceRow& row : trace.rows) {
        nlohmann::json r{{"step", row.step},       {"t", row.t},
                         {"energy", row.energy},   {"sat_count", row.sat_count},
                         {"nae_count", row.nae_count}};
        r["alpha"] = row.alpha;
        r["x"] = nlohmann::json::array();
        for (auto b : row.x) r["x"].push_back(static_cast<int>(b));
        rows.push_back(std::move(r));
    }
    nlohmann::json doc{{"meta", std::move(meta)}, {"rows", std::move(rows)}};
    out << doc.dump(2) << '\n';
}

void emit_trace(const Trace& trace, const std::string& format, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    if (format == "csv") {
        emit_trace_csv(trace, out);
    } else if (format == "json") {
        emit_trace_json(trace, out);
    } else {
        throw std::invalid_argument("unknown trace format: " + format);
    }
    out.flush();
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace oscsat

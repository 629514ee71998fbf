#include "nse/csv.hpp"

#include <cmath>
#include <cstdio>

namespace nse::csv {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_header(std::ostream& out, const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
}

void write_row(std::ostream& out, const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << format_number(values[i]);
    out << '\n';
}

void write_table(std::ostream& out, const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows) {
    write_header(out, columns);
    for (const auto& r : rows) write_row(out, r);
}

void write_snapshots(std::ostream& out, const std::vector<ComplexField>& frames) {
    write_header(out, {"frame", "t", "x", "re", "im", "abs2"});
    for (std::size_t f = 0; f < frames.size(); ++f) {
        const auto x = grid_positions(frames[f].grid);
        for (std::size_t j = 0; j < x.size(); ++j) {
            const auto& v = frames[f].samples[j];
            write_row(out, {static_cast<double>(f), frames[f].time, x[j], v.real(), v.imag(), std::norm(v)});
        }
    }
}

}  // namespace nse::csv

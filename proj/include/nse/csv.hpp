#pragma once

// Comma-separated output: one header row, doubles with 17 significant digits.

#include <ostream>
#include <string>
#include <vector>

#include "nse/field.hpp"

namespace nse::csv {

std::string format_number(double x);

void write_header(std::ostream& out, const std::vector<std::string>& columns);
void write_row(std::ostream& out, const std::vector<double>& values);
void write_table(std::ostream& out, const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows);

/// Long format: frame, t, x, re, im, abs2.
void write_snapshots(std::ostream& out, const std::vector<ComplexField>& frames);

}  // namespace nse::csv

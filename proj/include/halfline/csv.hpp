#ifndef HALFLINE_CSV_HPP
#define HALFLINE_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "halfline/fokas.hpp"

// Deterministic CSV emission/parsing for solution samples.  Floating-point
// fields are printed as shortest round-trip decimals so that re-parsing a
// file reproduces the in-memory values bit for bit.

namespace halfline {

struct CsvRow {
    std::string model;
    double omega0 = 0.0;
    double x = 0.0;
    double t = 0.0;
    double xi = 0.0;
    std::string method;
    double value = 0.0;
    double err_estimate = 0.0;
    std::string region;
    std::string status;
};

extern const char* const kCsvHeader;

std::string format_double(double v);       // shortest round-trip decimal
double parse_double(const std::string& s); // inverse of format_double

std::string method_name(Method m);

std::string to_csv_line(const CsvRow& row);
CsvRow from_csv_line(const std::string& line);

void write_csv(std::ostream& os, const std::vector<CsvRow>& rows);
std::vector<CsvRow> read_csv(std::istream& is);  // skips the header line

}  // namespace halfline

#endif

#include "halfline/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace halfline {

const char* const kCsvHeader =
    "model,omega0,x,t,xi,method,value,err_estimate,region,status";

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) {
        // from_chars does not accept "inf"/"nan" spellings on all
        // platforms; fall back to strtod.
        v = std::strtod(s.c_str(), nullptr);
    }
    return v;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::ExactQuadrature: return "exact";
        case Method::Asymptotic: return "asym";
        case Method::Series: return "series";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

std::string to_csv_line(const CsvRow& row) {
    std::string out;
    out += row.model;
    out += ',';
    out += format_double(row.omega0);
    out += ',';
    out += format_double(row.x);
    out += ',';
    out += format_double(row.t);
    out += ',';
    out += format_double(row.xi);
    out += ',';
    out += row.method;
    out += ',';
    out += format_double(row.value);
    out += ',';
    out += format_double(row.err_estimate);
    out += ',';
    out += row.region;
    out += ',';
    out += row.status;
    return out;
}

CsvRow from_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    if (fields.size() != 10) {
        throw std::runtime_error("malformed CSV row: " + line);
    }
    CsvRow row;
    row.model = fields[0];
    row.omega0 = parse_double(fields[1]);
    row.x = parse_double(fields[2]);
    row.t = parse_double(fields[3]);
    row.xi = parse_double(fields[4]);
    row.method = fields[5];
    row.value = parse_double(fields[6]);
    row.err_estimate = parse_double(fields[7]);
    row.region = fields[8];
    row.status = fields[9];
    return row;
}

void write_csv(std::ostream& os, const std::vector<CsvRow>& rows) {
    os << kCsvHeader << '\n';
    for (const CsvRow& row : rows) os << to_csv_line(row) << '\n';
}

std::vector<CsvRow> read_csv(std::istream& is) {
    std::vector<CsvRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first) {
            first = false;
            continue;
        }
        if (line.empty()) continue;
        rows.push_back(from_csv_line(line));
    }
    return rows;
}

}  // namespace halfline

#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacsig/mcval.hpp"
#include "pacsig/scenarios.hpp"

namespace pacsig {

// Lossless text form of a double (17 significant digits).
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace detail {

inline bool numeric_token(const std::string& tok) {
    char* end = nullptr;
    const char* c = tok.c_str();
    std::strtod(c, &end);
    return end != c && *end == '\0';
}

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

// Reads a CSV of one or more numeric columns. An optional single header
// row is skipped. Rows must all have the same width.
inline std::vector<std::vector<double>> read_csv_columns(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<double>> cols;
    std::string line;
    bool first = true;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        auto fields = detail::split_fields(line);
        while (!fields.empty() && fields.back().empty()) fields.pop_back();
        if (fields.empty()) continue;
        if (first) {
            first = false;
            bool header = false;
            for (const auto& f : fields)
                if (!detail::numeric_token(f)) header = true;
            if (header) continue;
            cols.resize(fields.size());
        }
        if (cols.empty()) cols.resize(fields.size());
        if (fields.size() != cols.size())
            throw std::runtime_error(path + ": ragged row at line " + std::to_string(row));
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (!detail::numeric_token(fields[i]))
                throw std::runtime_error(path + ": non-numeric value at line " + std::to_string(row));
            cols[i].push_back(std::stod(fields[i]));
        }
    }
    if (cols.empty() || cols[0].empty())
        throw std::runtime_error(path + ": no data rows");
    return cols;
}

inline void write_signal_csv(const std::string& path, const std::vector<double>& samples,
                             bool header = true) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    if (header) out << "value\n";
    for (double v : samples) out << format_double(v) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "kind,strength,bins,seed,mi,p_value,critical_99\n";
    for (const auto& r : rows) {
        out << to_string(r.kind) << ',' << format_double(r.strength) << ',' << r.bins << ','
            << r.seed << ',' << format_double(r.mi) << ',' << format_double(r.p_value) << ','
            << format_double(r.critical_99) << "\n";
    }
}

inline void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_sweep_csv(out, rows);
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline void write_qq_csv(std::ostream& out, const std::vector<QqPoint>& table) {
    out << "quantile,empirical,theoretical\n";
    for (const auto& p : table)
        out << format_double(p.quantile) << ',' << format_double(p.empirical) << ','
            << format_double(p.theoretical) << "\n";
}

inline void write_qq_csv(const std::string& path, const std::vector<QqPoint>& table) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_qq_csv(out, table);
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace pacsig

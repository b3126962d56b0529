#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace diracepr
{

//! 17 significant digits (round-trip exact), "." decimal point, no "-0".
inline std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
    return buf;
}

struct CsvTable
{
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

//! Header row always emitted; LF line endings.
inline void write_csv(std::ostream& os, CsvTable const& table)
{
    for (std::size_t i = 0; i < table.header.size(); ++i)
        os << (i ? "," : "") << table.header[i];
    os << '\n';
    for (auto const& row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
}

}  // namespace diracepr

#pragma once

#include "utdd/core/time_series.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace utdd::io {

/// Timestamped numeric table with a uniform grid: header `timestamp,<col>,...`,
/// ISO-8601 UTC timestamps strictly ascending at a constant step.
struct CsvTable {
    std::vector<std::string> columns;
    Timestamp start;
    std::chrono::seconds step{0};
    /// values[c][row]
    std::vector<std::vector<double>> values;

    std::size_t rows() const { return values.empty() ? 0 : values.front().size(); }
    const std::vector<double>& column(const std::string& name) const;
};

/// Throws ParseError carrying the first offending line number.
CsvTable read_csv_table(std::istream& in);
CsvTable read_csv_table(const std::filesystem::path& path);

/// Reads the standard `timestamp,value` format into a series.
TimeSeries read_series_csv(std::istream& in);
TimeSeries read_series_csv(const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

void write_csv_table(std::ostream& out, Timestamp start, std::chrono::seconds step,
                     const std::vector<std::string>& columns, const std::vector<std::vector<double>>& values);
void write_csv_table(const std::filesystem::path& path, Timestamp start, std::chrono::seconds step,
                     const std::vector<std::string>& columns, const std::vector<std::vector<double>>& values);

void write_series_csv(std::ostream& out, const TimeSeries& series, const std::string& value_column = "value");
void write_series_csv(const std::filesystem::path& path, const TimeSeries& series,
                      const std::string& value_column = "value");

} // namespace utdd::io

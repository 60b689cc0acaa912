#include "utdd/io/csv.hpp"

#include "utdd/core/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace utdd::io {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t begin = 0;
    while (true) {
        const auto comma = line.find(',', begin);
        fields.push_back(line.substr(begin, comma == std::string_view::npos ? std::string_view::npos : comma - begin));
        if (comma == std::string_view::npos) {
            break;
        }
        begin = comma + 1;
    }
    return fields;
}

std::string_view trim_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

double parse_value(std::string_view text, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError(line_no, "cannot parse number '" + std::string(text) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line_no, "value '" + std::string(text) + "' is not finite");
    }
    return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

} // namespace

const std::vector<double>& CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return values[i];
        }
    }
    throw std::invalid_argument("CSV has no column '" + name + "'");
}

CsvTable read_csv_table(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(1, "empty input; expected a header");
    }
    const auto header = split_fields(trim_cr(line));
    if (header.size() < 2 || header.front() != "timestamp") {
        throw ParseError(1, "header must be 'timestamp,<column>[,...]'");
    }

    CsvTable table;
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i].empty()) {
            throw ParseError(1, "empty column name in header");
        }
        table.columns.emplace_back(header[i]);
    }
    table.values.resize(table.columns.size());

    std::size_t line_no = 1;
    std::optional<Timestamp> previous;
    while (std::getline(in, line)) {
        ++line_no;
        const auto row = trim_cr(line);
        if (row.empty()) {
            continue;
        }
        const auto fields = split_fields(row);
        if (fields.size() != header.size()) {
            throw ParseError(line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                                          std::to_string(fields.size()));
        }
        Timestamp ts;
        try {
            ts = parse_timestamp(fields[0]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        if (previous) {
            const auto gap = ts - *previous;
            if (gap.count() <= 0) {
                throw ParseError(line_no, "timestamps must be strictly ascending");
            }
            if (table.step.count() == 0) {
                table.step = gap;
            } else if (gap != table.step) {
                throw ParseError(line_no, "irregular step: expected " + std::to_string(table.step.count()) +
                                              " s, found " + std::to_string(gap.count()) + " s");
            }
        } else {
            table.start = ts;
        }
        previous = ts;
        for (std::size_t c = 1; c < fields.size(); ++c) {
            table.values[c - 1].push_back(parse_value(fields[c], line_no));
        }
    }
    if (!previous) {
        throw ParseError(line_no, "no data rows");
    }
    return table;
}

CsvTable read_csv_table(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_csv_table(in);
}

TimeSeries read_series_csv(std::istream& in) {
    CsvTable table = read_csv_table(in);
    if (table.columns.size() != 1 || table.columns.front() != "value") {
        throw ParseError(1, "header must be exactly 'timestamp,value'");
    }
    // A single row carries no step information; use one second as a placeholder grid.
    const auto step = table.step.count() > 0 ? table.step : std::chrono::seconds{1};
    return TimeSeries(table.start, step, std::move(table.values.front()));
}

TimeSeries read_series_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_series_csv(in);
}

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        throw std::runtime_error("cannot format number");
    }
    return std::string(buf, ptr);
}

void write_csv_table(std::ostream& out, Timestamp start, std::chrono::seconds step,
                     const std::vector<std::string>& columns, const std::vector<std::vector<double>>& values) {
    if (columns.size() != values.size()) {
        throw std::invalid_argument("CSV column names and value columns differ in count");
    }
    const std::size_t rows = values.empty() ? 0 : values.front().size();
    for (const auto& col : values) {
        if (col.size() != rows) {
            throw std::invalid_argument("CSV value columns differ in length");
        }
    }
    out << "timestamp";
    for (const auto& c : columns) {
        out << ',' << c;
    }
    out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        out << format_timestamp(start + static_cast<long long>(r) * step);
        for (const auto& col : values) {
            out << ',' << format_double(col[r]);
        }
        out << '\n';
    }
}

void write_csv_table(const std::filesystem::path& path, Timestamp start, std::chrono::seconds step,
                     const std::vector<std::string>& columns, const std::vector<std::vector<double>>& values) {
    auto out = open_output(path);
    write_csv_table(out, start, step, columns, values);
}

void write_series_csv(std::ostream& out, const TimeSeries& series, const std::string& value_column) {
    write_csv_table(out, series.start(), series.step(), {value_column},
                    {std::vector<double>(series.values().begin(), series.values().end())});
}

void write_series_csv(const std::filesystem::path& path, const TimeSeries& series, const std::string& value_column) {
    auto out = open_output(path);
    write_series_csv(out, series, value_column);
}

} // namespace utdd::io

#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <stdexcept>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace smoothcurve::io {

/// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Numeric table read from CSV. `header` is empty when the file has none.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;
    std::vector<std::string> comments;  ///< '#' lines, without the marker

    std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
};

/// Shortest decimal that round-trips to the same double.
inline std::string format_double(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

inline std::optional<double> parse_number(std::string_view field)
{
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size() || field.empty()) return std::nullopt;
    return v;
}

}  // namespace detail

/// Comma separated, decimal point, '#' comments, blank lines skipped. The
/// first data row is a header when any of its fields is not a number. A
/// header with no data rows yields an empty table.
inline Table read_csv(std::istream& in)
{
    Table table;
    std::string line;
    std::size_t line_no = 0;
    bool first_row = true;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = detail::trim(line);
        if (body.empty()) continue;
        if (body.front() == '#') {
            table.comments.emplace_back(detail::trim(body.substr(1)));
            continue;
        }
        const auto fields = detail::split(body);
        if (first_row) {
            first_row = false;
            width = fields.size();
            table.columns.assign(width, {});
            bool numeric = true;
            for (auto f : fields) numeric = numeric && detail::parse_number(f).has_value();
            if (!numeric) {
                for (auto f : fields) table.header.emplace_back(f);
                continue;
            }
        }
        if (fields.size() != width) {
            throw ParseError(line_no, "expected " + std::to_string(width) + " fields, found " +
                                          std::to_string(fields.size()));
        }
        for (std::size_t c = 0; c < width; ++c) {
            const auto v = detail::parse_number(fields[c]);
            if (!v) {
                throw ParseError(line_no, "field " + std::to_string(c + 1) + " is not a number: '" +
                                              std::string(fields[c]) + "'");
            }
            table.columns[c].push_back(*v);
        }
    }
    if (table.columns.empty()) {
        throw ParseError(line_no, "no header or data rows");
    }
    return table;
}

inline Table read_csv_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return read_csv(in);
}

/// Column by 0-based index or by header name.
inline std::size_t resolve_column(const Table& table, const std::string& selector)
{
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (table.header[c] == selector) return c;
    }
    std::size_t index = 0;
    const auto res = std::from_chars(selector.data(), selector.data() + selector.size(), index);
    if (res.ec == std::errc() && res.ptr == selector.data() + selector.size()) {
        if (index < table.columns.size()) return index;
        throw ParseError(0, "column index " + selector + " out of range (" + std::to_string(table.columns.size()) +
                                " columns)");
    }
    throw ParseError(0, "no column named '" + selector + "'");
}

/// Writes '#' comment lines, a header row and the columns.
inline void write_csv(std::ostream& out, const std::vector<std::string>& comments,
                      const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns)
{
    for (const auto& c : comments) out << "# " << c << '\n';
    for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
    out << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    std::string row;
    for (std::size_t r = 0; r < rows; ++r) {
        row.clear();
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) row += ',';
            row += format_double(columns[c][r]);
        }
        row += '\n';
        out << row;
    }
}

}  // namespace smoothcurve::io

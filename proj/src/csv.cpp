#include "robustperiod/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace robustperiod::io {

ParseError::ParseError(std::size_t row, const std::string& what)
    : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> splitCells(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return cells;
}

std::optional<double> parseNumber(const std::string& cell) {
    if (cell.empty()) {
        return std::nullopt;
    }
    const char* begin = cell.data();
    if (*begin == '+') {
        ++begin;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        return std::nullopt;
    }
    return value;
}

bool isIndex(const std::string& column) {
    return !column.empty() && std::all_of(column.begin(), column.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

} // namespace

TimeSeries parseCsv(const std::string& text, const std::string& column) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            lines.push_back(line);
        }
    }
    while (!lines.empty() && trim(lines.back()).empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw ParseError(1, "file contains no rows");
    }

    std::size_t index = 0;
    std::size_t firstData = 0;
    const auto header = splitCells(lines.front());
    if (isIndex(column)) {
        index = std::stoul(column);
        if (index >= header.size()) {
            throw ParseError(1, "column index " + column + " out of range");
        }
        if (!parseNumber(header[index])) {
            firstData = 1;
        }
    } else {
        const auto it = std::find(header.begin(), header.end(), column);
        if (it == header.end()) {
            throw ParseError(1, "no column named '" + column + "' in header");
        }
        index = static_cast<std::size_t>(it - header.begin());
        firstData = 1;
    }

    std::vector<double> values;
    values.reserve(lines.size());
    for (std::size_t i = firstData; i < lines.size(); ++i) {
        const std::size_t row = i + 1;
        const auto cells = splitCells(lines[i]);
        if (index >= cells.size() || cells[index].empty()) {
            throw ParseError(row, "missing value");
        }
        const auto value = parseNumber(cells[index]);
        if (!value) {
            throw ParseError(row, "non-numeric value '" + cells[index] + "'");
        }
        if (!std::isfinite(*value)) {
            throw ParseError(row, "non-finite value '" + cells[index] + "'");
        }
        values.push_back(*value);
    }
    return TimeSeries(std::move(values));
}

TimeSeries readCsv(const std::filesystem::path& path, const std::string& column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading '" + path.string() + "'");
    }
    auto series = parseCsv(buf.str(), column);
    series.label = path.filename().string();
    return series;
}

std::string formatCsvColumn(std::span<const double> values, const std::string& header) {
    std::string out = header + "\n";
    char buf[64];
    for (double v : values) {
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        out.append(buf, ptr);
        out.push_back('\n');
    }
    return out;
}

void writeFileAtomic(const std::filesystem::path& path, const std::string& contents) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write '" + tmp.string() + "'");
        }
        out << contents;
        out.flush();
        if (!out) {
            throw IoError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

} // namespace robustperiod::io

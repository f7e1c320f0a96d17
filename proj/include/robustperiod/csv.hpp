#pragma once

#include "robustperiod/time_series.hpp"

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>

namespace robustperiod::io {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failures carry the 1-based row number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t row, const std::string& what);
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

/// Column selector: a header name, or a zero-based index written as digits.
TimeSeries readCsv(const std::filesystem::path& path, const std::string& column = "0");
TimeSeries parseCsv(const std::string& text, const std::string& column = "0");

std::string formatCsvColumn(std::span<const double> values, const std::string& header);

/// Writes to a sibling temporary file and renames it over `path`.
void writeFileAtomic(const std::filesystem::path& path, const std::string& contents);

} // namespace robustperiod::io

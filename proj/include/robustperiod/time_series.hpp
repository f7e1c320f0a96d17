#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace robustperiod {

/// Raised for malformed inputs: too-short series, non-finite samples,
/// out-of-range configuration values.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ordered real-valued samples with an optional provenance label.
struct TimeSeries {
    std::vector<double> values;
    std::string label;

    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> v, std::string l = {})
        : values(std::move(v)), label(std::move(l)) {}

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
    double operator[](std::size_t i) const { return values[i]; }
    std::span<const double> view() const { return values; }
};

/// Throws InvalidInput if any sample is NaN or infinite.
void requireFinite(std::span<const double> values);

/// Throws InvalidInput unless the series holds at least `minLength` finite samples.
void requireSeries(const TimeSeries& series, std::size_t minLength);

} // namespace robustperiod

#include "robustperiod/time_series.hpp"

#include <cmath>
#include <string>

namespace robustperiod {

void requireFinite(std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw InvalidInput("non-finite sample at index " + std::to_string(i));
        }
    }
}

void requireSeries(const TimeSeries& series, std::size_t minLength) {
    if (series.size() < minLength) {
        throw InvalidInput("series has " + std::to_string(series.size()) +
                           " samples, at least " + std::to_string(minLength) + " required");
    }
    requireFinite(series.values);
}

} // namespace robustperiod

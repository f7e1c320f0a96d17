#include "robustperiod/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace robustperiod::stats {

double mean(std::span<const double> x) {
    if (x.empty()) {
        return 0.0;
    }
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double sampleVariance(std::span<const double> x) {
    if (x.size() < 2) {
        return 0.0;
    }
    const double m = mean(x);
    double ss = 0.0;
    for (double v : x) {
        ss += (v - m) * (v - m);
    }
    return ss / static_cast<double>(x.size() - 1);
}

double median(std::span<const double> x) {
    if (x.empty()) {
        return 0.0;
    }
    std::vector<double> buf(x.begin(), x.end());
    const auto mid = buf.size() / 2;
    std::nth_element(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(mid), buf.end());
    const double upper = buf[mid];
    if (buf.size() % 2 == 1) {
        return upper;
    }
    const double lower = *std::max_element(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

double mad(std::span<const double> x, double center) {
    std::vector<double> dev(x.size());
    std::transform(x.begin(), x.end(), dev.begin(), [center](double v) { return std::abs(v - center); });
    return median(dev);
}

double mad(std::span<const double> x) {
    return mad(x, median(x));
}

} // namespace robustperiod::stats

#pragma once

#include <span>

namespace robustperiod::stats {

double mean(std::span<const double> x);

/// Sample variance with the n-1 denominator. Zero for fewer than two samples.
double sampleVariance(std::span<const double> x);

/// Median; the mean of the two central values for even counts.
double median(std::span<const double> x);

/// Raw median absolute deviation, median(|x - median(x)|), with no
/// normal-consistency factor.
double mad(std::span<const double> x, double center);
double mad(std::span<const double> x);

} // namespace robustperiod::stats

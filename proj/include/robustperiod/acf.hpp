#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace robustperiod::acf {

struct AcfSeries {
    std::vector<double> values;         ///< normalized, values[0] == 1
    std::vector<double> raw;            ///< p_t / ((N - t) p_0)
    std::vector<double> autocovariance; ///< p_t, the inverse transform of the full periodogram
    std::size_t usable_lags = 0;
    bool degenerate = false;
};

struct ValidationRange {
    std::size_t k = 0;
    double lo = 0.0;
    double hi = 0.0;

    /// Periods consistent with a spectral peak at bin k of an n-point grid.
    static ValidationRange of(std::size_t k, std::size_t n);
    bool contains(double period) const { return period >= lo && period <= hi; }
};

/// Extends a half spectrum (k = 0..N-1) of the padded series x (length 2N)
/// to all N' bins: Nyquist from x directly, the upper half mirrored.
std::vector<double> fullRangePeriodogram(std::span<const double> halfSpectrum,
                                         std::span<const double> x);

/// Autocorrelation through the inverse DFT of a full-range periodogram of a
/// zero-padded length-n series, with the unbiased 1/(n - t) lag correction.
AcfSeries huberAcf(std::span<const double> fullPeriodogram, std::size_t n);

/// Local maxima at lags 1..usable_lags at or above `height`; of two peaks
/// closer than `minDistance` the higher one survives (ties keep the smaller lag).
std::vector<std::size_t> findPeaks(const AcfSeries& acf, double height, std::size_t minDistance);

struct PeriodEstimate {
    double period = 0.0;
    double median_distance = 0.0;
    ValidationRange range;
};

/// Median spacing of consecutive peaks, accepted only inside the validation
/// range of bin kStar on an n-point frequency grid.
std::optional<PeriodEstimate> periodFromPeaks(std::span<const std::size_t> peaks,
                                              std::size_t kStar, std::size_t n);

} // namespace robustperiod::acf

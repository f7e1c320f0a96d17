#include "robustperiod/acf.hpp"

#include "fft.hpp"
#include "robustperiod/stats.hpp"
#include "robustperiod/time_series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace robustperiod::acf {

ValidationRange ValidationRange::of(std::size_t k, std::size_t n) {
    if (k == 0) {
        throw InvalidInput("validation range needs a nonzero frequency index");
    }
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    ValidationRange r;
    r.k = k;
    r.lo = 0.5 * (nd / (kd + 1.0) + nd / kd) - 1.0;
    r.hi = k == 1 ? nd + 1.0 : 0.5 * (nd / kd + nd / (kd - 1.0)) + 1.0;
    return r;
}

std::vector<double> fullRangePeriodogram(std::span<const double> halfSpectrum,
                                         std::span<const double> x) {
    const std::size_t n = halfSpectrum.size();
    if (n == 0 || x.size() != 2 * n) {
        throw InvalidInput("full-range periodogram needs a padded series of twice the half-spectrum length");
    }
    const std::size_t nPrime = 2 * n;
    std::vector<double> full(nPrime, 0.0);
    std::copy(halfSpectrum.begin(), halfSpectrum.end(), full.begin());
    double alternating = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        alternating += x[2 * k] - x[2 * k + 1];
    }
    full[n] = alternating * alternating / static_cast<double>(nPrime);
    for (std::size_t k = n + 1; k < nPrime; ++k) {
        full[k] = full[nPrime - k];
    }
    return full;
}

AcfSeries huberAcf(std::span<const double> fullPeriodogram, std::size_t n) {
    if (n == 0 || fullPeriodogram.size() != 2 * n) {
        throw InvalidInput("ACF needs a full periodogram of length 2N");
    }
    AcfSeries out;
    out.usable_lags = n / 2;
    out.values.assign(n, 0.0);
    out.raw.assign(n, 0.0);
    out.autocovariance.assign(n, 0.0);

    const auto p = fft::inverseOfReal(fullPeriodogram);
    const double p0 = p[0].real();
    double maxImag = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        out.autocovariance[t] = p[t].real();
        maxImag = std::max(maxImag, std::abs(p[t].imag()));
    }
    if (!(p0 > 0.0)) {
        out.degenerate = true;
        return out;
    }
    if (maxImag > 1e-8 * std::max(1.0, p0)) {
        throw std::logic_error("inverse transform of a symmetric periodogram left an imaginary residue of " +
                               std::to_string(maxImag));
    }
    const double nd = static_cast<double>(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double lagCount = nd - static_cast<double>(t);
        out.raw[t] = out.autocovariance[t] / (lagCount * p0);
        out.values[t] = nd * out.autocovariance[t] / (lagCount * p0);
    }
    out.values[0] = 1.0;
    return out;
}

std::vector<std::size_t> findPeaks(const AcfSeries& acf, double height, std::size_t minDistance) {
    const auto& v = acf.values;
    std::vector<std::size_t> candidates;
    const std::size_t last = std::min(acf.usable_lags, v.size() >= 2 ? v.size() - 2 : 0);
    for (std::size_t t = 1; t <= last; ++t) {
        if (v[t] > v[t - 1] && v[t] >= v[t + 1] && v[t] >= height) {
            candidates.push_back(t);
        }
    }
    if (minDistance <= 1 || candidates.size() < 2) {
        return candidates;
    }
    std::vector<std::size_t> byHeight = candidates;
    std::stable_sort(byHeight.begin(), byHeight.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    std::vector<std::size_t> kept;
    for (std::size_t t : byHeight) {
        const bool clash = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
            return (t > k ? t - k : k - t) < minDistance;
        });
        if (!clash) {
            kept.push_back(t);
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::optional<PeriodEstimate> periodFromPeaks(std::span<const std::size_t> peaks, std::size_t kStar,
                                              std::size_t n) {
    if (peaks.size() < 2 || kStar == 0) {
        return std::nullopt;
    }
    std::vector<double> gaps;
    gaps.reserve(peaks.size() - 1);
    for (std::size_t i = 1; i < peaks.size(); ++i) {
        gaps.push_back(static_cast<double>(peaks[i]) - static_cast<double>(peaks[i - 1]));
    }
    PeriodEstimate est;
    est.median_distance = stats::median(gaps);
    est.range = ValidationRange::of(kStar, n);
    if (!est.range.contains(est.median_distance)) {
        return std::nullopt;
    }
    est.period = est.median_distance;
    return est;
}

} // namespace robustperiod::acf

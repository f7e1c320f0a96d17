#include "robustperiod/preprocess.hpp"

#include "robustperiod/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace robustperiod::preprocess {

void PreprocessConfig::validate() const {
    if (!(hp_lambda >= 0.0) || !std::isfinite(hp_lambda)) {
        throw InvalidInput("hp_lambda must be a finite nonnegative number");
    }
    if (!(clip_c > 0.0)) {
        throw InvalidInput("clip_c must be positive");
    }
}

Standardized standardize(const TimeSeries& series) {
    if (series.empty()) {
        throw InvalidInput("cannot standardize an empty series");
    }
    requireFinite(series.values);
    Standardized out;
    out.mean = stats::mean(series.values);
    out.std = std::sqrt(stats::sampleVariance(series.values));
    out.series.label = series.label;
    out.series.values.resize(series.size(), 0.0);
    // A constant series can leave a std of a few ulps from the rounded mean.
    if (out.std <= 1e-12 * std::abs(out.mean) || !std::isfinite(out.std)) {
        out.std = 0.0;
        out.degenerate = true;
        return out;
    }
    std::transform(series.values.begin(), series.values.end(), out.series.values.begin(),
                   [&](double v) { return (v - out.mean) / out.std; });
    return out;
}

TimeSeries hpTrend(const TimeSeries& series, double lambda) {
    const std::size_t n = series.size();
    if (n < 3) {
        throw InvalidInput("HP filter needs at least 3 samples");
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw InvalidInput("HP lambda must be a finite nonnegative number");
    }
    if (lambda == 0.0) {
        return series;
    }

    // Bands of A = I + 2 lambda D'D: diagonal, first and second subdiagonal.
    std::vector<double> d0(n, 1.0), d1(n, 0.0), d2(n, 0.0);
    constexpr std::array<double, 3> stencil{1.0, -2.0, 1.0};
    const double w = 2.0 * lambda;
    for (std::size_t r = 0; r + 2 < n; ++r) {
        for (std::size_t a = 0; a < 3; ++a) {
            d0[r + a] += w * stencil[a] * stencil[a];
            if (a + 1 < 3) {
                d1[r + a] += w * stencil[a] * stencil[a + 1];
            }
            if (a + 2 < 3) {
                d2[r + a] += w * stencil[a] * stencil[a + 2];
            }
        }
    }

    // Banded Cholesky A = L L', L lower with two subdiagonals.
    std::vector<double> l0(n), l1(n, 0.0), l2(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double diag = d0[i];
        if (i >= 1) {
            diag -= l1[i - 1] * l1[i - 1];
        }
        if (i >= 2) {
            diag -= l2[i - 2] * l2[i - 2];
        }
        l0[i] = std::sqrt(diag);
        if (i + 1 < n) {
            double sub = d1[i];
            if (i >= 1) {
                sub -= l2[i - 1] * l1[i - 1];
            }
            l1[i] = sub / l0[i];
        }
        if (i + 2 < n) {
            l2[i] = d2[i] / l0[i];
        }
    }

    // l1[i] = L(i+1, i), l2[i] = L(i+2, i).
    std::vector<double> tau(series.values);
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 1) {
            tau[i] -= l1[i - 1] * tau[i - 1];
        }
        if (i >= 2) {
            tau[i] -= l2[i - 2] * tau[i - 2];
        }
        tau[i] /= l0[i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
        if (ii + 1 < n) {
            tau[ii] -= l1[ii] * tau[ii + 1];
        }
        if (ii + 2 < n) {
            tau[ii] -= l2[ii] * tau[ii + 2];
        }
        tau[ii] /= l0[ii];
    }
    return TimeSeries(std::move(tau), series.label);
}

Clipped clipExtremes(const TimeSeries& series, double c) {
    if (series.empty()) {
        throw InvalidInput("cannot clip an empty series");
    }
    if (!(c > 0.0)) {
        throw InvalidInput("clip bound must be positive");
    }
    Clipped out;
    out.series.label = series.label;
    out.series.values.assign(series.size(), 0.0);
    const double mu = stats::median(series.values);
    const double s = stats::mad(series.values, mu);
    if (s == 0.0) {
        out.degenerate = true;
        return out;
    }
    std::transform(series.values.begin(), series.values.end(), out.series.values.begin(),
                   [&](double v) { return std::clamp((v - mu) / s, -c, c); });
    return out;
}

Preprocessed preprocess(const TimeSeries& series, const PreprocessConfig& cfg) {
    cfg.validate();
    auto standardized = standardize(series);
    if (standardized.degenerate) {
        return {std::move(standardized.series), true};
    }
    const auto trend = hpTrend(standardized.series, cfg.hp_lambda);
    TimeSeries detrended = standardized.series;
    for (std::size_t i = 0; i < detrended.size(); ++i) {
        detrended.values[i] -= trend.values[i];
    }
    auto clipped = clipExtremes(detrended, cfg.clip_c);
    return {std::move(clipped.series), clipped.degenerate};
}

} // namespace robustperiod::preprocess

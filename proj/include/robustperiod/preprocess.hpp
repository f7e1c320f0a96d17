#pragma once

#include "robustperiod/time_series.hpp"

namespace robustperiod::preprocess {

struct PreprocessConfig {
    /// HP smoothing weight on the squared second differences, applied to the
    /// standardized series.
    double hp_lambda = 1e6;
    /// Clipping bound in MAD units.
    double clip_c = 3.0;

    void validate() const;
};

struct Standardized {
    TimeSeries series;
    double mean = 0.0;
    double std = 0.0;
    bool degenerate = false;
};

/// Subtracts the sample mean and divides by the sample standard deviation
/// (n-1 denominator). A constant input yields zeros with std = 0 and the
/// degenerate flag set.
Standardized standardize(const TimeSeries& series);

/// Hodrick-Prescott trend: the minimizer of
///   1/2 * sum (y_t - tau_t)^2 + lambda * sum (tau_{t-1} - 2 tau_t + tau_{t+1})^2,
/// i.e. the solution of (I + 2 lambda D'D) tau = y, solved as a symmetric
/// pentadiagonal system in O(N).
TimeSeries hpTrend(const TimeSeries& series, double lambda);

struct Clipped {
    TimeSeries series;
    bool degenerate = false;
};

/// Psi((y - median) / MAD) with Psi(x) = sign(x) * min(|x|, c).
/// MAD = 0 gives all zeros with the degenerate flag set.
Clipped clipExtremes(const TimeSeries& series, double c);

struct Preprocessed {
    TimeSeries series;
    bool degenerate = false;
};

/// standardize -> subtract HP trend -> clip. Output lies in [-c, c].
Preprocessed preprocess(const TimeSeries& series, const PreprocessConfig& cfg);

} // namespace robustperiod::preprocess

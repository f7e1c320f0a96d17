#pragma once

#include "robustperiod/preprocess.hpp"
#include "robustperiod/spectral.hpp"
#include "robustperiod/time_series.hpp"

#include <optional>
#include <span>
#include <vector>

namespace robustperiod {

struct DetectorConfig {
    preprocess::PreprocessConfig preprocess;
    int wavelet_order = 4;
    double share_threshold = 0.05;
    spectral::AdmmConfig admm;
    double fisher_alpha = 1e-10;
    double acf_height = 0.5;
    std::size_t acf_min_distance = 2;
    double merge_tolerance = 0.03;
    /// false selects the non-robust ablation: sample wavelet variance,
    /// plain periodogram and plain ACF.
    bool robust_mode = true;

    void validate() const;
};

struct PeriodRecord {
    double length = 0.0;
    int level = 0;
    double p_value = 1.0;
    double variance_share = 0.0;
    double acf_median_distance = 0.0;
    std::size_t k_star = 0;
};

/// Per-level intermediate results, kept for diagnostics dumps.
struct LevelDiagnostics {
    int level = 0;
    double variance = 0.0;
    double share = 0.0;
    bool examined = false;
    spectral::FisherOutcome fisher;
    std::vector<double> coefficients;
    std::vector<double> periodogram;
    std::vector<double> acf;
    std::vector<std::size_t> peaks;
    std::optional<double> period;
};

struct PeriodReport {
    std::vector<PeriodRecord> periods;
    int levels_examined = 0;
    bool degenerate = false;
    DetectorConfig config;
    std::vector<LevelDiagnostics> diagnostics;
};

/// Shortest series accepted by robustPeriod.
inline constexpr std::size_t kMinSeriesLength = 64;

/// Fisher candidate and ACF validation for one level's coefficients.
/// `diag`, when given, receives the intermediate spectra.
std::optional<PeriodRecord> detectLevel(std::span<const double> w, int level,
                                        const DetectorConfig& cfg,
                                        LevelDiagnostics* diag = nullptr);

/// Collapses records whose lengths agree within `tolerance` (relative to the
/// shorter), keeping the larger variance share; sorted by length.
std::vector<PeriodRecord> mergePeriods(std::vector<PeriodRecord> records, double tolerance);

/// Full pipeline: preprocess, MODWT, level ranking, per-level detection, merge.
PeriodReport robustPeriod(const TimeSeries& series, const DetectorConfig& cfg = {});

} // namespace robustperiod

#include "robustperiod/detector.hpp"

#include "robustperiod/acf.hpp"
#include "robustperiod/modwt.hpp"

#include <algorithm>
#include <cmath>

namespace robustperiod {

void DetectorConfig::validate() const {
    preprocess.validate();
    admm.validate();
    if (wavelet_order < 1 || wavelet_order > 10) {
        throw InvalidInput("wavelet_order must lie in 1..10");
    }
    if (!(share_threshold >= 0.0 && share_threshold < 1.0)) {
        throw InvalidInput("share_threshold must lie in [0, 1)");
    }
    if (!(fisher_alpha > 0.0 && fisher_alpha < 1.0)) {
        throw InvalidInput("fisher_alpha must lie in (0, 1)");
    }
    if (!(acf_height > 0.0 && acf_height < 1.0)) {
        throw InvalidInput("acf_height must lie in (0, 1)");
    }
    if (acf_min_distance < 1) {
        throw InvalidInput("acf_min_distance must be at least 1");
    }
    if (!(merge_tolerance >= 0.0)) {
        throw InvalidInput("merge_tolerance must be nonnegative");
    }
}

std::optional<PeriodRecord> detectLevel(std::span<const double> w, int level,
                                        const DetectorConfig& cfg, LevelDiagnostics* diag) {
    const std::size_t n = w.size();
    const auto padded = spectral::zeroPad(w);
    if (padded.degenerate) {
        return std::nullopt;
    }
    const auto hybrid = spectral::huberPeriodogram(padded.x, level, cfg.admm, cfg.robust_mode);
    const auto fisher = spectral::fisherTest(hybrid.power, cfg.fisher_alpha);
    if (diag != nullptr) {
        diag->fisher = fisher;
        diag->periodogram = hybrid.power;
    }
    if (!fisher.significant) {
        return std::nullopt;
    }

    const auto full = acf::fullRangePeriodogram(hybrid.power, padded.x);
    const auto acfSeries = acf::huberAcf(full, n);
    if (acfSeries.degenerate) {
        return std::nullopt;
    }
    const auto peaks = acf::findPeaks(acfSeries, cfg.acf_height, cfg.acf_min_distance);
    if (diag != nullptr) {
        diag->acf = acfSeries.values;
        diag->peaks = peaks;
    }
    // k_star indexes the 2N-point grid of the padded series.
    const auto estimate = acf::periodFromPeaks(peaks, fisher.k_star, padded.x.size());
    if (!estimate) {
        return std::nullopt;
    }

    PeriodRecord record;
    record.length = estimate->period;
    record.level = level;
    record.p_value = fisher.p_value;
    record.acf_median_distance = estimate->median_distance;
    record.k_star = fisher.k_star;
    if (diag != nullptr) {
        diag->period = record.length;
    }
    return record;
}

std::vector<PeriodRecord> mergePeriods(std::vector<PeriodRecord> records, double tolerance) {
    std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return a.variance_share > b.variance_share;
    });
    std::vector<PeriodRecord> kept;
    for (const auto& r : records) {
        const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
            const double shorter = std::min(k.length, r.length);
            return std::abs(k.length - r.length) < tolerance * shorter;
        });
        if (!duplicate) {
            kept.push_back(r);
        }
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const auto& a, const auto& b) { return a.length < b.length; });
    return kept;
}

PeriodReport robustPeriod(const TimeSeries& series, const DetectorConfig& cfg) {
    cfg.validate();
    requireSeries(series, kMinSeriesLength);

    PeriodReport report;
    report.config = cfg;

    const auto pre = preprocess::preprocess(series, cfg.preprocess);
    if (pre.degenerate) {
        report.degenerate = true;
        return report;
    }

    const auto filters = modwt::daubechiesFilters(cfg.wavelet_order);
    const int depth = modwt::maxLevel(series.size(), filters.width());
    auto decomp = modwt::decompose(pre.series.values, filters, depth);
    modwt::computeVariances(decomp, cfg.robust_mode);
    const auto order = modwt::rankLevels(decomp, cfg.share_threshold);

    report.diagnostics.resize(decomp.levels.size());
    for (const auto& level : decomp.levels) {
        auto& d = report.diagnostics[static_cast<std::size_t>(level.j - 1)];
        d.level = level.j;
        d.variance = level.variance.value_or(0.0);
        d.share = level.share;
        d.coefficients = level.w;
    }

    std::vector<PeriodRecord> records;
    for (int j : order) {
        const auto& level = decomp.level(j);
        auto& d = report.diagnostics[static_cast<std::size_t>(j - 1)];
        d.examined = true;
        auto record = detectLevel(level.w, j, cfg, &d);
        if (record) {
            record->variance_share = level.share;
            records.push_back(*record);
        }
    }
    report.levels_examined = static_cast<int>(order.size());
    report.periods = mergePeriods(std::move(records), cfg.merge_tolerance);
    return report;
}

} // namespace robustperiod

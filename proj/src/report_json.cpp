#include "robustperiod/report_json.hpp"

#include <cmath>

namespace robustperiod {

namespace {

double round3(double v) {
    return std::round(v * 1000.0) / 1000.0;
}

} // namespace

nlohmann::json toJson(const DetectorConfig& cfg) {
    return {
        {"hp_lambda", cfg.preprocess.hp_lambda},
        {"clip_c", cfg.preprocess.clip_c},
        {"wavelet_order", cfg.wavelet_order},
        {"share_threshold", cfg.share_threshold},
        {"zeta", cfg.admm.zeta},
        {"rho", cfg.admm.rho},
        {"eps_abs", cfg.admm.eps_abs},
        {"eps_rel", cfg.admm.eps_rel},
        {"max_iter", cfg.admm.max_iter},
        {"fisher_alpha", cfg.fisher_alpha},
        {"acf_height", cfg.acf_height},
        {"acf_min_distance", cfg.acf_min_distance},
        {"merge_tolerance", cfg.merge_tolerance},
        {"robust_mode", cfg.robust_mode},
    };
}

nlohmann::json toJson(const PeriodReport& report) {
    auto periods = nlohmann::json::array();
    for (const auto& p : report.periods) {
        periods.push_back({
            {"length", round3(p.length)},
            {"level", p.level},
            {"p_value", p.p_value},
            {"variance_share", p.variance_share},
            {"acf_median_distance", p.acf_median_distance},
        });
    }
    return {
        {"periods", std::move(periods)},
        {"levels_examined", report.levels_examined},
        {"degenerate", report.degenerate},
        {"config", toJson(report.config)},
    };
}

nlohmann::json toJson(const synth::BenchmarkResult& result) {
    return {
        {"scenario", result.scenario},
        {"runs", result.runs},
        {"tolerance", result.tolerance},
        {"precision", result.precision},
        {"recall", result.recall},
        {"f1", result.f1},
        {"mean_seconds_per_series", result.mean_seconds_per_series},
    };
}

} // namespace robustperiod

#pragma once

#include "robustperiod/detector.hpp"
#include "robustperiod/synth.hpp"

#include <nlohmann/json.hpp>

namespace robustperiod {

nlohmann::json toJson(const DetectorConfig& cfg);
nlohmann::json toJson(const PeriodReport& report);
nlohmann::json toJson(const synth::BenchmarkResult& result);

} // namespace robustperiod

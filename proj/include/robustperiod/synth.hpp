#pragma once

#include "robustperiod/detector.hpp"
#include "robustperiod/time_series.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace robustperiod::synth {

enum class Waveform { Sin, Square, Triangle };

Waveform parseWaveform(const std::string& name);
std::string toString(Waveform w);

struct SyntheticSpec {
    Waveform waveform = Waveform::Sin;
    std::vector<double> periods{20.0, 50.0, 100.0};
    std::vector<double> amplitudes{1.0, 1.0, 1.0};
    std::size_t length = 1000;
    double trend_amplitude = 10.0;
    double noise_variance = 0.1;
    double outlier_ratio = 0.01;
    double outlier_amplitude = 5.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Unit-amplitude zero-mean periodic waves starting at phase 0.
double waveValue(Waveform w, double t, double period);

/// Outlier positions drawn by generate(); exposed for tests.
struct Generated {
    TimeSeries series;
    std::vector<std::size_t> outlier_positions;
};

/// Periodic components + triangle trend + Gaussian noise + spikes/dips.
/// Randomness comes from std::mt19937_64 seeded with spec.seed; normals use
/// Box-Muller on 53-bit uniforms so output is identical across platforms.
Generated generateWithOutliers(const SyntheticSpec& spec);
TimeSeries generate(const SyntheticSpec& spec);

struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::vector<std::pair<double, double>> matched; ///< (detected, truth)
    double tolerance = 0.0;
    std::size_t detected = 0;
    std::size_t truth = 0;
};

double f1Score(double precision, double recall);

/// Greedy one-to-one matching in ascending detected order; each detected
/// value takes the nearest unmatched truth within relative tolerance.
Metrics score(std::span<const double> detected, std::span<const double> truth, double tolerance);

struct BenchmarkResult {
    std::string scenario;
    std::size_t runs = 0;
    double tolerance = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double mean_seconds_per_series = 0.0;
};

/// Detection on seeds 0..runs-1 (spec.seed is overridden), micro-averaged.
BenchmarkResult runBenchmark(const SyntheticSpec& spec, std::size_t runs,
                             const DetectorConfig& cfg, double tolerance,
                             std::string scenario = "custom");

/// Named scenarios: sin-mild, sin-severe, square-mild, triangle-mild,
/// single-mild, single-severe. Throws InvalidInput for unknown names.
SyntheticSpec scenario(const std::string& name);
std::vector<std::string> scenarioNames();

} // namespace robustperiod::synth

#include "robustperiod/synth.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace robustperiod::synth {

Waveform parseWaveform(const std::string& name) {
    if (name == "sin") {
        return Waveform::Sin;
    }
    if (name == "square") {
        return Waveform::Square;
    }
    if (name == "triangle") {
        return Waveform::Triangle;
    }
    throw InvalidInput("unknown waveform '" + name + "' (expected sin, square or triangle)");
}

std::string toString(Waveform w) {
    switch (w) {
    case Waveform::Sin: return "sin";
    case Waveform::Square: return "square";
    case Waveform::Triangle: return "triangle";
    }
    return "sin";
}

void SyntheticSpec::validate() const {
    if (length < 8) {
        throw InvalidInput("synthetic length must be at least 8");
    }
    if (periods.empty()) {
        throw InvalidInput("at least one period is required");
    }
    if (amplitudes.size() != periods.size()) {
        throw InvalidInput("amplitudes and periods must have the same length");
    }
    for (double p : periods) {
        if (!(p >= 2.0) || p > static_cast<double>(length) / 4.0) {
            throw InvalidInput("period " + std::to_string(p) + " must lie in [2, length/4]");
        }
    }
    if (!(noise_variance >= 0.0) || !std::isfinite(noise_variance)) {
        throw InvalidInput("noise variance must be finite and nonnegative");
    }
    if (!(outlier_ratio >= 0.0 && outlier_ratio < 1.0)) {
        throw InvalidInput("outlier ratio must lie in [0, 1)");
    }
    if (!std::isfinite(trend_amplitude) || !std::isfinite(outlier_amplitude)) {
        throw InvalidInput("trend and outlier amplitudes must be finite");
    }
}

double waveValue(Waveform w, double t, double period) {
    const double s = std::sin(2.0 * std::numbers::pi * t / period);
    switch (w) {
    case Waveform::Sin:
        return s;
    case Waveform::Square:
        return s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
    case Waveform::Triangle:
        return 2.0 / std::numbers::pi * std::asin(std::clamp(s, -1.0, 1.0));
    }
    return s;
}

namespace {

double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standardNormal(std::mt19937_64& rng) {
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
    const double u2 = uniform53(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Unbiased draw from [0, bound) by rejection.
std::uint64_t boundedDraw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

} // namespace

Generated generateWithOutliers(const SyntheticSpec& spec) {
    spec.validate();
    const std::size_t n = spec.length;
    std::mt19937_64 rng(spec.seed);

    std::vector<double> y(n, 0.0);
    const double nd = static_cast<double>(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double td = static_cast<double>(t);
        double v = 0.0;
        for (std::size_t i = 0; i < spec.periods.size(); ++i) {
            v += spec.amplitudes[i] * waveValue(spec.waveform, td, spec.periods[i]);
        }
        v += spec.trend_amplitude * (1.0 - std::abs(2.0 * td / nd - 1.0));
        y[t] = v;
    }

    const double sigma = std::sqrt(spec.noise_variance);
    for (std::size_t t = 0; t < n; ++t) {
        y[t] += sigma * standardNormal(rng);
    }

    const auto count = static_cast<std::size_t>(std::floor(spec.outlier_ratio * nd));
    std::vector<std::size_t> slots(n);
    for (std::size_t i = 0; i < n; ++i) {
        slots[i] = i;
    }
    for (std::size_t i = 0; i < count; ++i) {
        const auto pick = i + static_cast<std::size_t>(boundedDraw(rng, n - i));
        std::swap(slots[i], slots[pick]);
    }
    Generated out;
    out.outlier_positions.assign(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(count));
    for (std::size_t pos : out.outlier_positions) {
        const bool up = (rng() >> 63) != 0;
        y[pos] += up ? spec.outlier_amplitude : -spec.outlier_amplitude;
    }
    out.series = TimeSeries(std::move(y), "synthetic-" + toString(spec.waveform));
    return out;
}

TimeSeries generate(const SyntheticSpec& spec) {
    return generateWithOutliers(spec).series;
}

double f1Score(double precision, double recall) {
    return precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
}

namespace {

struct Tally {
    std::size_t matched = 0;
    std::vector<std::pair<double, double>> pairs;
};

Tally matchGreedy(std::span<const double> detected, std::span<const double> truth, double tolerance) {
    std::vector<double> sorted(detected.begin(), detected.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<bool> used(truth.size(), false);
    Tally tally;
    for (double d : sorted) {
        std::size_t best = truth.size();
        double bestGap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < truth.size(); ++i) {
            const double gap = std::abs(d - truth[i]);
            if (!used[i] && gap <= tolerance * std::abs(truth[i]) && gap < bestGap) {
                best = i;
                bestGap = gap;
            }
        }
        if (best < truth.size()) {
            used[best] = true;
            ++tally.matched;
            tally.pairs.emplace_back(d, truth[best]);
        }
    }
    return tally;
}

} // namespace

Metrics score(std::span<const double> detected, std::span<const double> truth, double tolerance) {
    if (!(tolerance >= 0.0)) {
        throw InvalidInput("tolerance must be nonnegative");
    }
    Metrics m;
    m.tolerance = tolerance;
    m.detected = detected.size();
    m.truth = truth.size();
    if (detected.empty() && truth.empty()) {
        m.precision = m.recall = m.f1 = 1.0;
        return m;
    }
    auto tally = matchGreedy(detected, truth, tolerance);
    const auto hits = static_cast<double>(tally.matched);
    m.precision = detected.empty() ? 0.0 : hits / static_cast<double>(detected.size());
    m.recall = truth.empty() ? 0.0 : hits / static_cast<double>(truth.size());
    m.f1 = f1Score(m.precision, m.recall);
    m.matched = std::move(tally.pairs);
    return m;
}

BenchmarkResult runBenchmark(const SyntheticSpec& spec, std::size_t runs, const DetectorConfig& cfg,
                             double tolerance, std::string scenarioName) {
    if (runs < 1) {
        throw InvalidInput("benchmark needs at least one run");
    }
    spec.validate();
    cfg.validate();
    BenchmarkResult result;
    result.scenario = std::move(scenarioName);
    result.runs = runs;
    result.tolerance = tolerance;

    std::size_t hits = 0, detectedTotal = 0, truthTotal = 0;
    double seconds = 0.0;
    for (std::size_t seed = 0; seed < runs; ++seed) {
        SyntheticSpec run = spec;
        run.seed = seed;
        const auto series = generate(run);
        const auto start = std::chrono::steady_clock::now();
        const auto report = robustPeriod(series, cfg);
        seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::vector<double> found;
        for (const auto& p : report.periods) {
            found.push_back(p.length);
        }
        const auto m = score(found, spec.periods, tolerance);
        hits += m.matched.size();
        detectedTotal += found.size();
        truthTotal += spec.periods.size();
    }
    const auto h = static_cast<double>(hits);
    result.precision = detectedTotal > 0 ? h / static_cast<double>(detectedTotal) : (truthTotal == 0 ? 1.0 : 0.0);
    result.recall = truthTotal > 0 ? h / static_cast<double>(truthTotal) : 1.0;
    result.f1 = f1Score(result.precision, result.recall);
    result.mean_seconds_per_series = seconds / static_cast<double>(runs);
    return result;
}

SyntheticSpec scenario(const std::string& name) {
    SyntheticSpec s;
    if (name == "sin-mild") {
        return s;
    }
    if (name == "sin-severe") {
        s.noise_variance = 1.0;
        s.outlier_ratio = 0.1;
        return s;
    }
    if (name == "sin-extreme") {
        s.noise_variance = 2.0;
        s.outlier_ratio = 0.2;
        return s;
    }
    if (name == "square-mild") {
        s.waveform = Waveform::Square;
        return s;
    }
    if (name == "triangle-mild") {
        s.waveform = Waveform::Triangle;
        return s;
    }
    if (name == "single-mild" || name == "single-severe") {
        s.periods = {100.0};
        s.amplitudes = {1.0};
        if (name == "single-severe") {
            s.noise_variance = 1.0;
            s.outlier_ratio = 0.1;
        }
        return s;
    }
    throw InvalidInput("unknown scenario '" + name + "'");
}

std::vector<std::string> scenarioNames() {
    return {"sin-mild", "sin-severe", "sin-extreme", "square-mild",
            "triangle-mild", "single-mild", "single-severe"};
}

} // namespace robustperiod::synth

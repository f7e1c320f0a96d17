#include <catch2/catch_amalgamated.hpp>

#include "robustperiod/synth.hpp"

#include <algorithm>
#include <set>

using namespace robustperiod;
using namespace robustperiod::synth;
using Catch::Approx;

namespace {

SyntheticSpec clean(std::vector<double> periods) {
    SyntheticSpec s;
    s.amplitudes.assign(periods.size(), 1.0);
    s.periods = std::move(periods);
    s.trend_amplitude = 0.0;
    s.noise_variance = 0.0;
    s.outlier_ratio = 0.0;
    return s;
}

} // namespace

TEST_CASE("generation is deterministic per seed", "[synth]") {
    SyntheticSpec spec;
    spec.seed = 42;
    const auto a = generate(spec);
    const auto b = generate(spec);
    CHECK(a.values == b.values);
    spec.seed = 43;
    CHECK(generate(spec).values != a.values);
    CHECK(a.size() == 1000);
}

TEST_CASE("noise-free sinusoid values", "[synth]") {
    auto spec = clean({20.0});
    spec.length = 100;
    const auto s = generate(spec);
    CHECK(s.values[0] == Approx(0.0).margin(1e-12));
    CHECK(s.values[5] == Approx(1.0));
    CHECK(s.values[15] == Approx(-1.0));
}

TEST_CASE("triangle trend peaks mid-series", "[synth]") {
    auto spec = clean({4.0});
    spec.amplitudes = {0.0};
    spec.trend_amplitude = 10.0;
    spec.length = 40;
    const auto s = generate(spec);
    CHECK(s.values[0] == Approx(0.0).margin(1e-12));
    CHECK(s.values[20] == Approx(10.0));
    CHECK(s.values[10] == Approx(5.0));
}

TEST_CASE("waveforms", "[synth]") {
    CHECK(waveValue(Waveform::Square, 2.0, 20.0) == 1.0);
    CHECK(waveValue(Waveform::Square, 12.0, 20.0) == -1.0);
    CHECK(waveValue(Waveform::Triangle, 5.0, 20.0) == Approx(1.0));
    CHECK(waveValue(Waveform::Triangle, 2.5, 20.0) == Approx(0.5));
    CHECK(parseWaveform("square") == Waveform::Square);
    CHECK(toString(Waveform::Triangle) == "triangle");
    CHECK_THROWS_AS(parseWaveform("saw"), InvalidInput);
}

TEST_CASE("outliers hit distinct positions with the configured amplitude", "[synth]") {
    auto spec = clean({20.0});
    spec.outlier_ratio = 0.01;
    spec.seed = 9;
    const auto g = generateWithOutliers(spec);
    REQUIRE(g.outlier_positions.size() == 10);
    const std::set<std::size_t> unique(g.outlier_positions.begin(), g.outlier_positions.end());
    CHECK(unique.size() == 10);
    const auto base = generate(clean({20.0}));
    for (std::size_t pos : g.outlier_positions) {
        CHECK(std::abs(g.series.values[pos] - base.values[pos]) == Approx(5.0));
    }
}

TEST_CASE("invalid specifications are rejected", "[synth]") {
    auto spec = clean({20.0});
    spec.length = 10;
    CHECK_THROWS_AS(generate(spec), InvalidInput);
    spec = clean({20.0});
    spec.amplitudes = {1.0, 2.0};
    CHECK_THROWS_AS(generate(spec), InvalidInput);
    spec = clean({20.0});
    spec.noise_variance = -1.0;
    CHECK_THROWS_AS(generate(spec), InvalidInput);
    spec = clean({20.0});
    spec.outlier_ratio = 1.0;
    CHECK_THROWS_AS(generate(spec), InvalidInput);
}

TEST_CASE("scoring matches within relative tolerance", "[synth][score]") {
    const std::vector<double> truth{20, 50, 100};
    const auto exact = score(std::vector<double>{20, 50, 100}, truth, 0.05);
    CHECK(exact.f1 == 1.0);

    const auto partial = score(std::vector<double>{21, 50, 130}, truth, 0.05);
    CHECK(partial.precision == Approx(2.0 / 3.0));
    CHECK(partial.recall == Approx(2.0 / 3.0));

    const auto none = score(std::vector<double>{}, truth, 0.05);
    CHECK(none.precision == 0.0);
    CHECK(none.recall == 0.0);
    CHECK(none.f1 == 0.0);

    // One detection cannot claim two truths.
    const auto dup = score(std::vector<double>{50, 50.5}, std::vector<double>{50}, 0.05);
    CHECK(dup.precision == 0.5);
    CHECK(dup.recall == 1.0);

    CHECK(f1Score(0.5, 1.0) == Approx(2.0 / 3.0));
    CHECK_THROWS_AS(score(truth, truth, -0.1), InvalidInput);
}

TEST_CASE("benchmark reports metrics and timing", "[synth][bench]") {
    const auto result = runBenchmark(scenario("sin-mild"), 3, DetectorConfig{}, 0.05, "sin-mild");
    CHECK(result.runs == 3);
    CHECK(result.scenario == "sin-mild");
    CHECK(result.f1 >= 0.0);
    CHECK(result.f1 <= 1.0);
    CHECK(result.mean_seconds_per_series > 0.0);
    CHECK_THROWS_AS(runBenchmark(scenario("sin-mild"), 0, DetectorConfig{}, 0.05), InvalidInput);
}

TEST_CASE("named scenarios", "[synth]") {
    for (const auto& name : scenarioNames()) {
        CHECK_NOTHROW(scenario(name).validate());
    }
    CHECK(scenario("sin-severe").noise_variance == 1.0);
    CHECK(scenario("sin-severe").outlier_ratio == 0.1);
    CHECK(scenario("single-mild").periods.size() == 1);
    CHECK_THROWS_AS(scenario("nope"), InvalidInput);
}

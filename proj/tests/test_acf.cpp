#include <catch2/catch_amalgamated.hpp>

#include "robustperiod/acf.hpp"
#include "robustperiod/spectral.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <random>

using namespace robustperiod;
using namespace robustperiod::acf;
using Catch::Approx;

namespace {

std::vector<double> halfOf(const std::vector<double>& full) {
    return {full.begin(), full.begin() + static_cast<std::ptrdiff_t>(full.size() / 2)};
}

AcfSeries vanillaAcf(const std::vector<double>& w) {
    const auto x = spectral::zeroPad(w).x;
    const auto full = fullRangePeriodogram(halfOf(spectral::vanillaPeriodogram(x)), x);
    return huberAcf(full, w.size());
}

AcfSeries manual(std::vector<double> values) {
    AcfSeries a;
    a.usable_lags = values.size() - 1;
    a.values = std::move(values);
    return a;
}

} // namespace

TEST_CASE("full-range periodogram mirrors the half spectrum", "[acf][periodogram]") {
    const auto x = spectral::zeroPad(testing::gaussian(50, 4)).x;
    const auto vanilla = spectral::vanillaPeriodogram(x);
    const auto full = fullRangePeriodogram(halfOf(vanilla), x);
    REQUIRE(full.size() == 100);
    for (std::size_t k = 0; k < 100; ++k) {
        CHECK(full[k] == Approx(vanilla[k]).margin(1e-10));
    }
}

TEST_CASE("full-range periodogram Nyquist bin", "[acf][periodogram]") {
    const std::vector<double> x{1, -1, 1, -1, 0, 0, 0, 0};
    const std::vector<double> half{0, 0, 0, 0};
    const auto full = fullRangePeriodogram(half, x);
    CHECK(full[4] == Approx(2.0));
    CHECK(fullRangePeriodogram(half, std::vector<double>(8, 0.0)) == std::vector<double>(8, 0.0));
    CHECK_THROWS_AS(fullRangePeriodogram(half, std::vector<double>(7, 0.0)), InvalidInput);
}

TEST_CASE("ACF starts at one and is degenerate for zero power", "[acf]") {
    const auto a = vanillaAcf(testing::gaussian(120, 2));
    CHECK(a.values[0] == 1.0);
    CHECK(a.usable_lags == 60);
    CHECK_FALSE(a.degenerate);
    const auto z = huberAcf(std::vector<double>(16, 0.0), 8);
    CHECK(z.degenerate);
}

TEST_CASE("ACF equals the direct lagged sum", "[acf][property]") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 64 + rng() % 200;
        const auto w = testing::gaussian(n, rng());
        const auto x = spectral::zeroPad(w).x;
        const auto a = vanillaAcf(w);
        const auto direct = oracle::directAutocorrelation(x, n);
        const double p0 = direct[0];
        for (std::size_t t = 0; t < n; ++t) {
            CHECK(std::abs(a.autocovariance[t] - direct[t]) <= 1e-8 * p0);
            const double expected = static_cast<double>(n) * direct[t] / (static_cast<double>(n - t) * p0);
            CHECK(std::abs(a.values[t] - expected) <= 1e-8);
        }
    }
}

TEST_CASE("ACF of a sinusoid peaks at multiples of the period", "[acf]") {
    const auto a = vanillaAcf(testing::sine(200, 20.0));
    const auto peaks = findPeaks(a, 0.5, 2);
    REQUIRE(peaks.size() >= 4);
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        CHECK(std::abs(static_cast<double>(peaks[i]) - 20.0 * static_cast<double>(i + 1)) <= 1.0);
    }
}

TEST_CASE("ACF ignores amplitude scaling", "[acf][property]") {
    const auto w = testing::add(testing::sine(150, 15.0), testing::gaussian(150, 5, 0.4));
    auto scaled = w;
    for (auto& v : scaled) {
        v *= 37.0;
    }
    const auto a = vanillaAcf(w);
    const auto b = vanillaAcf(scaled);
    CHECK(testing::maxAbsDiff(a.values, b.values) < 1e-10);
}

TEST_CASE("peak finding", "[acf][peaks]") {
    const auto a = manual({1.0, 0.2, 0.8, 0.1, 0.6, 0.7, 0.0, 0.9, 0.0});
    CHECK(findPeaks(a, 0.5, 1) == std::vector<std::size_t>{2, 5, 7});
    CHECK(findPeaks(a, 0.75, 1) == std::vector<std::size_t>{2, 7});
    CHECK(findPeaks(a, 0.5, 3) == std::vector<std::size_t>{2, 7});

    // Plateau: the first sample of the flat top is the peak.
    const auto plateau = manual({1.0, 0.0, 0.7, 0.7, 0.0, 0.0});
    CHECK(findPeaks(plateau, 0.5, 1) == std::vector<std::size_t>{2});

    // Equal heights within the minimum distance keep the smaller lag.
    const auto tie = manual({1.0, 0.0, 0.8, 0.0, 0.8, 0.0});
    CHECK(findPeaks(tie, 0.5, 3) == std::vector<std::size_t>{2});

    auto limited = manual({1.0, 0.0, 0.8, 0.0, 0.8, 0.0, 0.9, 0.0});
    limited.usable_lags = 4;
    CHECK(findPeaks(limited, 0.5, 1) == std::vector<std::size_t>{2, 4});
}

TEST_CASE("validation ranges", "[acf][validation]") {
    const auto r = ValidationRange::of(10, 1000);
    CHECK(r.lo == Approx(94.4545).epsilon(1e-4));
    CHECK(r.hi == Approx(106.5556).epsilon(1e-4));
    const auto edge = ValidationRange::of(1, 100);
    CHECK(edge.lo == Approx(74.0));
    CHECK(edge.hi == Approx(101.0));
    CHECK_THROWS_AS(ValidationRange::of(0, 100), InvalidInput);
}

TEST_CASE("period from peaks", "[acf][validation]") {
    const std::vector<std::size_t> peaks{100, 200, 300};
    const auto est = periodFromPeaks(peaks, 10, 1000);
    REQUIRE(est.has_value());
    CHECK(est->period == 100.0);
    CHECK_FALSE(periodFromPeaks(peaks, 5, 1000).has_value());
    CHECK_FALSE(periodFromPeaks(std::vector<std::size_t>{100}, 10, 1000).has_value());

    const std::vector<std::size_t> irregular{20, 41, 60, 95};
    const auto med = periodFromPeaks(irregular, 50, 1000);
    REQUIRE(med.has_value());
    CHECK(med->median_distance == 21.0);

    const std::vector<std::size_t> wide{10, 90};
    CHECK(periodFromPeaks(wide, 1, 100).has_value());
}

TEST_CASE("noisy periodic signal with spikes still shows its period", "[acf][scenario]") {
    // Period 24 under noise with a handful of clipped-size spikes.
    auto w = testing::add(testing::sine(480, 24.0, 2.0), testing::gaussian(480, 77, 0.8));
    for (std::size_t t : {37u, 130u, 131u, 290u, 401u}) {
        w[t] += 6.0;
    }
    const auto x = spectral::zeroPad(w).x;
    const auto hp = spectral::huberPeriodogram(x, 4, spectral::AdmmConfig{});
    const auto a = huberAcf(fullRangePeriodogram(hp.power, x), w.size());
    const auto peaks = findPeaks(a, 0.5, 2);
    REQUIRE(peaks.size() >= 2);
    const auto est = periodFromPeaks(peaks, 40, 960);
    REQUIRE(est.has_value());
    CHECK(std::abs(est->period - 24.0) <= 1.0);
}

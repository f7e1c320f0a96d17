#include <catch2/catch_amalgamated.hpp>

#include "robustperiod/preprocess.hpp"
#include "robustperiod/stats.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"


#include <algorithm>
#include <cmath>

using namespace robustperiod;
using namespace robustperiod::preprocess;
using Catch::Approx;

namespace {

double meanFirstDifference(const std::vector<double>& v) {
    return (v.back() - v.front()) / static_cast<double>(v.size() - 1);
}

} // namespace

TEST_CASE("standardize gives zero mean and unit sample deviation", "[preprocess]") {
    const auto out = standardize(TimeSeries({1.0, 2.0, 3.0}));
    REQUIRE_FALSE(out.degenerate);
    CHECK(out.mean == Approx(2.0));
    CHECK(out.std == Approx(1.0)); // sample deviation of {1,2,3}
    CHECK(out.series.values[0] == Approx(-1.0));
    CHECK(out.series.values[2] == Approx(1.0));
}

TEST_CASE("standardize flags constant input", "[preprocess]") {
    const auto out = standardize(TimeSeries({5.0, 5.0, 5.0}));
    CHECK(out.degenerate);
    CHECK(out.std == 0.0);
    CHECK(out.series.values == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("standardize is idempotent", "[preprocess]") {
    const auto once = standardize(TimeSeries(testing::gaussian(100, 3, 4.0)));
    const auto twice = standardize(once.series);
    CHECK(testing::maxAbsDiff(once.series.values, twice.series.values) < 1e-12);
}

TEST_CASE("standardize rejects empty and non-finite input", "[preprocess]") {
    CHECK_THROWS_AS(standardize(TimeSeries(std::vector<double>{})), InvalidInput);
    CHECK_THROWS_AS(standardize(TimeSeries({1.0, NAN})), InvalidInput);
}

TEST_CASE("hp trend with zero weight is the identity", "[preprocess][hp]") {
    const auto y = testing::gaussian(50, 1);
    CHECK(hpTrend(TimeSeries(y), 0.0).values == y);
}

TEST_CASE("hp trend reproduces a straight line", "[preprocess][hp]") {
    std::vector<double> y(80);
    for (std::size_t t = 0; t < y.size(); ++t) {
        y[t] = 3.0 - 0.25 * static_cast<double>(t);
    }
    for (double lambda : {1.0, 1e3, 1e6}) {
        CHECK(testing::maxAbsDiff(hpTrend(TimeSeries(y), lambda).values, y) < 1e-8);
    }
}

TEST_CASE("banded hp solve matches the dense solve", "[preprocess][hp]") {
    const auto y = testing::gaussian(200, 11);
    for (double lambda : {1.0, 50.0, 1e4}) {
        const auto banded = hpTrend(TimeSeries(y), lambda).values;
        CHECK(testing::maxAbsDiff(banded, oracle::denseHp(y, lambda)) < 1e-8);
    }
}

TEST_CASE("hp trend is linear in its input", "[preprocess][hp]") {
    const auto y1 = testing::gaussian(120, 5);
    const auto y2 = testing::gaussian(120, 6);
    const double a = 2.5, b = -0.75;
    std::vector<double> mix(y1.size());
    for (std::size_t i = 0; i < mix.size(); ++i) {
        mix[i] = a * y1[i] + b * y2[i];
    }
    const auto t1 = hpTrend(TimeSeries(y1), 100.0).values;
    const auto t2 = hpTrend(TimeSeries(y2), 100.0).values;
    const auto tm = hpTrend(TimeSeries(mix), 100.0).values;
    for (std::size_t i = 0; i < mix.size(); ++i) {
        CHECK(std::abs(tm[i] - (a * t1[i] + b * t2[i])) < 1e-10);
    }
}

TEST_CASE("hp trend approaches the least-squares line for huge weights", "[preprocess][hp]") {
    const std::size_t n = 100;
    auto y = testing::gaussian(n, 9, 0.3);
    for (std::size_t t = 0; t < n; ++t) {
        y[t] += 1.0 + 0.05 * static_cast<double>(t);
    }
    // OLS line
    double st = 0, sy = 0, stt = 0, sty = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const double td = static_cast<double>(t);
        st += td;
        sy += y[t];
        stt += td * td;
        sty += td * y[t];
    }
    const double nd = static_cast<double>(n);
    const double slope = (nd * sty - st * sy) / (nd * stt - st * st);
    const double icept = (sy - slope * st) / nd;
    const auto trend = hpTrend(TimeSeries(y), 1e12).values;
    for (std::size_t t = 0; t < n; ++t) {
        CHECK(std::abs(trend[t] - (icept + slope * static_cast<double>(t))) < 1e-3);
    }
}

TEST_CASE("hp trend needs three samples", "[preprocess][hp]") {
    CHECK_THROWS_AS(hpTrend(TimeSeries({1.0, 2.0}), 1.0), InvalidInput);
    CHECK_THROWS_AS(hpTrend(TimeSeries({1.0, 2.0, 3.0}), -1.0), InvalidInput);
}

TEST_CASE("clipping uses median and raw MAD", "[preprocess][clip]") {
    const auto out = clipExtremes(TimeSeries({1.0, 2.0, 3.0, 4.0, 100.0}), 3.0);
    REQUIRE_FALSE(out.degenerate);
    CHECK(out.series.values == std::vector<double>{-2.0, -1.0, 0.0, 1.0, 3.0});

    const auto unchanged = clipExtremes(TimeSeries({-1.0, 0.0, 1.0}), 3.0);
    CHECK(unchanged.series.values == std::vector<double>{-1.0, 0.0, 1.0});
}

TEST_CASE("clipping a constant series is degenerate", "[preprocess][clip]") {
    const auto out = clipExtremes(TimeSeries({2.0, 2.0, 2.0, 2.0}), 3.0);
    CHECK(out.degenerate);
    CHECK(out.series.values == std::vector<double>(4, 0.0));
}

TEST_CASE("clipping ignores a constant offset", "[preprocess][clip]") {
    const auto y = testing::gaussian(64, 21);
    auto shifted = y;
    for (auto& v : shifted) {
        v += 17.0;
    }
    const auto a = clipExtremes(TimeSeries(y), 2.0).series.values;
    const auto b = clipExtremes(TimeSeries(shifted), 2.0).series.values;
    CHECK(testing::maxAbsDiff(a, b) < 1e-12);
}

TEST_CASE("preprocess removes a steep ramp", "[preprocess]") {
    const std::size_t n = 500;
    const auto control = testing::sine(n, 25.0);
    auto ramped = control;
    for (std::size_t t = 0; t < n; ++t) {
        ramped[t] += 0.2 * static_cast<double>(t);
    }
    const PreprocessConfig cfg;
    const auto withRamp = preprocess::preprocess(TimeSeries(ramped), cfg);
    const auto clean = preprocess::preprocess(TimeSeries(control), cfg);
    CHECK(std::abs(meanFirstDifference(withRamp.series.values)) < 0.01);
    CHECK(std::abs(meanFirstDifference(withRamp.series.values) -
                   meanFirstDifference(clean.series.values)) < 0.01);
}

TEST_CASE("preprocess keeps output within the clip bound", "[preprocess]") {
    auto y = testing::add(testing::sine(400, 40.0), testing::gaussian(400, 2, 0.1));
    for (std::size_t t = 0; t < y.size(); t += 100) {
        y[t] += 5.0;
    }
    PreprocessConfig cfg;
    cfg.clip_c = 3.0;
    const auto out = preprocess::preprocess(TimeSeries(y), cfg);
    for (double v : out.series.values) {
        CHECK(std::abs(v) <= 3.0);
    }
}

TEST_CASE("preprocess of zeros is zeros and deterministic otherwise", "[preprocess]") {
    const auto zero = preprocess::preprocess(TimeSeries(std::vector<double>(32, 0.0)), {});
    CHECK(zero.degenerate);
    CHECK(zero.series.values == std::vector<double>(32, 0.0));

    const auto y = testing::gaussian(256, 8);
    const auto a = preprocess::preprocess(TimeSeries(y), {});
    const auto b = preprocess::preprocess(TimeSeries(y), {});
    CHECK(a.series.values == b.series.values);
}

TEST_CASE("preprocess config validation", "[preprocess]") {
    PreprocessConfig cfg;
    cfg.clip_c = 0.0;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
    cfg = {};
    cfg.hp_lambda = -1.0;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
}

TEST_CASE("median and MAD helpers", "[stats]") {
    const std::vector<double> odd{5.0, 1.0, 3.0};
    const std::vector<double> even{4.0, 1.0, 3.0, 2.0};
    CHECK(stats::median(odd) == 3.0);
    CHECK(stats::median(even) == 2.5);
    CHECK(stats::mad(std::vector<double>{1.0, 2.0, 3.0, 4.0, 100.0}) == 1.0);
}

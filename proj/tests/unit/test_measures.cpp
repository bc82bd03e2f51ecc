#include <gtest/gtest.h>

#include <cmath>

#include "hurstkit/errors.hpp"
#include "hurstkit/io.hpp"
#include "hurstkit/measures.hpp"

using namespace hurstkit;

namespace {

std::vector<PriceBar> closes(std::initializer_list<double> c, std::int64_t spacing = 7200) {
    std::vector<PriceBar> bars;
    std::int64_t t = 1573689600;
    for (double v : c) {
        bars.emplace_back(from_epoch(t), v, v, v, v, 1.0);
        t += spacing;
    }
    return bars;
}

std::vector<PriceBar> fixture() {
    return parse_bars(io::read_file(HURSTKIT_TEST_DATA "/btc_fixture.csv"), BarFormat::Csv);
}

void expect_matches_golden(const Series& s, const std::string& name) {
    const auto golden = parse_series_csv(io::read_file(std::string(HURSTKIT_TEST_DATA "/golden/") + name));
    ASSERT_EQ(s.size(), golden.size()) << name;
    EXPECT_EQ(s.start(), golden.start()) << name;
    EXPECT_EQ(s.step(), golden.step()) << name;
    for (std::size_t i = 0; i < s.size(); ++i) {
        ASSERT_NEAR(s[i], golden[i], 1e-12) << name << " at " << i;
    }
}

}  // namespace

TEST(Measures, NamesRoundTrip) {
    for (auto k : kAllMeasures) EXPECT_EQ(parse_measure_kind(to_string(k)), k);
    EXPECT_THROW(parse_measure_kind("price"), std::invalid_argument);
}

TEST(LogReturns, Basics) {
    const auto flat = log_returns(closes({100, 100}));
    ASSERT_EQ(flat.size(), 1u);
    EXPECT_EQ(flat[0], 0.0);
    const auto e = log_returns(closes({100, 100 * std::exp(1.0)}));
    EXPECT_NEAR(e[0], 1.0, 1e-15);
    const auto bars = closes({1, 2, 4});
    const auto r = log_returns(bars);
    EXPECT_EQ(r.start(), bars[1].timestamp());
    EXPECT_EQ(r.step(), kTwoHours);
}

TEST(LogReturns, Errors) {
    EXPECT_THROW(log_returns(closes({100})), DataError);
    auto bars = closes({1, 2, 3});
    bars.emplace_back(from_epoch(1573689600 + 5 * 7200), 3, 3, 3, 3, 1);
    EXPECT_THROW(log_returns(bars), DataError);
}

TEST(LogReturns, ScaleInvariant) {
    const auto bars = fixture();
    std::vector<PriceBar> scaled;
    for (const auto& b : bars) {
        scaled.emplace_back(b.timestamp(), 8 * b.open(), 8 * b.high(), 8 * b.low(), 8 * b.close(), b.volume());
    }
    const auto a = log_returns(bars);
    const auto b = log_returns(scaled);
    for (std::size_t i = 0; i < a.size(); ++i) ASSERT_NEAR(a[i], b[i], 1e-14);
}

TEST(MaxMinVol, Basics) {
    const auto t = from_epoch(1573689600);
    const auto flat = maxmin_vol(std::vector{PriceBar(t, 5, 5, 5, 5, 0)});
    EXPECT_EQ(flat[0], 0.0);
    EXPECT_EQ(flat.step(), kTwoHours);
    const auto two = maxmin_vol(std::vector{PriceBar(t, 2, 4, 2, 3, 0)});
    EXPECT_NEAR(two[0], 0.693147, 1e-6);
}

TEST(AbsReturns, Basics) {
    const Series r({-0.01, 0.02}, from_epoch(0), kTwoHours);
    const auto a = abs_returns(r);
    EXPECT_DOUBLE_EQ(a[0], 0.01);
    EXPECT_DOUBLE_EQ(a[1], 0.02);
    const Series z({0.0, 0.0}, from_epoch(0), kTwoHours);
    const auto az = abs_returns(z);
    for (double v : az.values()) EXPECT_EQ(v, 0.0);
}

TEST(Measures, NonNegativeAndSignInvariant) {
    const auto bars = fixture();
    for (double v : maxmin_vol(bars).values()) EXPECT_GE(v, 0.0);
    const auto r = log_returns(bars);
    std::vector<double> neg;
    for (double v : r.values()) neg.push_back(-v);
    const auto a = abs_returns(r);
    const auto b = abs_returns(r.with_values(neg));
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_GE(a[i], 0.0);
        ASSERT_EQ(a[i], b[i]);
    }
}

TEST(Measures, FixtureMatchesGoldenFiles) {
    const auto bars = fixture();
    expect_matches_golden(log_returns(bars), "btc_log-return.csv");
    expect_matches_golden(maxmin_vol(bars), "btc_maxmin-vol.csv");
    expect_matches_golden(abs_returns(log_returns(bars)), "btc_abs-return.csv");
    EXPECT_EQ(compute_measure(MeasureKind::MaxMinVol, bars).size(), 2496u);
    EXPECT_EQ(compute_measure(MeasureKind::LogReturn, bars).size(), 2495u);
    EXPECT_EQ(compute_measure(MeasureKind::AbsReturn, bars).size(), 2495u);
}

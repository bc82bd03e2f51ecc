#include <gtest/gtest.h>

#include <filesystem>

#include "hurstkit/errors.hpp"
#include "hurstkit/formats.hpp"
#include "hurstkit/io.hpp"
#include "hurstkit/report.hpp"

using namespace hurstkit;

namespace {

constexpr std::int64_t kB1 = 1583193600;

RollingResult sample_result() {
    RollingResult r;
    r.source = "BTC/log-return";
    for (int k = 0; k < 4; ++k) {
        RollingEntry e;
        e.window_end = from_epoch(kB1 + (k - 2) * 7200);
        if (k != 2) {
            HurstEstimate est;
            est.beta = 0.0 - 0.1 * k;
            est.hurst = (1.0 + est.beta) / 2.0;
            est.r_squared = 0.9;
            e.estimate = est;
        } else {
            e.failure = "zero dispersion";
        }
        r.entries.push_back(e);
    }
    return r;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("hurstkit_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(EstimateJson, Fields) {
    HurstEstimate e;
    e.beta = 0.2;
    e.hurst = 0.6;
    e.scale_min = 2;
    e.scale_max = 28;
    e.scales_count = 9;
    const auto j = to_json(e);
    EXPECT_EQ(j.at("method"), "awc-mad");
    EXPECT_EQ(j.at("signal_class"), "fGn");
    EXPECT_EQ(j.at("scales_used").size(), 2u);
    EXPECT_EQ(j.at("scales_count"), 9);
    EXPECT_EQ(j.at("hurst"), 0.6);
}

TEST(RollingCsv, FormatAndRoundTrip) {
    const auto r = sample_result();
    const auto text = rolling_csv(r);
    const auto rows = io::lines(text);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0], kRollingCsvHeader);
    EXPECT_EQ(rows[1], std::to_string(kB1 - 14400) + ",0,0.5,fGn,0.9");
    EXPECT_EQ(rows[3], std::to_string(kB1) + ",,,failed,");
    const auto parsed = parse_rolling_csv(text);
    ASSERT_EQ(parsed.size(), 4u);
    EXPECT_FALSE(parsed[2].hurst.has_value());
    EXPECT_EQ(parsed[3].hurst, r.entries[3].estimate->hurst);
    EXPECT_THROW(parse_rolling_csv("window_end,hurst\n"), DataError);
    EXPECT_THROW(parse_rolling_csv(std::string(kRollingCsvHeader) + "\n5,1,x,fGn,1\n"), DataError);
}

TEST(SegmentJson, RoundTripAndRow) {
    const auto table = segment_means(sample_result(), covid_breakpoints());
    EXPECT_EQ(segment_row(table), "0.4333 & 0.4750 & 0.3500 & ");
    const auto j = to_json(table, {"BTC", "log-return", "BTC_log-return.rolling.csv"});
    EXPECT_EQ(j.at("table_row"), segment_row(table));
    EXPECT_EQ(j.at("segments").size(), 4u);
    EXPECT_TRUE(j.at("segments")[3].at("mean_hurst").is_null());
    EXPECT_EQ(j.at("excluded_windows"), 1);
    const auto back = segment_table_from_json(j);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(back.segments[i].label, table.segments[i].label);
        EXPECT_EQ(back.segments[i].mean_hurst, table.segments[i].mean_hurst);
        EXPECT_EQ(back.segments[i].count, table.segments[i].count);
        EXPECT_EQ(back.segments[i].from, table.segments[i].from);
    }
    EXPECT_EQ(segment_labels_from_json(j).coin, "BTC");
    auto broken = j;
    broken["segments"].erase(0);
    EXPECT_THROW(segment_table_from_json(broken), DataError);
    EXPECT_THROW(segment_labels_from_json(nlohmann::json::object()), DataError);
}

TEST(SegmentRow, FourDecimalCells) {
    SegmentTable t;
    const std::array<double, 4> v{0.4747, 0.46566, 0.55294, 0.4664};
    for (std::size_t i = 0; i < 4; ++i) t.segments[i].mean_hurst = v[i];
    EXPECT_EQ(segment_row(t), "0.4747 & 0.4657 & 0.5529 & 0.4664");
}

TEST(BenchCsv, Columns) {
    std::vector<BenchRow> rows(2);
    rows[0].theoretical_h = rows[1].theoretical_h = 0.2;
    rows[0].kind = ProcessKind::Fbm;
    rows[0].mean = 0.26491;
    rows[0].window_std = 0.0458;
    rows[1].mean = 0.2602;
    rows[1].window_std = 0.0117;
    EXPECT_EQ(bench_table1_csv(rows), std::string(kBenchCsvHeader) + "\n0.2,0.2649,0.0458,0.2602,0.0117\n");
}

TEST(Report, MergesAndOrders) {
    const auto dir = scratch("report");
    const auto r = sample_result();
    const auto table = segment_means(r, covid_breakpoints());
    for (const auto& [coin, measure] : std::vector<std::pair<std::string, std::string>>{
             {"ETH", "abs-return"}, {"BTC", "abs-return"}, {"BTC", "log-return"}}) {
        const auto csv = coin + "_" + measure + ".rolling.csv";
        io::write_file_atomic(dir / csv, rolling_csv(r));
        io::write_file_atomic(dir / (coin + "_" + measure + ".segments.json"),
                              to_json(table, {coin, measure, csv}).dump());
    }
    const auto bundle = build_report(load_report_inputs(dir));
    EXPECT_EQ(bundle.series_count, 3u);
    const auto means = io::lines(bundle.segment_means_csv);
    ASSERT_EQ(means.size(), 4u);
    EXPECT_EQ(means[0], "measure,coin,all,before,during,after");
    EXPECT_EQ(means[1], "log-return,BTC,0.4333,0.4750,0.3500,");
    EXPECT_EQ(means[2].substr(0, 14), "abs-return,BTC");
    EXPECT_EQ(means[3].substr(0, 14), "abs-return,ETH");
    const auto longform = io::lines(bundle.hurst_long_csv);
    ASSERT_EQ(longform.size(), 1u + 3u * 4u);
    EXPECT_EQ(longform[1], "BTC,log-return," + std::to_string(kB1 - 14400) + ",0.5");
    EXPECT_EQ(longform[3], "BTC,log-return," + std::to_string(kB1) + ",");

    auto inputs = load_report_inputs(dir);
    inputs.push_back(inputs.front());
    EXPECT_THROW(build_report(inputs), DataError);
    std::filesystem::remove_all(dir);
}

TEST(Report, SchemaErrors) {
    const auto dir = scratch("report_bad");
    EXPECT_THROW(load_report_inputs(dir), DataError);
    io::write_file_atomic(dir / "X_log-return.segments.json", R"({"coin":"X"})");
    EXPECT_THROW(load_report_inputs(dir), DataError);
    std::filesystem::remove_all(dir);
}

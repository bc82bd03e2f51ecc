#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurstkit/estimators.hpp"
#include "hurstkit/series.hpp"
#include "hurstkit/synth.hpp"

namespace hurstkit {

struct RollingConfig {
    std::size_t window = 360;
    std::size_t step = 1;
    EstimatorConfig estimator{};
    unsigned workers = 1;  // 0 = hardware concurrency
};

struct RollingEntry {
    Instant window_end;  // timestamp of the window's last sample
    std::optional<HurstEstimate> estimate;
    std::string failure;  // reason when estimate is empty
};

struct RollingResult {
    std::vector<RollingEntry> entries;
    RollingConfig config;
    std::string source;

    std::size_t failed_count() const;
};

// floor((n - window) / step) + 1, or 0 when n < window.
std::size_t rolling_window_count(std::size_t n, std::size_t window, std::size_t step);

// Window k covers samples [k * step, k * step + window). Windows whose
// estimate hits degenerate input are kept as failed entries with a reason.
// Output does not depend on the worker count.
RollingResult rolling_hurst(const Series& s, const RollingConfig& cfg);

struct Breakpoints {
    Instant first;
    Instant second;
};

// 2020-03-03 00:00 UTC and 2020-03-18 00:00 UTC.
Breakpoints covid_breakpoints();

struct SegmentStat {
    std::string label;
    std::optional<Instant> from;  // inclusive
    std::optional<Instant> to;    // exclusive
    std::optional<double> mean_hurst;
    std::size_t count = 0;
};

// Segments in order: all, before, during, after.
struct SegmentTable {
    std::array<SegmentStat, 4> segments;
    Breakpoints breakpoints;
    std::size_t excluded = 0;  // failed windows left out of every mean
    std::string source;

    const SegmentStat& all() const { return segments[0]; }
    const SegmentStat& before() const { return segments[1]; }
    const SegmentStat& during() const { return segments[2]; }
    const SegmentStat& after() const { return segments[3]; }
};

// before: end < b1; during: b1 <= end < b2; after: end >= b2.
// Throws std::invalid_argument unless b1 < b2.
SegmentTable segment_means(const RollingResult& r, Breakpoints breakpoints);

struct BenchConfig {
    std::vector<double> hurst{0.2, 0.4, 0.6, 0.8};
    std::size_t n = 1435;
    std::size_t window = 500;
    std::size_t seeds = 20;
    std::uint64_t seed_base = 1;
    EstimatorConfig estimator{};
    unsigned workers = 1;
};

struct BenchRow {
    double theoretical_h = 0.0;
    ProcessKind kind = ProcessKind::Fgn;
    double mean = 0.0;        // over every window of every seed
    double window_std = 0.0;  // per-series std over its windows, averaged over seeds
    std::size_t windows = 0;
    std::size_t failed = 0;
    std::vector<double> seed_means;
    std::vector<double> seed_stds;
};

// For each H and each kind (fBm, fGn): generate one series per seed, run the
// rolling estimator and summarise the window estimates. Rows are ordered by H,
// fBm before fGn.
std::vector<BenchRow> bench_table1(const BenchConfig& cfg);

}  // namespace hurstkit

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurstkit/time.hpp"

namespace hurstkit {

// One OHLCV candle. Every constructed bar satisfies
// 0 < low <= min(open, close) <= max(open, close) <= high and volume >= 0.
class PriceBar {
public:
    // Throws std::invalid_argument when an invariant is violated.
    PriceBar(Instant timestamp, double open, double high, double low, double close, double volume);

    Instant timestamp() const noexcept { return timestamp_; }
    double open() const noexcept { return open_; }
    double high() const noexcept { return high_; }
    double low() const noexcept { return low_; }
    double close() const noexcept { return close_; }
    double volume() const noexcept { return volume_; }

    friend bool operator==(const PriceBar&, const PriceBar&) = default;

private:
    Instant timestamp_;
    double open_;
    double high_;
    double low_;
    double close_;
    double volume_;
};

// Uniformly sampled real sequence; sample i sits at start + i * step.
class Series {
public:
    // Throws std::invalid_argument on empty input, non-finite values or step <= 0.
    Series(std::vector<double> values, Instant start, Duration step, std::string label = {});

    // The only way to obtain a zero-length series (see slice_by_time).
    static Series empty(Instant start, Duration step, std::string label = {});

    std::size_t size() const noexcept { return values_.size(); }
    bool is_empty() const noexcept { return values_.empty(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    Instant start() const noexcept { return start_; }
    Duration step() const noexcept { return step_; }
    const std::string& label() const noexcept { return label_; }
    Instant time_at(std::size_t i) const { return start_ + step_ * static_cast<Duration::rep>(i); }

    // Samples [first, first + count).
    Series window(std::size_t first, std::size_t count) const;

    // Same timing, new values (e.g. after an elementwise transform).
    Series with_values(std::vector<double> values) const;

private:
    Series(Instant start, Duration step, std::string label);

    std::vector<double> values_;
    Instant start_;
    Duration step_;
    std::string label_;
};

enum class BarFormat { Csv, Json };

inline constexpr std::string_view kBarsCsvHeader = "timestamp,open,high,low,close,volume";

// CSV: header kBarsCsvHeader, one bar per line, epoch-second timestamps.
// JSON: histohour-style payload, bars read from Data.Data[] with keys
// time, open, high, low, close, volumefrom.
// Timestamps must be strictly increasing; errors carry the 1-based row.
std::vector<PriceBar> parse_bars(std::string_view input, BarFormat format);

std::string write_bars_csv(std::span<const PriceBar> bars);

struct Gap {
    std::size_t after_index;  // bars[after_index] is the last bar before the hole
    Instant start;            // first expected-but-missing slot
    std::int64_t missing;     // number of whole missing bars
    bool misaligned;          // spacing is not a multiple of the expected step

    friend bool operator==(const Gap&, const Gap&) = default;
};

// Empty report means perfectly uniform sampling.
std::vector<Gap> resample_check(std::span<const PriceBar> bars, Duration expected_step);

// Samples with timestamp in [from, to). May return a zero-length series.
Series slice_by_time(const Series& s, Instant from, Instant to);

// "timestamp,value" CSV used by single-measure files and synthetic series.
inline constexpr std::string_view kSeriesCsvHeader = "timestamp,value";
std::string write_series_csv(const Series& s);
Series parse_series_csv(std::string_view input, std::string label = {});

}  // namespace hurstkit

#include "hurstkit/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "hurstkit/errors.hpp"
#include "hurstkit/io.hpp"

namespace hurstkit {

PriceBar::PriceBar(Instant timestamp, double open, double high, double low, double close, double volume)
    : timestamp_(timestamp), open_(open), high_(high), low_(low), close_(close), volume_(volume) {
    for (double p : {open, high, low, close}) {
        if (!std::isfinite(p) || p <= 0.0) {
            throw std::invalid_argument("prices must be finite and strictly positive");
        }
    }
    if (!std::isfinite(volume) || volume < 0.0) {
        throw std::invalid_argument("volume must be finite and non-negative");
    }
    if (high < low) {
        throw std::invalid_argument("high < low");
    }
    if (low > std::min(open, close)) {
        throw std::invalid_argument("low above open/close");
    }
    if (high < std::max(open, close)) {
        throw std::invalid_argument("high below open/close");
    }
}

Series::Series(Instant start, Duration step, std::string label)
    : start_(start), step_(step), label_(std::move(label)) {
    if (step_ <= Duration::zero()) {
        throw std::invalid_argument("series step must be positive");
    }
}

Series::Series(std::vector<double> values, Instant start, Duration step, std::string label)
    : Series(start, step, std::move(label)) {
    if (values.empty()) {
        throw std::invalid_argument("series must have at least one sample");
    }
    if (!std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); })) {
        throw std::invalid_argument("series contains NaN or Inf");
    }
    values_ = std::move(values);
}

Series Series::empty(Instant start, Duration step, std::string label) {
    return Series(start, step, std::move(label));
}

Series Series::window(std::size_t first, std::size_t count) const {
    if (first > size() || count > size() - first) {
        throw std::out_of_range("series window out of range");
    }
    Series out(time_at(first), step_, label_);
    out.values_.assign(values_.begin() + static_cast<std::ptrdiff_t>(first),
                       values_.begin() + static_cast<std::ptrdiff_t>(first + count));
    return out;
}

Series Series::with_values(std::vector<double> values) const {
    return Series(std::move(values), start_, step_, label_);
}

namespace {

PriceBar make_bar(std::size_t row, Instant t, double o, double h, double l, double c, double v) {
    try {
        return PriceBar(t, o, h, l, c, v);
    } catch (const std::invalid_argument& e) {
        throw DataError("row " + std::to_string(row) + ": " + e.what());
    }
}

void check_monotone(const std::vector<PriceBar>& bars, std::size_t row) {
    if (bars.size() >= 2) {
        const auto prev = bars[bars.size() - 2].timestamp();
        const auto cur = bars.back().timestamp();
        if (cur == prev) {
            throw DataError("row " + std::to_string(row) + ": duplicate timestamp " + format_iso(cur));
        }
        if (cur < prev) {
            throw DataError("row " + std::to_string(row) + ": timestamps not increasing");
        }
    }
}

std::vector<PriceBar> parse_csv(std::string_view input) {
    const auto rows = io::lines(input);
    if (rows.empty() || rows.front() != kBarsCsvHeader) {
        throw DataError("missing CSV header '" + std::string(kBarsCsvHeader) + "'");
    }
    std::vector<PriceBar> bars;
    bars.reserve(rows.size() - 1);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].empty()) {
            throw DataError("row " + std::to_string(i) + ": empty line");
        }
        const auto fields = io::split(rows[i], ',');
        if (fields.size() != 6) {
            throw DataError("row " + std::to_string(i) + ": expected 6 fields, got " + std::to_string(fields.size()));
        }
        Instant t;
        try {
            t = parse_instant(fields[0]);
        } catch (const DataError& e) {
            throw DataError("row " + std::to_string(i) + ": " + e.what());
        }
        double num[5];
        for (int k = 0; k < 5; ++k) {
            const auto v = io::parse_double(fields[static_cast<std::size_t>(k) + 1]);
            if (!v) {
                throw DataError("row " + std::to_string(i) + ": bad number '" +
                                std::string(fields[static_cast<std::size_t>(k) + 1]) + "'");
            }
            num[k] = *v;
        }
        bars.push_back(make_bar(i, t, num[0], num[1], num[2], num[3], num[4]));
        check_monotone(bars, i);
    }
    return bars;
}

std::vector<PriceBar> parse_json(std::string_view input) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(input);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("Data") || !doc["Data"].is_object() || !doc["Data"].contains("Data")) {
        throw DataError("JSON payload lacks Data.Data[]");
    }
    const auto* data = &doc["Data"]["Data"];
    if (!data->is_array()) {
        throw DataError("Data.Data is not an array");
    }
    std::vector<PriceBar> bars;
    bars.reserve(data->size());
    std::size_t row = 0;
    for (const auto& item : *data) {
        ++row;
        try {
            bars.push_back(make_bar(row, from_epoch(item.at("time").get<std::int64_t>()), item.at("open").get<double>(),
                                    item.at("high").get<double>(), item.at("low").get<double>(),
                                    item.at("close").get<double>(), item.at("volumefrom").get<double>()));
        } catch (const nlohmann::json::exception& e) {
            throw DataError("row " + std::to_string(row) + ": " + e.what());
        }
        check_monotone(bars, row);
    }
    return bars;
}

}  // namespace

std::vector<PriceBar> parse_bars(std::string_view input, BarFormat format) {
    return format == BarFormat::Csv ? parse_csv(input) : parse_json(input);
}

std::string write_bars_csv(std::span<const PriceBar> bars) {
    std::string out(kBarsCsvHeader);
    out += '\n';
    for (const auto& b : bars) {
        out += std::to_string(epoch_seconds(b.timestamp()));
        for (double v : {b.open(), b.high(), b.low(), b.close(), b.volume()}) {
            out += ',';
            out += io::format_double(v);
        }
        out += '\n';
    }
    return out;
}

std::vector<Gap> resample_check(std::span<const PriceBar> bars, Duration expected_step) {
    std::vector<Gap> gaps;
    for (std::size_t i = 1; i < bars.size(); ++i) {
        const auto diff = bars[i].timestamp() - bars[i - 1].timestamp();
        if (diff == expected_step) {
            continue;
        }
        gaps.push_back(Gap{
            .after_index = i - 1,
            .start = bars[i - 1].timestamp() + expected_step,
            .missing = std::max<std::int64_t>(diff / expected_step - 1, 0),
            .misaligned = diff % expected_step != Duration::zero(),
        });
    }
    return gaps;
}

Series slice_by_time(const Series& s, Instant from, Instant to) {
    if (to < from) {
        throw std::invalid_argument("slice_by_time: from > to");
    }
    // First index whose timestamp is >= t, clipped to [0, size].
    auto lower = [&](Instant t) -> std::size_t {
        if (t <= s.start()) {
            return 0;
        }
        const auto offset = (t - s.start()).count();
        const auto step = s.step().count();
        const auto idx = static_cast<std::size_t>((offset + step - 1) / step);
        return std::min(idx, s.size());
    };
    const std::size_t first = lower(from);
    const std::size_t last = lower(to);
    if (first >= last) {
        return Series::empty(s.time_at(first), s.step(), s.label());
    }
    return s.window(first, last - first);
}

std::string write_series_csv(const Series& s) {
    std::string out(kSeriesCsvHeader);
    out += '\n';
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += std::to_string(epoch_seconds(s.time_at(i)));
        out += ',';
        out += io::format_double(s[i]);
        out += '\n';
    }
    return out;
}

Series parse_series_csv(std::string_view input, std::string label) {
    const auto rows = io::lines(input);
    if (rows.empty() || rows.front() != kSeriesCsvHeader) {
        throw DataError("missing CSV header '" + std::string(kSeriesCsvHeader) + "'");
    }
    std::vector<double> values;
    std::vector<Instant> times;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto fields = io::split(rows[i], ',');
        if (fields.size() != 2) {
            throw DataError("row " + std::to_string(i) + ": expected 2 fields");
        }
        Instant t;
        try {
            t = parse_instant(fields[0]);
        } catch (const DataError& e) {
            throw DataError("row " + std::to_string(i) + ": " + e.what());
        }
        const auto v = io::parse_double(fields[1]);
        if (!v || !std::isfinite(*v)) {
            throw DataError("row " + std::to_string(i) + ": bad value '" + std::string(fields[1]) + "'");
        }
        times.push_back(t);
        values.push_back(*v);
    }
    if (values.empty()) {
        throw DataError("series CSV has no rows");
    }
    const Duration step = times.size() >= 2 ? times[1] - times[0] : Duration{1};
    if (step <= Duration::zero()) {
        throw DataError("row 2: timestamps not increasing");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] - times[i - 1] != step) {
            throw DataError("row " + std::to_string(i + 1) + ": non-uniform sampling (gap or jitter)");
        }
    }
    return Series(std::move(values), times.front(), step, std::move(label));
}

}  // namespace hurstkit

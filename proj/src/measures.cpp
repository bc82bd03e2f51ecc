#include "hurstkit/measures.hpp"

#include <cmath>
#include <string>

#include "hurstkit/errors.hpp"

namespace hurstkit {

std::string_view to_string(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::LogReturn: return "log-return";
        case MeasureKind::MaxMinVol: return "maxmin-vol";
        case MeasureKind::AbsReturn: return "abs-return";
    }
    return "unknown";
}

MeasureKind parse_measure_kind(std::string_view name) {
    for (auto kind : kAllMeasures) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

namespace {

// Uniform spacing of the bars; throws DataError when a gap is present.
Duration uniform_step(std::span<const PriceBar> bars) {
    if (bars.size() < 2) {
        return kTwoHours;
    }
    const Duration step = bars[1].timestamp() - bars[0].timestamp();
    const auto gaps = resample_check(bars, step);
    if (!gaps.empty()) {
        throw DataError("bars are not uniformly sampled: gap after " + format_iso(bars[gaps.front().after_index].timestamp()));
    }
    return step;
}

}  // namespace

Series log_returns(std::span<const PriceBar> bars) {
    if (bars.size() < 2) {
        throw DataError("log returns need at least 2 bars");
    }
    const Duration step = uniform_step(bars);
    std::vector<double> r(bars.size() - 1);
    for (std::size_t i = 0; i + 1 < bars.size(); ++i) {
        r[i] = std::log(bars[i + 1].close()) - std::log(bars[i].close());
    }
    return Series(std::move(r), bars[1].timestamp(), step, std::string(to_string(MeasureKind::LogReturn)));
}

Series maxmin_vol(std::span<const PriceBar> bars) {
    if (bars.empty()) {
        throw DataError("max-min volatility needs at least 1 bar");
    }
    const Duration step = uniform_step(bars);
    std::vector<double> v(bars.size());
    for (std::size_t i = 0; i < bars.size(); ++i) {
        if (bars[i].high() < bars[i].low()) {
            throw DataError("bar at " + format_iso(bars[i].timestamp()) + " has high < low");
        }
        v[i] = std::log(bars[i].high()) - std::log(bars[i].low());
    }
    return Series(std::move(v), bars[0].timestamp(), step, std::string(to_string(MeasureKind::MaxMinVol)));
}

Series abs_returns(const Series& r) {
    std::vector<double> v(r.values().begin(), r.values().end());
    for (auto& x : v) {
        x = std::fabs(x);
    }
    if (v.empty()) {
        return Series::empty(r.start(), r.step(), std::string(to_string(MeasureKind::AbsReturn)));
    }
    return Series(std::move(v), r.start(), r.step(), std::string(to_string(MeasureKind::AbsReturn)));
}

Series compute_measure(MeasureKind kind, std::span<const PriceBar> bars) {
    switch (kind) {
        case MeasureKind::LogReturn: return log_returns(bars);
        case MeasureKind::MaxMinVol: return maxmin_vol(bars);
        case MeasureKind::AbsReturn: return abs_returns(log_returns(bars));
    }
    throw std::invalid_argument("unknown measure kind");
}

}  // namespace hurstkit

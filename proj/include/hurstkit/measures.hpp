#pragma once

#include <array>
#include <span>
#include <string_view>

#include "hurstkit/series.hpp"

namespace hurstkit {

enum class MeasureKind { LogReturn, MaxMinVol, AbsReturn };

inline constexpr std::array<MeasureKind, 3> kAllMeasures{MeasureKind::LogReturn, MeasureKind::MaxMinVol,
                                                         MeasureKind::AbsReturn};

// "log-return", "maxmin-vol", "abs-return"
std::string_view to_string(MeasureKind kind);
MeasureKind parse_measure_kind(std::string_view name);

// log(close[i+1]) - log(close[i]); the series starts at the second bar.
// Requires >= 2 bars on a uniform grid.
Series log_returns(std::span<const PriceBar> bars);

// log(high) - log(low) per bar. A single bar gets a two-hour step.
Series maxmin_vol(std::span<const PriceBar> bars);

// |r_i| with the same timing as r.
Series abs_returns(const Series& r);

Series compute_measure(MeasureKind kind, std::span<const PriceBar> bars);

}  // namespace hurstkit

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hurstkit/measures.hpp"
#include "hurstkit/rolling.hpp"

namespace hurstkit {

struct MeasureRun {
    MeasureKind measure;
    RollingResult rolling;
    SegmentTable segments;
};

// bars -> each measure -> rolling estimates -> segment means.
std::vector<MeasureRun> run_coin_pipeline(std::span<const PriceBar> bars, const std::string& coin,
                                          const RollingConfig& cfg, Breakpoints breakpoints,
                                          std::span<const MeasureKind> measures = kAllMeasures);

// <coin>_<measure>.rolling.csv and <coin>_<measure>.segments.json
std::string rolling_file_name(const std::string& coin, MeasureKind measure);
std::string segments_file_name(const std::string& coin, MeasureKind measure);

void write_pipeline_outputs(const std::filesystem::path& dir, const std::string& coin,
                            std::span<const MeasureRun> runs);

}  // namespace hurstkit

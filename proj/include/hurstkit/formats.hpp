#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hurstkit/estimators.hpp"
#include "hurstkit/rolling.hpp"

namespace hurstkit {

nlohmann::json to_json(const HurstEstimate& e);

inline constexpr std::string_view kRollingCsvHeader = "window_end,beta,hurst,class,r2";

// One row per window; failed windows keep their timestamp, blank numbers and class "failed".
std::string rolling_csv(const RollingResult& r);

struct RollingRow {
    Instant window_end;
    std::optional<double> hurst;
};

std::vector<RollingRow> parse_rolling_csv(std::string_view text);

struct SegmentLabels {
    std::string coin;
    std::string measure;
    std::string rolling_csv;  // file name of the matching rolling CSV, if any
};

nlohmann::json to_json(const SegmentTable& t, const SegmentLabels& labels);
SegmentTable segment_table_from_json(const nlohmann::json& j);
SegmentLabels segment_labels_from_json(const nlohmann::json& j);

// "all & before & during & after" with 4 decimals; an empty segment is a blank cell.
std::string segment_row(const SegmentTable& t);

inline constexpr std::string_view kBenchCsvHeader = "theoretical_h,fbm_mean,fbm_std,fgn_mean,fgn_std";
std::string bench_table1_csv(const std::vector<BenchRow>& rows);

}  // namespace hurstkit

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hurstkit/formats.hpp"

namespace hurstkit {

struct ReportInput {
    SegmentLabels labels;
    std::vector<RollingRow> rows;
    SegmentTable segments;
};

struct ReportBundle {
    std::string hurst_long_csv;     // coin,measure,window_end,hurst
    std::string segment_means_csv;  // measure,coin,all,before,during,after
    std::size_t series_count = 0;
};

// Every *.segments.json in `dir` together with the rolling CSV it names.
std::vector<ReportInput> load_report_inputs(const std::filesystem::path& dir);

// Inputs are ordered by measure (log-return, maxmin-vol, abs-return, then
// others alphabetically) and coin, so the result is independent of input order.
ReportBundle build_report(std::vector<ReportInput> inputs);

}  // namespace hurstkit

#include "hurstkit/report.hpp"

#include <algorithm>
#include <set>

#include "hurstkit/errors.hpp"
#include "hurstkit/io.hpp"
#include "hurstkit/measures.hpp"

namespace hurstkit {

namespace {

constexpr std::string_view kSegmentsSuffix = ".segments.json";

int measure_rank(const std::string& m) {
    for (std::size_t i = 0; i < kAllMeasures.size(); ++i) {
        if (to_string(kAllMeasures[i]) == m) return static_cast<int>(i);
    }
    return static_cast<int>(kAllMeasures.size());
}

}  // namespace

std::vector<ReportInput> load_report_inputs(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw DataError("report input '" + dir.string() + "' is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.size() > kSegmentsSuffix.size() &&
            name.ends_with(kSegmentsSuffix)) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<ReportInput> inputs;
    for (const auto& path : files) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(io::read_file(path));
        } catch (const nlohmann::json::parse_error& e) {
            throw DataError(path.filename().string() + ": " + e.what());
        }
        ReportInput in;
        in.labels = segment_labels_from_json(doc);
        in.segments = segment_table_from_json(doc);
        if (in.labels.rolling_csv.empty()) {
            throw DataError(path.filename().string() + ": missing rolling_csv");
        }
        in.rows = parse_rolling_csv(io::read_file(dir / in.labels.rolling_csv));
        inputs.push_back(std::move(in));
    }
    if (inputs.empty()) {
        throw DataError("no *.segments.json files in '" + dir.string() + "'");
    }
    return inputs;
}

ReportBundle build_report(std::vector<ReportInput> inputs) {
    std::sort(inputs.begin(), inputs.end(), [](const ReportInput& a, const ReportInput& b) {
        const int ra = measure_rank(a.labels.measure);
        const int rb = measure_rank(b.labels.measure);
        if (ra != rb) return ra < rb;
        if (a.labels.measure != b.labels.measure) return a.labels.measure < b.labels.measure;
        return a.labels.coin < b.labels.coin;
    });
    std::set<std::pair<std::string, std::string>> seen;
    ReportBundle bundle;
    bundle.hurst_long_csv = "coin,measure,window_end,hurst\n";
    bundle.segment_means_csv = "measure,coin,all,before,during,after\n";
    for (const auto& in : inputs) {
        if (!seen.emplace(in.labels.coin, in.labels.measure).second) {
            throw DataError("duplicate report input for " + in.labels.coin + "/" + in.labels.measure);
        }
        const std::string prefix = in.labels.coin + ',' + in.labels.measure + ',';
        for (const auto& row : in.rows) {
            bundle.hurst_long_csv += prefix + std::to_string(epoch_seconds(row.window_end)) + ',';
            if (row.hurst) bundle.hurst_long_csv += io::format_double(*row.hurst);
            bundle.hurst_long_csv += '\n';
        }
        bundle.segment_means_csv += in.labels.measure + ',' + in.labels.coin;
        for (const auto& s : in.segments.segments) {
            bundle.segment_means_csv += ',';
            if (s.mean_hurst) bundle.segment_means_csv += io::format_fixed(*s.mean_hurst, 4);
        }
        bundle.segment_means_csv += '\n';
    }
    bundle.series_count = inputs.size();
    return bundle;
}

}  // namespace hurstkit

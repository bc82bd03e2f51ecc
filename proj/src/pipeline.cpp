#include "hurstkit/pipeline.hpp"

#include "hurstkit/formats.hpp"
#include "hurstkit/io.hpp"

namespace hurstkit {

std::vector<MeasureRun> run_coin_pipeline(std::span<const PriceBar> bars, const std::string& coin,
                                          const RollingConfig& cfg, Breakpoints breakpoints,
                                          std::span<const MeasureKind> measures) {
    std::vector<MeasureRun> runs;
    for (auto kind : measures) {
        const auto series = compute_measure(kind, bars);
        auto rolling = rolling_hurst(series, cfg);
        rolling.source = coin + "/" + std::string(to_string(kind));
        auto segments = segment_means(rolling, breakpoints);
        runs.push_back({kind, std::move(rolling), std::move(segments)});
    }
    return runs;
}

std::string rolling_file_name(const std::string& coin, MeasureKind measure) {
    return coin + "_" + std::string(to_string(measure)) + ".rolling.csv";
}

std::string segments_file_name(const std::string& coin, MeasureKind measure) {
    return coin + "_" + std::string(to_string(measure)) + ".segments.json";
}

void write_pipeline_outputs(const std::filesystem::path& dir, const std::string& coin,
                            std::span<const MeasureRun> runs) {
    for (const auto& run : runs) {
        const auto csv_name = rolling_file_name(coin, run.measure);
        io::write_file_atomic(dir / csv_name, rolling_csv(run.rolling));
        const SegmentLabels labels{coin, std::string(to_string(run.measure)), csv_name};
        io::write_file_atomic(dir / segments_file_name(coin, run.measure), to_json(run.segments, labels).dump(2) + "\n");
    }
}

}  // namespace hurstkit

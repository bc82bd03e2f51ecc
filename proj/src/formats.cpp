#include "hurstkit/formats.hpp"

#include <algorithm>
#include <array>

#include "hurstkit/errors.hpp"
#include "hurstkit/io.hpp"

namespace hurstkit {

nlohmann::json to_json(const HurstEstimate& e) {
    return nlohmann::json{
        {"method", to_string(e.method)},
        {"beta", e.beta},
        {"hurst", e.hurst},
        {"signal_class", to_string(e.signal_class)},
        {"slope", e.slope},
        {"intercept", e.intercept},
        {"r_squared", e.r_squared},
        {"scales_used", {e.scale_min, e.scale_max}},
        {"scales_count", e.scales_count},
        {"beta_clamped", e.beta_clamped},
        {"hurst_clamped", e.hurst_clamped},
    };
}

std::string rolling_csv(const RollingResult& r) {
    std::string out(kRollingCsvHeader);
    out += '\n';
    for (const auto& entry : r.entries) {
        out += std::to_string(epoch_seconds(entry.window_end));
        if (entry.estimate) {
            const auto& e = *entry.estimate;
            out += ',' + io::format_double(e.beta) + ',' + io::format_double(e.hurst) + ',' +
                   std::string(to_string(e.signal_class)) + ',' + io::format_double(e.r_squared);
        } else {
            out += ",,,failed,";
        }
        out += '\n';
    }
    return out;
}

std::vector<RollingRow> parse_rolling_csv(std::string_view text) {
    const auto rows = io::lines(text);
    if (rows.empty() || rows.front() != kRollingCsvHeader) {
        throw DataError("rolling CSV must start with '" + std::string(kRollingCsvHeader) + "'");
    }
    std::vector<RollingRow> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto fields = io::split(rows[i], ',');
        if (fields.size() != 5) {
            throw DataError("rolling CSV row " + std::to_string(i) + ": expected 5 fields");
        }
        RollingRow row{parse_instant(fields[0]), std::nullopt};
        if (!fields[2].empty()) {
            row.hurst = io::parse_double(fields[2]);
            if (!row.hurst) {
                throw DataError("rolling CSV row " + std::to_string(i) + ": bad hurst '" + std::string(fields[2]) + "'");
            }
        }
        if (!out.empty() && !(out.back().window_end < row.window_end)) {
            throw DataError("rolling CSV row " + std::to_string(i) + ": window_end not increasing");
        }
        out.push_back(row);
    }
    return out;
}

namespace {

nlohmann::json optional_instant(const std::optional<Instant>& t) {
    return t ? nlohmann::json(format_iso(*t)) : nlohmann::json(nullptr);
}

std::optional<Instant> read_optional_instant(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return parse_instant(j.get<std::string>());
}

}  // namespace

nlohmann::json to_json(const SegmentTable& t, const SegmentLabels& labels) {
    nlohmann::json segments = nlohmann::json::array();
    for (const auto& s : t.segments) {
        segments.push_back({
            {"label", s.label},
            {"from", optional_instant(s.from)},
            {"to", optional_instant(s.to)},
            {"mean_hurst", s.mean_hurst ? nlohmann::json(*s.mean_hurst) : nlohmann::json(nullptr)},
            {"count", s.count},
        });
    }
    return nlohmann::json{
        {"coin", labels.coin},
        {"measure", labels.measure},
        {"rolling_csv", labels.rolling_csv},
        {"source", t.source},
        {"breakpoints", {format_iso(t.breakpoints.first), format_iso(t.breakpoints.second)}},
        {"excluded_windows", t.excluded},
        {"segments", segments},
        {"table_row", segment_row(t)},
    };
}

SegmentTable segment_table_from_json(const nlohmann::json& j) {
    try {
        SegmentTable t;
        t.source = j.value("source", std::string{});
        const auto& bp = j.at("breakpoints");
        t.breakpoints = {parse_instant(bp.at(0).get<std::string>()), parse_instant(bp.at(1).get<std::string>())};
        t.excluded = j.at("excluded_windows").get<std::size_t>();
        const auto& segs = j.at("segments");
        if (!segs.is_array() || segs.size() != 4) {
            throw DataError("segment table needs exactly 4 segments");
        }
        static constexpr std::array<std::string_view, 4> kLabels{"all", "before", "during", "after"};
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& s = segs[i];
            auto& out = t.segments[i];
            out.label = s.at("label").get<std::string>();
            if (out.label != kLabels[i]) {
                throw DataError("segment " + std::to_string(i) + " must be '" + std::string(kLabels[i]) + "'");
            }
            out.from = read_optional_instant(s.at("from"));
            out.to = read_optional_instant(s.at("to"));
            const auto& m = s.at("mean_hurst");
            if (!m.is_null()) out.mean_hurst = m.get<double>();
            out.count = s.at("count").get<std::size_t>();
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("segment table schema: ") + e.what());
    }
}

SegmentLabels segment_labels_from_json(const nlohmann::json& j) {
    try {
        return {j.at("coin").get<std::string>(), j.at("measure").get<std::string>(),
                j.value("rolling_csv", std::string{})};
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("segment table schema: ") + e.what());
    }
}

std::string segment_row(const SegmentTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.segments.size(); ++i) {
        if (i > 0) out += " & ";
        if (t.segments[i].mean_hurst) out += io::format_fixed(*t.segments[i].mean_hurst, 4);
    }
    return out;
}

std::string bench_table1_csv(const std::vector<BenchRow>& rows) {
    struct Pair {
        const BenchRow* fbm = nullptr;
        const BenchRow* fgn = nullptr;
    };
    std::vector<std::pair<double, Pair>> ordered;
    for (const auto& row : rows) {
        auto it = std::find_if(ordered.begin(), ordered.end(), [&](const auto& p) { return p.first == row.theoretical_h; });
        if (it == ordered.end()) {
            ordered.push_back({row.theoretical_h, {}});
            it = ordered.end() - 1;
        }
        (row.kind == ProcessKind::Fbm ? it->second.fbm : it->second.fgn) = &row;
    }
    auto cell = [](const BenchRow* r, bool mean) {
        return r ? io::format_fixed(mean ? r->mean : r->window_std, 4) : std::string{};
    };
    std::string out(kBenchCsvHeader);
    out += '\n';
    for (const auto& [h, p] : ordered) {
        out += io::format_double(h) + ',' + cell(p.fbm, true) + ',' + cell(p.fbm, false) + ',' + cell(p.fgn, true) +
               ',' + cell(p.fgn, false) + '\n';
    }
    return out;
}

}  // namespace hurstkit

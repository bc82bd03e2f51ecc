#include "hurstkit/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurstkit/cryptocompare.hpp"
#include "hurstkit/errors.hpp"
#include "hurstkit/formats.hpp"
#include "hurstkit/io.hpp"
#include "hurstkit/measures.hpp"
#include "hurstkit/pipeline.hpp"
#include "hurstkit/report.hpp"
#include "hurstkit/rolling.hpp"
#include "hurstkit/synth.hpp"

namespace fs = std::filesystem;

namespace hurstkit::cli {

namespace {

struct WaveletOptions {
    std::string method = "awc-mad";
    std::string wavelet = "mexican-hat";
    std::optional<double> scales_min;
    std::optional<double> scales_max;
    std::optional<std::size_t> scales_count;

    void attach(CLI::App* cmd) {
        cmd->add_option("--method", method, "awc-mad | awc-var | rs")
            ->check(CLI::IsMember({"awc-mad", "awc-var", "rs"}))
            ->capture_default_str();
        cmd->add_option("--wavelet", wavelet, "mexican-hat | daub10")
            ->check(CLI::IsMember({"mexican-hat", "daub10"}))
            ->capture_default_str();
        cmd->add_option("--scales-min", scales_min, "smallest scale in samples");
        cmd->add_option("--scales-max", scales_max, "largest scale in samples");
        cmd->add_option("--scales-count", scales_count, "number of log-spaced scales");
    }

    // Grid flags are all-or-nothing relative to the default grid: any unset
    // bound falls back to the default for the series/window length.
    EstimatorConfig config(std::size_t n) const {
        EstimatorConfig cfg;
        cfg.method = parse_method(method);
        cfg.wavelet = parse_wavelet_kind(wavelet);
        if (scales_min || scales_max || scales_count) {
            cfg.grid = ScaleGrid::logarithmic(scales_min.value_or(2.0), scales_max.value_or(static_cast<double>(n) / 4.0),
                                              scales_count.value_or(kDefaultGridCount));
        }
        return cfg;
    }
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    for (auto part : io::split(text, ',')) {
        if (!part.empty()) out.emplace_back(part);
    }
    return out;
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir)) {
        throw DataError("cannot create output directory '" + dir.string() + "'");
    }
}

void ensure_parent(const fs::path& file) {
    const auto parent = file.has_parent_path() ? file.parent_path() : fs::path(".");
    if (!fs::is_directory(parent)) {
        throw DataError("output directory '" + parent.string() + "' does not exist");
    }
}

void emit(const std::optional<fs::path>& path, const std::string& content, std::ostream& out) {
    if (path) {
        io::write_file_atomic(*path, content);
    } else {
        out << content;
    }
}

std::vector<PriceBar> load_bars(const fs::path& path) {
    const auto text = io::read_file(path);
    const auto format = path.extension() == ".json" ? BarFormat::Json : BarFormat::Csv;
    return parse_bars(text, format);
}

void error_line(std::ostream& err, std::string_view kind, std::string_view message) {
    err << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wavelet (AWC-MAD) Hurst exponent toolkit for long-memory analysis"};
    app.require_subcommand(1, 1);
    app.set_config("--config", "", "key = value configuration file; flags override it");

    // fetch
    auto* fetch = app.add_subcommand("fetch", "download two-hour OHLCV bars into one CSV per symbol");
    std::string symbols;
    std::string tsym = "USD";
    std::string fetch_from = "2019-11-14";
    std::string fetch_to = "2020-06-08T22:00:00Z";
    std::string endpoint = "https://min-api.cryptocompare.com/data/v2/histohour";
    std::optional<fs::path> fixture_dir;
    fs::path fetch_out;
    std::size_t page_limit = 2000;
    fetch->add_option("--symbols", symbols, "comma-separated symbols (default: the eleven study coins)");
    fetch->add_option("--tsym", tsym, "quote currency")->capture_default_str();
    fetch->add_option("--from", fetch_from, "first bar (date or ISO instant, UTC)")->capture_default_str();
    fetch->add_option("--to", fetch_to, "last bar (date or ISO instant, UTC)")->capture_default_str();
    fetch->add_option("--endpoint", endpoint, "histohour endpoint URL")->capture_default_str();
    fetch->add_option("--fixture-dir", fixture_dir, "replay recorded responses instead of the network")
        ->check(CLI::ExistingDirectory);
    fetch->add_option("--output-dir", fetch_out, "directory for <SYMBOL>.csv")->required();
    fetch->add_option("--page-limit", page_limit, "bars per request (<= 2000)")
        ->check(CLI::Range(1, 2000))
        ->capture_default_str();

    // measures
    auto* measures = app.add_subcommand("measures", "bars CSV -> log-return, maxmin-vol, abs-return CSVs");
    fs::path measures_in;
    fs::path measures_out;
    std::string measures_label;
    measures->add_option("--input", measures_in, "bars CSV")->required()->check(CLI::ExistingFile);
    measures->add_option("--output-dir", measures_out, "directory for <label>_<measure>.csv")->required();
    measures->add_option("--label", measures_label, "file prefix (default: input file stem)");

    // estimate
    auto* estimate_cmd = app.add_subcommand("estimate", "Hurst exponent of one series, as JSON");
    fs::path estimate_in;
    std::optional<fs::path> estimate_out;
    WaveletOptions estimate_opts;
    estimate_cmd->add_option("--input", estimate_in, "series CSV (timestamp,value)")->required()->check(CLI::ExistingFile);
    estimate_cmd->add_option("--output", estimate_out, "JSON file (default: stdout)");
    estimate_opts.attach(estimate_cmd);

    // rolling
    auto* rolling = app.add_subcommand("rolling", "rolling-window Hurst estimates and segment means");
    fs::path rolling_in;
    std::optional<std::string> rolling_measure;
    std::size_t window = 360;
    std::size_t step = 1;
    fs::path rolling_out;
    std::optional<fs::path> segments_out;
    std::string breakpoints = "2020-03-03,2020-03-18";
    std::string coin;
    unsigned workers = 1;
    WaveletOptions rolling_opts;
    rolling->add_option("--input", rolling_in, "series CSV, or bars CSV together with --measure")
        ->required()
        ->check(CLI::ExistingFile);
    rolling->add_option("--measure", rolling_measure, "log-return | maxmin-vol | abs-return (input is bars)")
        ->check(CLI::IsMember({"log-return", "maxmin-vol", "abs-return"}));
    rolling->add_option("--window", window, "samples per window")->capture_default_str();
    rolling->add_option("--step", step, "samples between window starts")->capture_default_str();
    rolling->add_option("--output", rolling_out, "rolling CSV")->required();
    rolling->add_option("--segments", segments_out, "segment-means JSON");
    rolling->add_option("--breakpoints", breakpoints, "b1,b2 (UTC)")->capture_default_str();
    rolling->add_option("--coin", coin, "coin label for the segment table");
    rolling->add_option("--workers", workers, "worker threads (0 = all cores)")->capture_default_str();
    rolling_opts.attach(rolling);

    // synth
    auto* synth = app.add_subcommand("synth", "exact fGn / fBm series as CSV");
    std::string synth_kind = "fgn";
    double synth_h = 0.5;
    std::size_t synth_n = 1435;
    std::uint64_t synth_seed = 0;
    double synth_sigma = 1.0;
    std::optional<fs::path> synth_out;
    synth->add_option("--kind", synth_kind, "fgn | fbm")->check(CLI::IsMember({"fgn", "fbm"}))->capture_default_str();
    synth->add_option("--hurst", synth_h, "Hurst exponent in (0, 1)")->required();
    synth->add_option("--n", synth_n, "length")->capture_default_str();
    synth->add_option("--seed", synth_seed, "64-bit seed")->capture_default_str();
    synth->add_option("--sigma", synth_sigma, "noise scale")->capture_default_str();
    synth->add_option("--output", synth_out, "CSV file (default: stdout)");

    // bench-table1
    auto* bench = app.add_subcommand("bench-table1", "synthetic fBm/fGn benchmark of the rolling estimator");
    std::string bench_h = "0.2,0.4,0.6,0.8";
    BenchConfig bench_cfg;
    std::optional<fs::path> bench_out;
    WaveletOptions bench_opts;
    bench->add_option("--hurst", bench_h, "comma-separated theoretical H values")->capture_default_str();
    bench->add_option("--n", bench_cfg.n, "series length")->capture_default_str();
    bench->add_option("--window", bench_cfg.window, "rolling window")->capture_default_str();
    bench->add_option("--seeds", bench_cfg.seeds, "series per (H, kind)")->capture_default_str();
    bench->add_option("--seed-base", bench_cfg.seed_base, "first seed")->capture_default_str();
    bench->add_option("--workers", bench_cfg.workers, "worker threads (0 = all cores)")->capture_default_str();
    bench->add_option("--output", bench_out, "CSV file (default: stdout)");
    bench_opts.attach(bench);

    // report
    auto* report = app.add_subcommand("report", "merge rolling CSVs and segment tables into plot-ready files");
    fs::path report_in;
    fs::path report_out;
    report->add_option("--input-dir", report_in, "directory with *.segments.json and rolling CSVs")
        ->required()
        ->check(CLI::ExistingDirectory);
    report->add_option("--output-dir", report_out, "destination directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        error_line(err, "usage", e.what());
        return kUsage;
    }

    try {
        if (*fetch) {
            ensure_dir(fetch_out);
            auto syms = symbols.empty() ? api::default_symbols() : split_list(symbols);
            std::unique_ptr<api::Transport> transport;
            if (fixture_dir) {
                transport = std::make_unique<api::FixtureTransport>(*fixture_dir);
            } else {
                std::optional<std::string> key;
                if (const char* env = std::getenv(api::kApiKeyEnv); env && *env) key = env;
                transport = std::make_unique<api::HttpTransport>(endpoint, key);
            }
            api::FetchRequest request;
            request.tsym = tsym;
            request.from = parse_instant(fetch_from);
            request.to = parse_instant(fetch_to);
            request.page_limit = page_limit;
            int failures = 0;
            for (const auto& sym : syms) {
                request.fsym = sym;
                try {
                    const auto bars = api::fetch_bars(*transport, request);
                    io::write_file_atomic(fetch_out / (sym + ".csv"), write_bars_csv(bars));
                    out << sym << ": " << bars.size() << " bars\n";
                } catch (const DataError& e) {
                    ++failures;
                    error_line(err, "data", e.what());
                }
            }
            return failures > 0 ? kDataError : kOk;
        }

        if (*measures) {
            ensure_dir(measures_out);
            const auto label = measures_label.empty() ? measures_in.stem().string() : measures_label;
            const auto bars = load_bars(measures_in);
            for (auto kind : kAllMeasures) {
                const auto s = compute_measure(kind, bars);
                io::write_file_atomic(measures_out / (label + "_" + std::string(to_string(kind)) + ".csv"),
                                      write_series_csv(s));
            }
            return kOk;
        }

        if (*estimate_cmd) {
            if (estimate_out) ensure_parent(*estimate_out);
            const auto s = parse_series_csv(io::read_file(estimate_in), estimate_in.stem().string());
            const auto e = estimate(s, estimate_opts.config(s.size()));
            emit(estimate_out, to_json(e).dump(2) + "\n", out);
            return kOk;
        }

        if (*rolling) {
            ensure_parent(rolling_out);
            if (segments_out) ensure_parent(*segments_out);
            const auto bp_list = split_list(breakpoints);
            if (bp_list.size() != 2) {
                throw std::invalid_argument("--breakpoints needs exactly two instants");
            }
            const Breakpoints bp{parse_instant(bp_list[0]), parse_instant(bp_list[1])};
            const Series s = rolling_measure
                                 ? compute_measure(parse_measure_kind(*rolling_measure), load_bars(rolling_in))
                                 : parse_series_csv(io::read_file(rolling_in), rolling_in.stem().string());
            RollingConfig cfg;
            cfg.window = window;
            cfg.step = step;
            cfg.workers = workers;
            cfg.estimator = rolling_opts.config(window);
            auto result = rolling_hurst(s, cfg);
            const std::string coin_label = coin.empty() ? rolling_in.stem().string() : coin;
            const std::string measure_label = rolling_measure.value_or(s.label());
            result.source = coin_label + "/" + measure_label;
            io::write_file_atomic(rolling_out, rolling_csv(result));
            if (segments_out) {
                const auto table = segment_means(result, bp);
                std::string csv_name = rolling_out.filename().string();
                const auto seg_dir = segments_out->has_parent_path() ? segments_out->parent_path() : fs::path(".");
                const auto csv_dir = rolling_out.has_parent_path() ? rolling_out.parent_path() : fs::path(".");
                if (!fs::equivalent(seg_dir, csv_dir)) {
                    csv_name = fs::relative(rolling_out, seg_dir).string();
                }
                io::write_file_atomic(*segments_out,
                                      to_json(table, {coin_label, measure_label, csv_name}).dump(2) + "\n");
            }
            return kOk;
        }

        if (*synth) {
            if (synth_out) ensure_parent(*synth_out);
            FractionalSpec spec;
            spec.n = synth_n;
            spec.hurst = synth_h;
            spec.sigma = synth_sigma;
            spec.seed = synth_seed;
            spec.kind = parse_process_kind(synth_kind);
            emit(synth_out, write_series_csv(generate(spec)), out);
            return kOk;
        }

        if (*bench) {
            if (bench_out) ensure_parent(*bench_out);
            bench_cfg.hurst.clear();
            for (const auto& h : split_list(bench_h)) {
                const auto v = io::parse_double(h);
                if (!v) throw std::invalid_argument("bad --hurst value '" + h + "'");
                bench_cfg.hurst.push_back(*v);
            }
            bench_cfg.estimator = bench_opts.config(bench_cfg.window);
            emit(bench_out, bench_table1_csv(bench_table1(bench_cfg)), out);
            return kOk;
        }

        if (*report) {
            ensure_dir(report_out);
            const auto bundle = build_report(load_report_inputs(report_in));
            io::write_file_atomic(report_out / "hurst_long.csv", bundle.hurst_long_csv);
            io::write_file_atomic(report_out / "segment_means.csv", bundle.segment_means_csv);
            out << bundle.series_count << " series\n";
            return kOk;
        }
    } catch (const DataError& e) {
        error_line(err, "data", e.what());
        return kDataError;
    } catch (const NumericError& e) {
        error_line(err, "numeric", e.what());
        return kNumericError;
    } catch (const std::domain_error& e) {
        error_line(err, "numeric", e.what());
        return kNumericError;
    } catch (const std::invalid_argument& e) {
        error_line(err, "usage", e.what());
        return kUsage;
    } catch (const fs::filesystem_error& e) {
        error_line(err, "data", e.what());
        return kDataError;
    }
    error_line(err, "usage", "no subcommand");
    return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"hurstkit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hurstkit::cli

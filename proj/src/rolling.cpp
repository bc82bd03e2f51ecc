#include "hurstkit/rolling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "hurstkit/errors.hpp"

namespace hurstkit {

std::size_t RollingResult::failed_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const RollingEntry& e) { return !e.estimate; }));
}

std::size_t rolling_window_count(std::size_t n, std::size_t window, std::size_t step) {
    if (step == 0) {
        throw std::invalid_argument("rolling step must be >= 1");
    }
    return n < window ? 0 : (n - window) / step + 1;
}

namespace {

unsigned resolve_workers(unsigned requested, std::size_t jobs) {
    unsigned w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

// Runs body(i) for i in [0, count) on contiguous chunks, one per worker.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body body) {
    workers = resolve_workers(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t lo = w * chunk;
                const std::size_t hi = std::min(count, lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

void validate(const RollingConfig& cfg, std::size_t n) {
    if (cfg.window < 64) {
        throw std::invalid_argument("rolling window must be >= 64 samples");
    }
    if (cfg.step < 1) {
        throw std::invalid_argument("rolling step must be >= 1");
    }
    if (n < cfg.window) {
        throw DataError("series of length " + std::to_string(n) + " is shorter than the window " +
                        std::to_string(cfg.window));
    }
}

}  // namespace

RollingResult rolling_hurst(const Series& s, const RollingConfig& cfg) {
    validate(cfg, s.size());
    const std::size_t count = rolling_window_count(s.size(), cfg.window, cfg.step);

    RollingResult result;
    result.config = cfg;
    result.source = s.label();
    result.entries.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        result.entries[k].window_end = s.time_at(k * cfg.step + cfg.window - 1);
    }

    if (cfg.estimator.method == Method::RS) {
        parallel_for(count, cfg.workers, [&](std::size_t k) {
            auto& entry = result.entries[k];
            try {
                entry.estimate = rs_hurst(s.window(k * cfg.step, cfg.window));
            } catch (const NumericError& e) {
                entry.failure = e.what();
            }
        });
        return result;
    }

    // One plane for the whole series; each window reads the slice of
    // coefficients whose support lies inside it (bitwise equal to a per-window cwt).
    const ScaleGrid grid = cfg.estimator.grid_for(cfg.window);
    std::optional<CoeffPlane> plane;
    std::string plane_failure;
    try {
        if (static_cast<double>(cfg.window) < 4.0 * grid.max()) {
            throw NumericError("window of length " + std::to_string(cfg.window) + " too short for scale " +
                               std::to_string(grid.max()) + " (need N >= 4 * max scale)");
        }
        plane.emplace(cwt(s, grid, cfg.estimator.wavelet));
    } catch (const NumericError& e) {
        plane_failure = e.what();
    }

    parallel_for(count, cfg.workers, [&](std::size_t k) {
        auto& entry = result.entries[k];
        if (!plane) {
            entry.failure = plane_failure;
            return;
        }
        const std::size_t first = k * cfg.step;
        std::vector<ScaleSample> samples;
        samples.reserve(plane->rows().size());
        for (const auto& row : plane->rows()) {
            const std::size_t valid = cfg.window > 2 * row.radius ? cfg.window - 2 * row.radius : 0;
            const auto coeffs = std::span<const double>(row.coefficients);
            samples.push_back({row.scale, valid > 0 ? coeffs.subspan(first + row.radius, valid)
                                                    : std::span<const double>{}});
        }
        try {
            entry.estimate = estimate_from_samples(samples, cfg.estimator);
        } catch (const NumericError& e) {
            entry.failure = e.what();
        }
    });
    return result;
}

Breakpoints covid_breakpoints() {
    using namespace std::chrono;
    return {sys_days{year{2020} / 3 / 3}, sys_days{year{2020} / 3 / 18}};
}

SegmentTable segment_means(const RollingResult& r, Breakpoints bp) {
    if (!(bp.first < bp.second)) {
        throw std::invalid_argument("segment breakpoints must satisfy b1 < b2");
    }
    SegmentTable table;
    table.breakpoints = bp;
    table.source = r.source;
    table.segments[0] = {"all", std::nullopt, std::nullopt, std::nullopt, 0};
    table.segments[1] = {"before", std::nullopt, bp.first, std::nullopt, 0};
    table.segments[2] = {"during", bp.first, bp.second, std::nullopt, 0};
    table.segments[3] = {"after", bp.second, std::nullopt, std::nullopt, 0};

    std::array<double, 4> sums{};
    for (const auto& e : r.entries) {
        if (!e.estimate) {
            ++table.excluded;
            continue;
        }
        const std::size_t seg = e.window_end < bp.first ? 1 : (e.window_end < bp.second ? 2 : 3);
        for (std::size_t idx : {std::size_t{0}, seg}) {
            sums[idx] += e.estimate->hurst;
            ++table.segments[idx].count;
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        if (table.segments[i].count > 0) {
            table.segments[i].mean_hurst = sums[i] / static_cast<double>(table.segments[i].count);
        }
    }
    return table;
}

std::vector<BenchRow> bench_table1(const BenchConfig& cfg) {
    for (double h : cfg.hurst) {
        if (!(h > 0.0 && h < 1.0)) {
            throw std::invalid_argument("benchmark Hurst values must lie in (0, 1)");
        }
    }
    if (cfg.seeds == 0) {
        throw std::invalid_argument("benchmark needs at least one seed");
    }
    struct Job {
        std::size_t row;
        std::size_t seed_index;
    };
    std::vector<BenchRow> rows;
    std::vector<Job> jobs;
    for (double h : cfg.hurst) {
        for (auto kind : {ProcessKind::Fbm, ProcessKind::Fgn}) {
            BenchRow row;
            row.theoretical_h = h;
            row.kind = kind;
            row.seed_means.resize(cfg.seeds);
            row.seed_stds.resize(cfg.seeds);
            rows.push_back(std::move(row));
            for (std::size_t s = 0; s < cfg.seeds; ++s) {
                jobs.push_back({rows.size() - 1, s});
            }
        }
    }

    struct Outcome {
        std::vector<double> hurst;
        std::size_t failed = 0;
    };
    std::vector<Outcome> outcomes(jobs.size());
    RollingConfig rolling;
    rolling.window = cfg.window;
    rolling.step = 1;
    rolling.estimator = cfg.estimator;
    rolling.workers = 1;

    parallel_for(jobs.size(), cfg.workers, [&](std::size_t j) {
        const auto& row = rows[jobs[j].row];
        FractionalSpec spec;
        spec.n = cfg.n;
        spec.hurst = row.theoretical_h;
        spec.seed = cfg.seed_base + jobs[j].seed_index;
        spec.kind = row.kind;
        const auto result = rolling_hurst(generate(spec), rolling);
        for (const auto& e : result.entries) {
            if (e.estimate) {
                outcomes[j].hurst.push_back(e.estimate->hurst);
            } else {
                ++outcomes[j].failed;
            }
        }
    });

    std::vector<double> sums(rows.size(), 0.0);
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        auto& row = rows[jobs[j].row];
        const auto& h = outcomes[j].hurst;
        row.failed += outcomes[j].failed;
        if (h.empty()) {
            row.seed_means[jobs[j].seed_index] = std::nan("");
            row.seed_stds[jobs[j].seed_index] = std::nan("");
            continue;
        }
        double sum = 0.0;
        for (double v : h) sum += v;
        const double mean = sum / static_cast<double>(h.size());
        double ss = 0.0;
        for (double v : h) ss += (v - mean) * (v - mean);
        sums[jobs[j].row] += sum;
        row.windows += h.size();
        row.seed_means[jobs[j].seed_index] = mean;
        row.seed_stds[jobs[j].seed_index] = std::sqrt(ss / static_cast<double>(h.size()));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto& row = rows[i];
        row.mean = row.windows > 0 ? sums[i] / static_cast<double>(row.windows) : std::nan("");
        double acc = 0.0;
        std::size_t used = 0;
        for (double v : row.seed_stds) {
            if (!std::isnan(v)) {
                acc += v;
                ++used;
            }
        }
        row.window_std = used > 0 ? acc / static_cast<double>(used) : std::nan("");
    }
    return rows;
}

}  // namespace hurstkit

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hurstkit/series.hpp"

namespace hurstkit {

enum class WaveletKind { MexicanHat, Daub10 };

// "mexican-hat", "daub10"
std::string_view to_string(WaveletKind kind);
WaveletKind parse_wavelet_kind(std::string_view name);

// Mexican hat: (2 / (sqrt(3) pi^(1/4))) (1 - t^2) exp(-t^2 / 2).
// Daub10: Daubechies order-10 wavelet from cascade refinement on a 2^-10 grid,
// linearly interpolated and shifted so its support [0, 19] is centred on 0.
double mother_wavelet(WaveletKind kind, double t);

// Half-width of the effective support at unit scale (|psi| negligible outside).
double support_radius(WaveletKind kind);

// Lowpass Daubechies-10 filter, 20 taps, sum sqrt(2), unit energy.
std::span<const double> daubechies10_filter();

// Ascending scales in samples; at least 4, smallest >= 2.
class ScaleGrid {
public:
    explicit ScaleGrid(std::vector<double> scales);

    // `count` log2-spaced values in [min, max] rounded to integers, duplicates removed.
    static ScaleGrid logarithmic(double min, double max, std::size_t count);

    std::span<const double> scales() const noexcept { return scales_; }
    std::size_t size() const noexcept { return scales_.size(); }
    double min() const noexcept { return scales_.front(); }
    double max() const noexcept { return scales_.back(); }

    friend bool operator==(const ScaleGrid&, const ScaleGrid&) = default;

private:
    std::vector<double> scales_;
};

inline constexpr std::size_t kDefaultGridCount = 12;

// 12 log-spaced scales from 2 to floor(n/4). Requires n >= 64.
ScaleGrid default_grid(std::size_t n);

// Sampled, energy-normalised wavelet at `scale`: taps[j + radius] = psi(j / scale) / sqrt(scale)
// for j in [-radius, radius], shifted by a constant so the taps sum to exactly zero.
struct WaveletFilter {
    double scale;
    std::size_t radius;
    std::vector<double> taps;
};

WaveletFilter make_filter(WaveletKind kind, double scale);

// Coefficients of one scale, one per shift b = 0..N-1. Shifts in
// [valid_begin, valid_end) have their whole filter support inside the series;
// the others are computed on a truncated support and are masked out.
struct CoeffRow {
    double scale = 0.0;
    std::size_t radius = 0;
    std::vector<double> coefficients;
    std::size_t valid_begin = 0;
    std::size_t valid_end = 0;

    std::size_t valid_count() const noexcept { return valid_end - valid_begin; }
    bool is_valid(std::size_t b) const noexcept { return b >= valid_begin && b < valid_end; }
    std::span<const double> valid() const noexcept {
        return std::span<const double>(coefficients).subspan(valid_begin, valid_count());
    }
};

class CoeffPlane {
public:
    CoeffPlane(WaveletKind kind, std::size_t length, std::vector<CoeffRow> rows);

    WaveletKind kind() const noexcept { return kind_; }
    std::size_t length() const noexcept { return length_; }
    std::span<const CoeffRow> rows() const noexcept { return rows_; }

private:
    WaveletKind kind_;
    std::size_t length_;
    std::vector<CoeffRow> rows_;
};

// W(a, b) = sum_s f(s) psi((s - b) / a) / sqrt(a), unit sample spacing.
// Throws NumericError when the series is shorter than 4 * grid.max() or when
// no scale has a single valid coefficient.
CoeffPlane cwt(std::span<const double> values, const ScaleGrid& grid, WaveletKind kind);
CoeffPlane cwt(const Series& s, const ScaleGrid& grid, WaveletKind kind);

}  // namespace hurstkit

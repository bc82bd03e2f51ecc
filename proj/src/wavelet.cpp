#include "hurstkit/wavelet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hurstkit/errors.hpp"

namespace hurstkit {

namespace {

constexpr std::array<double, 20> kDaub10{
    2.66700579005555542256e-02,  1.88176800077691497304e-01,  5.27201188931725628350e-01,
    6.88459039453603538483e-01,  2.81172343660577472857e-01,  -2.49846424327315380642e-01,
    -1.95946274377377049891e-01, 1.27369340335793251873e-01,  9.30573646035723484049e-02,
    -7.13941471663970816941e-02, -2.94575368218758133765e-02, 3.32126740593410019198e-02,
    3.60655356695616970131e-03,  -1.07331754833305745289e-02, 1.39535174705290106363e-03,
    1.99240529518505612994e-03,  -6.85856694959711618576e-04, -1.16466855129285448982e-04,
    9.35886703200695919220e-05,  -1.32642028945212442831e-05,
};

constexpr double kMexicanHatRadius = 6.0;
constexpr int kCascadeLevel = 10;

double mexican_hat(double t) {
    static const double norm = 2.0 / (std::sqrt(3.0) * std::pow(std::numbers::pi, 0.25));
    const double t2 = t * t;
    return norm * (1.0 - t2) * std::exp(-0.5 * t2);
}

// Daubechies wavelet sampled at k / 2^level over its natural support [0, L-1].
struct CascadeTable {
    double spacing;
    double support;
    std::vector<double> psi;
};

CascadeTable build_cascade() {
    const std::size_t taps = kDaub10.size();
    const int last = static_cast<int>(taps) - 1;  // support [0, last]
    const double sqrt2 = std::numbers::sqrt2;

    // Scaling function at the integers: eigenvector of phi(i) = sqrt2 sum_m h_m phi(2i - m)
    // for eigenvalue 1, by power iteration.
    std::vector<double> phi(static_cast<std::size_t>(last) + 1, 1.0 / last);
    phi.front() = phi.back() = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<double> next(phi.size(), 0.0);
        for (int i = 0; i <= last; ++i) {
            double acc = 0.0;
            for (int m = 0; m < static_cast<int>(taps); ++m) {
                const int j = 2 * i - m;
                if (j >= 0 && j <= last) {
                    acc += kDaub10[static_cast<std::size_t>(m)] * phi[static_cast<std::size_t>(j)];
                }
            }
            next[static_cast<std::size_t>(i)] = sqrt2 * acc;
        }
        double sum = 0.0;
        for (double v : next) sum += v;
        for (auto& v : next) v /= sum;
        phi.swap(next);
    }

    // Dyadic refinement: level j+1 from level j.
    for (int level = 0; level < kCascadeLevel; ++level) {
        const long per_unit = 1L << level;
        const long points = last * per_unit * 2 + 1;
        std::vector<double> next(static_cast<std::size_t>(points), 0.0);
        for (long k = 0; k < points; ++k) {
            double acc = 0.0;
            for (long m = 0; m < static_cast<long>(taps); ++m) {
                const long idx = k - m * per_unit;
                if (idx >= 0 && idx < static_cast<long>(phi.size())) {
                    acc += kDaub10[static_cast<std::size_t>(m)] * phi[static_cast<std::size_t>(idx)];
                }
            }
            next[static_cast<std::size_t>(k)] = sqrt2 * acc;
        }
        phi.swap(next);
    }

    // psi(x) = sqrt2 sum_m g_m phi(2x - m), g_m = (-1)^m h_{L-1-m}.
    const long per_unit = 1L << kCascadeLevel;
    const long points = last * per_unit + 1;
    std::vector<double> psi(static_cast<std::size_t>(points), 0.0);
    for (long k = 0; k < points; ++k) {
        double acc = 0.0;
        for (long m = 0; m < static_cast<long>(taps); ++m) {
            const long idx = 2 * k - m * per_unit;
            if (idx >= 0 && idx < static_cast<long>(phi.size())) {
                const double g = (m % 2 == 0 ? 1.0 : -1.0) * kDaub10[static_cast<std::size_t>(last - m)];
                acc += g * phi[static_cast<std::size_t>(idx)];
            }
        }
        psi[static_cast<std::size_t>(k)] = sqrt2 * acc;
    }
    return CascadeTable{1.0 / static_cast<double>(per_unit), static_cast<double>(last), std::move(psi)};
}

const CascadeTable& daub10_table() {
    static const CascadeTable table = build_cascade();
    return table;
}

double daub10(double t) {
    const auto& table = daub10_table();
    const double x = t + 0.5 * table.support;
    if (x <= 0.0 || x >= table.support) {
        return 0.0;
    }
    const double pos = x / table.spacing;
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    const double hi = i + 1 < table.psi.size() ? table.psi[i + 1] : 0.0;
    return table.psi[i] + frac * (hi - table.psi[i]);
}

}  // namespace

std::string_view to_string(WaveletKind kind) {
    switch (kind) {
        case WaveletKind::MexicanHat: return "mexican-hat";
        case WaveletKind::Daub10: return "daub10";
    }
    return "unknown";
}

WaveletKind parse_wavelet_kind(std::string_view name) {
    if (name == "mexican-hat") return WaveletKind::MexicanHat;
    if (name == "daub10") return WaveletKind::Daub10;
    throw std::invalid_argument("unknown wavelet '" + std::string(name) + "'");
}

double mother_wavelet(WaveletKind kind, double t) {
    switch (kind) {
        case WaveletKind::MexicanHat: return mexican_hat(t);
        case WaveletKind::Daub10: return daub10(t);
    }
    throw std::invalid_argument("unsupported wavelet kind");
}

double support_radius(WaveletKind kind) {
    switch (kind) {
        case WaveletKind::MexicanHat: return kMexicanHatRadius;
        case WaveletKind::Daub10: return 0.5 * static_cast<double>(kDaub10.size() - 1);
    }
    throw std::invalid_argument("unsupported wavelet kind");
}

std::span<const double> daubechies10_filter() { return kDaub10; }

ScaleGrid::ScaleGrid(std::vector<double> scales) : scales_(std::move(scales)) {
    if (scales_.size() < 4) {
        throw std::invalid_argument("scale grid needs at least 4 scales");
    }
    if (!(scales_.front() >= 2.0)) {
        throw std::invalid_argument("smallest scale must be >= 2 samples");
    }
    for (std::size_t i = 1; i < scales_.size(); ++i) {
        if (!(scales_[i] > scales_[i - 1]) || !std::isfinite(scales_[i])) {
            throw std::invalid_argument("scales must be finite and strictly increasing");
        }
    }
}

ScaleGrid ScaleGrid::logarithmic(double min, double max, std::size_t count) {
    if (!(min > 0.0) || !(max > min) || count < 2) {
        throw std::invalid_argument("logarithmic grid needs 0 < min < max and count >= 2");
    }
    const double lo = std::log2(min);
    const double hi = std::log2(max);
    std::vector<double> scales;
    for (std::size_t i = 0; i < count; ++i) {
        const double e = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
        const double a = std::round(std::exp2(e));
        if (scales.empty() || a > scales.back()) {
            scales.push_back(a);
        }
    }
    return ScaleGrid(std::move(scales));
}

ScaleGrid default_grid(std::size_t n) {
    if (n < 64) {
        throw std::invalid_argument("default scale grid needs n >= 64, got " + std::to_string(n));
    }
    return ScaleGrid::logarithmic(2.0, static_cast<double>(n / 4), kDefaultGridCount);
}

WaveletFilter make_filter(WaveletKind kind, double scale) {
    const auto radius = static_cast<std::size_t>(std::ceil(support_radius(kind) * scale - 1e-9));
    std::vector<double> taps(2 * radius + 1);
    const double norm = 1.0 / std::sqrt(scale);
    const auto r = static_cast<long>(radius);
    for (long j = -r; j <= r; ++j) {
        taps[static_cast<std::size_t>(j + r)] = norm * mother_wavelet(kind, static_cast<double>(j) / scale);
    }
    // Remove the discretisation residue of the zero-mean condition.
    double sum = 0.0;
    for (double v : taps) sum += v;
    const double shift = sum / static_cast<double>(taps.size());
    for (auto& v : taps) v -= shift;
    return WaveletFilter{scale, radius, std::move(taps)};
}

CoeffPlane::CoeffPlane(WaveletKind kind, std::size_t length, std::vector<CoeffRow> rows)
    : kind_(kind), length_(length), rows_(std::move(rows)) {}

CoeffPlane cwt(std::span<const double> f, const ScaleGrid& grid, WaveletKind kind) {
    const std::size_t n = f.size();
    if (static_cast<double>(n) < 4.0 * grid.max()) {
        throw NumericError("series of length " + std::to_string(n) + " too short for scale " +
                           std::to_string(grid.max()) + " (need N >= 4 * max scale)");
    }
    std::vector<CoeffRow> rows;
    rows.reserve(grid.size());
    bool any_valid = false;
    for (double scale : grid.scales()) {
        const auto filter = make_filter(kind, scale);
        const auto r = static_cast<long>(filter.radius);
        const auto len = static_cast<long>(n);
        CoeffRow row;
        row.scale = scale;
        row.radius = filter.radius;
        row.coefficients.resize(n);
        for (long b = 0; b < len; ++b) {
            const long jlo = std::max(-r, -b);
            const long jhi = std::min(r, len - 1 - b);
            double acc = 0.0;
            for (long j = jlo; j <= jhi; ++j) {
                acc += filter.taps[static_cast<std::size_t>(j + r)] * f[static_cast<std::size_t>(b + j)];
            }
            row.coefficients[static_cast<std::size_t>(b)] = acc;
        }
        if (n > 2 * filter.radius) {
            row.valid_begin = filter.radius;
            row.valid_end = n - filter.radius;
            any_valid = true;
        }
        rows.push_back(std::move(row));
    }
    if (!any_valid) {
        throw NumericError("no scale has a coefficient clear of the series boundaries");
    }
    return CoeffPlane(kind, n, std::move(rows));
}

CoeffPlane cwt(const Series& s, const ScaleGrid& grid, WaveletKind kind) { return cwt(s.values(), grid, kind); }

}  // namespace hurstkit

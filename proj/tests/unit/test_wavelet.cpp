#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hurstkit/errors.hpp"
#include "hurstkit/wavelet.hpp"

using namespace hurstkit;

namespace {

std::vector<double> noise(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> x(n);
    for (auto& v : x) v = u(g);
    return x;
}

double rms(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s / static_cast<double>(x.size()));
}

}  // namespace

TEST(MotherWavelet, MexicanHatValues) {
    EXPECT_NEAR(mother_wavelet(WaveletKind::MexicanHat, 0.0), 0.867325, 1e-6);
    EXPECT_NEAR(mother_wavelet(WaveletKind::MexicanHat, 1.0), 0.0, 1e-15);
    EXPECT_EQ(mother_wavelet(WaveletKind::MexicanHat, 2.5), mother_wavelet(WaveletKind::MexicanHat, -2.5));
    EXPECT_LT(std::abs(mother_wavelet(WaveletKind::MexicanHat, support_radius(WaveletKind::MexicanHat))), 1e-6);
}

TEST(MotherWavelet, UnitEnergyAndZeroMean) {
    for (auto kind : {WaveletKind::MexicanHat, WaveletKind::Daub10}) {
        const double r = support_radius(kind);
        const double h = 1.0 / 1024.0;
        double mean = 0.0;
        double energy = 0.0;
        for (double t = -r; t <= r; t += h) {
            const double v = mother_wavelet(kind, t);
            mean += v * h;
            energy += v * v * h;
        }
        EXPECT_NEAR(mean, 0.0, 1e-6) << to_string(kind);
        EXPECT_NEAR(energy, 1.0, 1e-3) << to_string(kind);
        EXPECT_LT(std::abs(mother_wavelet(kind, r + 0.5)), 1e-7);
    }
}

TEST(Daubechies10, FilterIdentities) {
    const auto h = daubechies10_filter();
    ASSERT_EQ(h.size(), 20u);
    double sum = 0.0;
    double energy = 0.0;
    for (double v : h) {
        sum += v;
        energy += v * v;
    }
    EXPECT_NEAR(sum, std::numbers::sqrt2, 1e-12);
    EXPECT_NEAR(energy, 1.0, 1e-12);
    // Orthogonality to even shifts.
    for (std::size_t s = 2; s < 20; s += 2) {
        double dot = 0.0;
        for (std::size_t i = 0; i + s < 20; ++i) dot += h[i] * h[i + s];
        EXPECT_NEAR(dot, 0.0, 1e-12) << "shift " << s;
    }
}

TEST(WaveletNames, RoundTrip) {
    EXPECT_EQ(parse_wavelet_kind("mexican-hat"), WaveletKind::MexicanHat);
    EXPECT_EQ(parse_wavelet_kind(to_string(WaveletKind::Daub10)), WaveletKind::Daub10);
    EXPECT_THROW(parse_wavelet_kind("haar"), std::invalid_argument);
}

TEST(ScaleGrid, Validation) {
    EXPECT_THROW(ScaleGrid({2, 4, 8}), std::invalid_argument);
    EXPECT_THROW(ScaleGrid({1, 2, 4, 8}), std::invalid_argument);
    EXPECT_THROW(ScaleGrid({2, 4, 4, 8}), std::invalid_argument);
    EXPECT_NO_THROW(ScaleGrid({2, 3, 4, 5}));
}

TEST(ScaleGrid, DefaultGrid) {
    const auto g = default_grid(360);
    EXPECT_EQ(g.min(), 2.0);
    EXPECT_EQ(g.max(), 90.0);
    EXPECT_LE(g.size(), kDefaultGridCount);
    EXPECT_GE(g.size(), 4u);
    for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g.scales()[i - 1], g.scales()[i]);
    EXPECT_THROW(default_grid(63), std::invalid_argument);
    EXPECT_EQ(default_grid(500).max(), 125.0);
    EXPECT_GE(default_grid(64).size(), 4u);
    const auto dense = ScaleGrid::logarithmic(2, 5, 12);
    EXPECT_EQ(dense.size(), 4u);  // 2, 3, 4, 5 after rounding and deduplication
}

TEST(Filter, TapsSumToZeroAndAreSymmetric) {
    for (double a : {2.0, 3.0, 7.0, 45.0}) {
        const auto f = make_filter(WaveletKind::MexicanHat, a);
        EXPECT_EQ(f.radius, static_cast<std::size_t>(std::ceil(6.0 * a)));
        double sum = 0.0;
        for (double v : f.taps) sum += v;
        EXPECT_NEAR(sum, 0.0, 1e-14);
        for (std::size_t j = 0; j < f.taps.size(); ++j) EXPECT_EQ(f.taps[j], f.taps[f.taps.size() - 1 - j]);
    }
}

TEST(Cwt, ConstantAndRampVanish) {
    const std::size_t n = 600;
    std::vector<double> constant(n, 3.7);
    std::vector<double> ramp(n);
    for (std::size_t i = 0; i < n; ++i) ramp[i] = -2.0 + 0.01 * static_cast<double>(i);
    const auto grid = ScaleGrid::logarithmic(2, 40, 8);
    for (const auto* x : {&constant, &ramp}) {
        const auto plane = cwt(*x, grid, WaveletKind::MexicanHat);
        for (const auto& row : plane.rows()) {
            for (double w : row.valid()) ASSERT_NEAR(w, 0.0, 1e-8) << "scale " << row.scale;
        }
    }
    const auto d = cwt(constant, grid, WaveletKind::Daub10);
    for (const auto& row : d.rows()) {
        for (double w : row.valid()) ASSERT_NEAR(w, 0.0, 1e-8);
    }
}

TEST(Cwt, LinearityAndShiftCovariance) {
    const auto x = noise(800, 1);
    const auto y = noise(800, 2);
    const auto grid = ScaleGrid::logarithmic(2, 32, 6);
    std::vector<double> combo(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) combo[i] = 2.5 * x[i] - 0.75 * y[i];
    const auto px = cwt(x, grid, WaveletKind::MexicanHat);
    const auto py = cwt(y, grid, WaveletKind::MexicanHat);
    const auto pc = cwt(combo, grid, WaveletKind::MexicanHat);
    for (std::size_t s = 0; s < grid.size(); ++s) {
        const auto& rc = pc.rows()[s];
        for (std::size_t b = rc.valid_begin; b < rc.valid_end; ++b) {
            ASSERT_NEAR(rc.coefficients[b], 2.5 * px.rows()[s].coefficients[b] - 0.75 * py.rows()[s].coefficients[b],
                        1e-10);
        }
    }
    const std::size_t shift = 37;
    const std::vector<double> shifted(x.begin() + shift, x.end());
    const auto ps = cwt(shifted, grid, WaveletKind::MexicanHat);
    for (std::size_t s = 0; s < grid.size(); ++s) {
        const auto& row = ps.rows()[s];
        for (std::size_t b = row.valid_begin; b < row.valid_end; ++b) {
            ASSERT_NEAR(row.coefficients[b], px.rows()[s].coefficients[b + shift], 1e-10);
        }
    }
}

TEST(Cwt, ValidMaskIsTheConeOfInfluence) {
    const auto grid = ScaleGrid({2, 4, 8, 16});
    const auto plane = cwt(noise(100, 3), grid, WaveletKind::MexicanHat);
    ASSERT_EQ(plane.rows().size(), 4u);
    const auto& r16 = plane.rows()[3];
    EXPECT_EQ(r16.radius, 96u);
    EXPECT_EQ(r16.valid_count(), 0u);  // 2 * 96 >= 100
    const auto& r2 = plane.rows()[0];
    EXPECT_EQ(r2.valid_begin, 12u);
    EXPECT_EQ(r2.valid_end, 88u);
    EXPECT_FALSE(r2.is_valid(11));
    EXPECT_TRUE(r2.is_valid(12));
}

TEST(Cwt, Errors) {
    EXPECT_THROW(cwt(noise(60, 1), ScaleGrid({2, 4, 8, 16}), WaveletKind::MexicanHat), NumericError);
    EXPECT_THROW(cwt(noise(80, 1), ScaleGrid({8, 12, 16, 20}), WaveletKind::MexicanHat), NumericError);
}

TEST(Cwt, CosinePeaksWhereTheFourierOracleDoes) {
    // For f = cos(w t), |W(a, .)| has amplitude sqrt(a) |psi_hat(a w)| with
    // psi_hat(u) = c sqrt(2 pi) u^2 exp(-u^2 / 2) for the Mexican hat.
    const double omega = 2.0 * std::numbers::pi / 40.0;
    const std::size_t n = 2400;
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = std::cos(omega * static_cast<double>(i));
    std::vector<double> scales;
    for (int a = 4; a <= 24; ++a) scales.push_back(a);
    const auto plane = cwt(f, ScaleGrid(scales), WaveletKind::MexicanHat);
    const double c = 2.0 / (std::sqrt(3.0) * std::pow(std::numbers::pi, 0.25));
    std::size_t best_measured = 0;
    std::size_t best_oracle = 0;
    double peak_measured = 0.0;
    double peak_oracle = 0.0;
    for (std::size_t s = 0; s < scales.size(); ++s) {
        const double a = scales[s];
        const double u = a * omega;
        const double oracle = std::sqrt(a) * c * std::sqrt(2.0 * std::numbers::pi) * u * u * std::exp(-u * u / 2.0);
        const double measured = rms(plane.rows()[s].valid()) * std::numbers::sqrt2;
        EXPECT_NEAR(measured / oracle, 1.0, 5e-3) << "scale " << a;
        if (measured > peak_measured) {
            peak_measured = measured;
            best_measured = s;
        }
        if (oracle > peak_oracle) {
            peak_oracle = oracle;
            best_oracle = s;
        }
    }
    EXPECT_EQ(best_measured, best_oracle);
    EXPECT_EQ(scales[best_oracle], 10.0);  // sqrt(2.5) / omega = 10.07
}

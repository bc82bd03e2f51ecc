#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hurstkit/series.hpp"
#include "hurstkit/wavelet.hpp"

namespace hurstkit {

enum class Dispersion { Mad, UnbiasedVariance };
enum class SignalClass { FGN, FBM };
enum class Method { AwcMad, AwcVar, RS };

std::string_view to_string(SignalClass c);
// "awc-mad", "awc-var", "rs"
std::string_view to_string(Method m);
Method parse_method(std::string_view name);

// Even lengths use the midpoint of the two central order statistics.
double median(std::span<const double> x);

// Median of |x - median(x)|. Throws std::invalid_argument on empty input.
double mad(std::span<const double> x);

// 1/(m-1) sum (x_i - mean)^2. Throws std::invalid_argument when m < 2.
double unbiased_variance(std::span<const double> x);

// A scale enters the spectrum only when it has at least
// max(min_valid, ceil(min_span * scale)) boundary-free coefficients.
struct RetentionRule {
    std::size_t min_valid = 16;
    double min_span = 4.0;

    std::size_t required(double scale) const;
};

struct SpectrumPoint {
    double scale;
    double dispersion;
    std::size_t valid_count;
};

struct ScaleSpectrum {
    std::vector<SpectrumPoint> points;
    Dispersion kind = Dispersion::Mad;
    std::vector<double> dropped_scales;
};

// Valid coefficients of one scale; lets callers feed a sub-range of a larger plane.
struct ScaleSample {
    double scale;
    std::span<const double> valid;
};

// Throws NumericError when fewer than 4 scales survive the retention rule.
ScaleSpectrum awc_spectrum(std::span<const ScaleSample> samples, Dispersion kind, const RetentionRule& rule = {});
ScaleSpectrum awc_spectrum(const CoeffPlane& plane, Dispersion kind, const RetentionRule& rule = {});

struct LogLogFit {
    double slope;
    double intercept;
    double r_squared;
    double beta;
    bool beta_clamped;
};

// OLS of log2 d(a) on log2 a. beta = 2 * slope for MAD (a scale statistic),
// beta = slope for the variance; then clamped to [-1, 3].
LogLogFit fit_loglog(const ScaleSpectrum& spectrum);

struct HurstClassification {
    double hurst;
    SignalClass signal_class;
};

// beta < 1: fGn, H = (beta + 1) / 2.  beta in [1, 3]: fBm, H = (beta - 1) / 2.
HurstClassification beta_to_hurst(double beta);

struct HurstEstimate {
    Method method = Method::AwcMad;
    double beta = 0.0;
    double hurst = 0.0;
    SignalClass signal_class = SignalClass::FGN;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double scale_min = 0.0;
    double scale_max = 0.0;
    std::size_t scales_count = 0;
    bool beta_clamped = false;
    bool hurst_clamped = false;

    friend bool operator==(const HurstEstimate&, const HurstEstimate&) = default;
};

struct EstimatorConfig {
    Method method = Method::AwcMad;
    WaveletKind wavelet = WaveletKind::MexicanHat;
    std::optional<ScaleGrid> grid;  // default_grid(n) when unset
    RetentionRule retention{};

    ScaleGrid grid_for(std::size_t n) const { return grid ? *grid : default_grid(n); }
};

// Throws std::invalid_argument for Method::RS.
Dispersion dispersion_for(Method method);

// cwt -> awc_spectrum -> fit_loglog -> beta_to_hurst.
HurstEstimate estimate_hurst(const Series& s, const EstimatorConfig& cfg = {});

// Same pipeline from precomputed valid coefficients.
HurstEstimate estimate_from_samples(std::span<const ScaleSample> samples, const EstimatorConfig& cfg);

// Rescaled range over dyadic block sizes 8 .. N/2, non-overlapping full blocks.
HurstEstimate rs_hurst(const Series& s);

// Dispatches on cfg.method.
HurstEstimate estimate(const Series& s, const EstimatorConfig& cfg = {});

}  // namespace hurstkit

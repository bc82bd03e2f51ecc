#include "hurstkit/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hurstkit/errors.hpp"

namespace hurstkit {

std::string_view to_string(SignalClass c) { return c == SignalClass::FGN ? "fGn" : "fBm"; }

std::string_view to_string(Method m) {
    switch (m) {
        case Method::AwcMad: return "awc-mad";
        case Method::AwcVar: return "awc-var";
        case Method::RS: return "rs";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    for (auto m : {Method::AwcMad, Method::AwcVar, Method::RS}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

namespace {

// Median of a scratch buffer, reordering it.
double median_inplace(std::vector<double>& v) {
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (n % 2 == 1) {
        return upper;
    }
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return (lower + upper) / 2.0;
}

struct Ols {
    double slope;
    double intercept;
    double r_squared;
};

Ols ordinary_least_squares(std::span<const double> x, std::span<const double> y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx <= 0.0) {
        throw NumericError("regression abscissae are all equal");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double r2 = 1.0;
    if (syy > 0.0) {
        double ssr = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double e = y[i] - (intercept + slope * x[i]);
            ssr += e * e;
        }
        r2 = std::clamp(1.0 - ssr / syy, 0.0, 1.0);
    }
    return {slope, intercept, r2};
}

}  // namespace

double median(std::span<const double> x) {
    if (x.empty()) {
        throw std::invalid_argument("median of empty input");
    }
    std::vector<double> v(x.begin(), x.end());
    return median_inplace(v);
}

double mad(std::span<const double> x) {
    if (x.empty()) {
        throw std::invalid_argument("MAD of empty input");
    }
    std::vector<double> v(x.begin(), x.end());
    const double med = median_inplace(v);
    for (std::size_t i = 0; i < x.size(); ++i) {
        v[i] = std::fabs(x[i] - med);
    }
    return median_inplace(v);
}

double unbiased_variance(std::span<const double> x) {
    if (x.size() < 2) {
        throw std::invalid_argument("unbiased variance needs at least 2 values");
    }
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return ss / static_cast<double>(x.size() - 1);
}

std::size_t RetentionRule::required(double scale) const {
    const auto span_count = static_cast<std::size_t>(std::ceil(min_span * scale));
    return std::max(min_valid, span_count);
}

ScaleSpectrum awc_spectrum(std::span<const ScaleSample> samples, Dispersion kind, const RetentionRule& rule) {
    ScaleSpectrum out;
    out.kind = kind;
    for (const auto& s : samples) {
        if (s.valid.size() < std::max<std::size_t>(rule.required(s.scale), 2)) {
            out.dropped_scales.push_back(s.scale);
            continue;
        }
        const double d = kind == Dispersion::Mad ? mad(s.valid) : unbiased_variance(s.valid);
        out.points.push_back({s.scale, d, s.valid.size()});
    }
    if (out.points.size() < 4) {
        throw NumericError("only " + std::to_string(out.points.size()) +
                           " scales have enough boundary-free coefficients (need 4)");
    }
    return out;
}

ScaleSpectrum awc_spectrum(const CoeffPlane& plane, Dispersion kind, const RetentionRule& rule) {
    std::vector<ScaleSample> samples;
    samples.reserve(plane.rows().size());
    for (const auto& row : plane.rows()) {
        samples.push_back({row.scale, row.valid()});
    }
    return awc_spectrum(samples, kind, rule);
}

LogLogFit fit_loglog(const ScaleSpectrum& spectrum) {
    if (spectrum.points.size() < 4) {
        throw NumericError("log-log fit needs at least 4 scales");
    }
    std::vector<double> x, y;
    x.reserve(spectrum.points.size());
    y.reserve(spectrum.points.size());
    for (const auto& p : spectrum.points) {
        if (!(p.dispersion > 0.0)) {
            throw NumericError("zero dispersion at scale " + std::to_string(p.scale) + " (degenerate input)");
        }
        x.push_back(std::log2(p.scale));
        y.push_back(std::log2(p.dispersion));
    }
    const auto ols = ordinary_least_squares(x, y);
    const double raw_beta = spectrum.kind == Dispersion::Mad ? 2.0 * ols.slope : ols.slope;
    const double beta = std::clamp(raw_beta, -1.0, 3.0);
    return LogLogFit{ols.slope, ols.intercept, ols.r_squared, beta, beta != raw_beta};
}

HurstClassification beta_to_hurst(double beta) {
    if (!(beta >= -1.0 && beta <= 3.0)) {
        throw std::domain_error("beta outside [-1, 3]: " + std::to_string(beta));
    }
    if (beta < 1.0) {
        return {(beta + 1.0) / 2.0, SignalClass::FGN};
    }
    return {(beta - 1.0) / 2.0, SignalClass::FBM};
}

Dispersion dispersion_for(Method method) {
    switch (method) {
        case Method::AwcMad: return Dispersion::Mad;
        case Method::AwcVar: return Dispersion::UnbiasedVariance;
        case Method::RS: break;
    }
    throw std::invalid_argument("R/S has no wavelet dispersion kind");
}

HurstEstimate estimate_from_samples(std::span<const ScaleSample> samples, const EstimatorConfig& cfg) {
    const auto spectrum = awc_spectrum(samples, dispersion_for(cfg.method), cfg.retention);
    const auto fit = fit_loglog(spectrum);
    const auto cls = beta_to_hurst(fit.beta);
    HurstEstimate e;
    e.method = cfg.method;
    e.beta = fit.beta;
    e.hurst = std::clamp(cls.hurst, 0.0, 1.0);
    e.hurst_clamped = e.hurst != cls.hurst;
    e.signal_class = cls.signal_class;
    e.slope = fit.slope;
    e.intercept = fit.intercept;
    e.r_squared = fit.r_squared;
    e.scale_min = spectrum.points.front().scale;
    e.scale_max = spectrum.points.back().scale;
    e.scales_count = spectrum.points.size();
    e.beta_clamped = fit.beta_clamped;
    return e;
}

HurstEstimate estimate_hurst(const Series& s, const EstimatorConfig& cfg) {
    if (s.size() < 64) {
        throw NumericError("wavelet estimator needs at least 64 samples, got " + std::to_string(s.size()));
    }
    const auto plane = cwt(s, cfg.grid_for(s.size()), cfg.wavelet);
    std::vector<ScaleSample> samples;
    samples.reserve(plane.rows().size());
    for (const auto& row : plane.rows()) {
        samples.push_back({row.scale, row.valid()});
    }
    return estimate_from_samples(samples, cfg);
}

HurstEstimate rs_hurst(const Series& s) {
    const std::size_t n = s.size();
    if (n < 64) {
        throw NumericError("R/S needs at least 64 samples, got " + std::to_string(n));
    }
    const auto x = s.values();
    std::vector<double> log_w, log_rs;
    for (std::size_t w = 8; w <= n / 2; w *= 2) {
        const std::size_t blocks = n / w;
        double acc = 0.0;
        for (std::size_t k = 0; k < blocks; ++k) {
            const auto block = x.subspan(k * w, w);
            double mean = 0.0;
            for (double v : block) mean += v;
            mean /= static_cast<double>(w);
            double cum = 0.0, lo = 0.0, hi = 0.0, ss = 0.0;
            for (double v : block) {
                const double d = v - mean;
                cum += d;
                lo = std::min(lo, cum);
                hi = std::max(hi, cum);
                ss += d * d;
            }
            const double sd = std::sqrt(ss / static_cast<double>(w));
            if (!(sd > 0.0)) {
                throw NumericError("zero standard deviation in R/S block of size " + std::to_string(w));
            }
            acc += (hi - lo) / sd;
        }
        log_w.push_back(std::log2(static_cast<double>(w)));
        log_rs.push_back(std::log2(acc / static_cast<double>(blocks)));
    }
    const auto ols = ordinary_least_squares(log_w, log_rs);
    // Increment-series reading: class fGn, beta = 2H - 1 with H capped just below 1.
    const double below_one = std::nextafter(1.0, 0.0);
    HurstEstimate e;
    e.method = Method::RS;
    e.hurst = std::clamp(ols.slope, 0.0, below_one);
    e.hurst_clamped = e.hurst != ols.slope;
    e.beta = 2.0 * e.hurst - 1.0;
    e.signal_class = SignalClass::FGN;
    e.slope = ols.slope;
    e.intercept = ols.intercept;
    e.r_squared = ols.r_squared;
    e.scale_min = 8.0;
    e.scale_max = std::exp2(log_w.back());
    e.scales_count = log_w.size();
    return e;
}

HurstEstimate estimate(const Series& s, const EstimatorConfig& cfg) {
    return cfg.method == Method::RS ? rs_hurst(s) : estimate_hurst(s, cfg);
}

}  // namespace hurstkit

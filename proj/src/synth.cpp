#include "hurstkit/synth.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <fftw3.h>

#include "hurstkit/errors.hpp"
#include "hurstkit/random.hpp"

namespace hurstkit {

std::string_view to_string(ProcessKind kind) { return kind == ProcessKind::Fgn ? "fgn" : "fbm"; }

ProcessKind parse_process_kind(std::string_view name) {
    if (name == "fgn") return ProcessKind::Fgn;
    if (name == "fbm") return ProcessKind::Fbm;
    throw std::invalid_argument("unknown process kind '" + std::string(name) + "'");
}

void FractionalSpec::validate() const {
    if (n < 2) {
        throw std::invalid_argument("fractional series needs n >= 2");
    }
    if (!(hurst > 0.0 && hurst < 1.0)) {
        throw std::invalid_argument("hurst must lie strictly inside (0, 1)");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("sigma must be positive");
    }
}

double fgn_autocovariance(double hurst, std::size_t lag, double sigma) {
    const double k = static_cast<double>(lag);
    const double e = 2.0 * hurst;
    return 0.5 * sigma * sigma * (std::pow(k + 1.0, e) - 2.0 * std::pow(k, e) + std::pow(std::fabs(k - 1.0), e));
}

namespace {

// FFTW's planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

// In-place forward DFT, X_k = sum_j x_j exp(-2 pi i jk / m).
class ForwardDft {
public:
    explicit ForwardDft(std::size_t m) : m_(m), data_(fftw_alloc_complex(m)) {
        if (!data_) {
            throw std::bad_alloc();
        }
        std::lock_guard lock(planner_mutex());
        plan_ = fftw_plan_dft_1d(static_cast<int>(m), data_.get(), data_.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    }
    ~ForwardDft() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }
    ForwardDft(const ForwardDft&) = delete;
    ForwardDft& operator=(const ForwardDft&) = delete;

    fftw_complex* data() { return data_.get(); }
    void execute() { fftw_execute(plan_); }
    std::size_t size() const { return m_; }

private:
    std::size_t m_;
    FftwBuffer data_;
    fftw_plan plan_;
};

std::string synth_label(const FractionalSpec& spec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s(H=%g)", std::string(to_string(spec.kind)).c_str(), spec.hurst);
    return buf;
}

std::vector<double> circulant_fgn(const FractionalSpec& spec) {
    const std::size_t n = spec.n;
    const std::size_t m = 2 * n;
    ForwardDft dft(m);
    auto* buf = dft.data();

    for (std::size_t k = 0; k <= n; ++k) {
        buf[k][0] = fgn_autocovariance(spec.hurst, k, spec.sigma);
        buf[k][1] = 0.0;
    }
    for (std::size_t k = n + 1; k < m; ++k) {
        buf[k][0] = buf[m - k][0];
        buf[k][1] = 0.0;
    }
    dft.execute();
    std::vector<double> scale(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double lambda = buf[k][0];
        if (lambda < -1e-9) {
            throw NumericError("circulant embedding is not positive semidefinite (eigenvalue " +
                               std::to_string(lambda) + "); double the embedding size");
        }
        scale[k] = std::sqrt(std::max(lambda, 0.0) / static_cast<double>(m));
    }

    GaussianSource rng(spec.seed);
    for (std::size_t k = 0; k < m; ++k) {
        const double re = rng.next();
        const double im = rng.next();
        buf[k][0] = scale[k] * re;
        buf[k][1] = scale[k] * im;
    }
    dft.execute();
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = buf[k][0];
    }
    return out;
}

}  // namespace

Series generate_fgn(const FractionalSpec& spec) {
    spec.validate();
    if (spec.kind != ProcessKind::Fgn) {
        throw std::invalid_argument("generate_fgn called with an fBm spec");
    }
    return Series(circulant_fgn(spec), Instant{}, Duration{1}, synth_label(spec));
}

Series generate_fbm(const FractionalSpec& spec) {
    spec.validate();
    if (spec.kind != ProcessKind::Fbm) {
        throw std::invalid_argument("generate_fbm called with an fGn spec");
    }
    auto path = circulant_fgn(spec);
    double acc = 0.0;
    for (auto& v : path) {
        acc += v;
        v = acc;
    }
    return Series(std::move(path), Instant{}, Duration{1}, synth_label(spec));
}

Series generate(const FractionalSpec& spec) {
    return spec.kind == ProcessKind::Fgn ? generate_fgn(spec) : generate_fbm(spec);
}

Series hosking_fgn(const FractionalSpec& spec) {
    spec.validate();
    if (spec.n > kHoskingMaxLength) {
        throw std::invalid_argument("hosking_fgn is O(n^2); n must be <= " + std::to_string(kHoskingMaxLength));
    }
    const std::size_t n = spec.n;
    std::vector<double> gamma(n);
    for (std::size_t k = 0; k < n; ++k) {
        gamma[k] = fgn_autocovariance(spec.hurst, k, spec.sigma);
    }
    GaussianSource rng(spec.seed);
    std::vector<double> x(n), phi, prev;
    double v = gamma[0];
    x[0] = std::sqrt(v) * rng.next();
    phi.reserve(n);
    for (std::size_t t = 1; t < n; ++t) {
        // phi_{t,t} = (gamma(t) - sum_{j=1}^{t-1} phi_{t-1,j} gamma(t-j)) / v_{t-1}
        double num = gamma[t];
        for (std::size_t j = 1; j < t; ++j) {
            num -= prev[j - 1] * gamma[t - j];
        }
        const double kappa = num / v;
        phi.assign(t, 0.0);
        for (std::size_t j = 1; j < t; ++j) {
            phi[j - 1] = prev[j - 1] - kappa * prev[t - j - 1];
        }
        phi[t - 1] = kappa;
        v *= 1.0 - kappa * kappa;
        double mean = 0.0;
        for (std::size_t j = 1; j <= t; ++j) {
            mean += phi[j - 1] * x[t - j];
        }
        x[t] = mean + std::sqrt(v) * rng.next();
        prev.swap(phi);
    }
    auto label_spec = spec;
    label_spec.kind = ProcessKind::Fgn;
    return Series(std::move(x), Instant{}, Duration{1}, synth_label(label_spec));
}

}  // namespace hurstkit

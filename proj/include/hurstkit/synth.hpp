#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "hurstkit/series.hpp"

namespace hurstkit {

enum class ProcessKind { Fgn, Fbm };

// "fgn", "fbm"
std::string_view to_string(ProcessKind kind);
ProcessKind parse_process_kind(std::string_view name);

struct FractionalSpec {
    std::size_t n = 0;
    double hurst = 0.5;
    double sigma = 1.0;
    std::uint64_t seed = 0;
    ProcessKind kind = ProcessKind::Fgn;

    // Throws std::invalid_argument unless n >= 2, 0 < hurst < 1, sigma > 0.
    void validate() const;
};

// (sigma^2 / 2) (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H})
double fgn_autocovariance(double hurst, std::size_t lag, double sigma = 1.0);

// Exact fGn by circulant embedding (Davies-Harte): eigenvalues of the
// 2n-circulant built from gamma(0..n), complex Gaussian synthesis, real part.
// Output is a pure function of the spec. Requires spec.kind == Fgn.
Series generate_fgn(const FractionalSpec& spec);

// Running sum of generate_fgn for the same seed (B(0) = 0 dropped).
// Requires spec.kind == Fbm.
Series generate_fbm(const FractionalSpec& spec);

// Dispatches on spec.kind.
Series generate(const FractionalSpec& spec);

inline constexpr std::size_t kHoskingMaxLength = 4096;

// Durbin-Levinson (Hosking) recursion, O(n^2). Independent cross-check for
// generate_fgn; n <= kHoskingMaxLength.
Series hosking_fgn(const FractionalSpec& spec);

}  // namespace hurstkit

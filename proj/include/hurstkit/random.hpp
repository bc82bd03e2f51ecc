#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace hurstkit {

// Seeded standard-normal stream: std::mt19937_64, 53-bit uniforms and the
// Marsaglia polar method. Identical output on every conforming platform.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    // Uniform on the open interval (0, 1).
    double uniform();

    double next();

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

}  // namespace hurstkit

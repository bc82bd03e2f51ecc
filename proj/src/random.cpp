#include "hurstkit/random.hpp"

#include <cmath>

namespace hurstkit {

double GaussianSource::uniform() {
    while (true) {
        const auto bits = engine_() >> 11;
        const double u = static_cast<double>(bits) * 0x1.0p-53;
        if (u > 0.0) {
            return u;
        }
    }
}

double GaussianSource::next() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    while (true) {
        const double u = 2.0 * uniform() - 1.0;
        const double v = 2.0 * uniform() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            const double f = std::sqrt(-2.0 * std::log(s) / s);
            spare_ = v * f;
            return u * f;
        }
    }
}

}  // namespace hurstkit

#pragma once

#include <stdexcept>
#include <string>

namespace hurstkit {

// Malformed or inconsistent input data (bad rows, gaps, schema mismatch).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input that is well-formed but numerically degenerate for an estimator
// (zero dispersion, too few usable scales, non-PSD embedding, ...).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hurstkit

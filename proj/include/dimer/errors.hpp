#pragma once

#include <stdexcept>
#include <string>

namespace dimer {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad grid dimensions (odd cell count, torus with an odd side, ...).
struct InvalidDimensions : Error {
    using Error::Error;
};

// A non-B0 sign class was requested for a rectangle.
struct InvalidSignClass : Error {
    using Error::Error;
};

// Gaussian-integer division left a remainder. This indicates a bug in the
// caller (fraction-free elimination guarantees exact divisions), not bad input.
struct InexactDivision : Error {
    using Error::Error;
};

// A spectral product did not round cleanly to an integer at the working
// precision. Retry with more bits.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// The calibrated torus sign convention produced a negative or non-integral
// combination of determinants.
struct SignCalibrationFailure : Error {
    using Error::Error;
};

// Exhaustive enumeration was requested beyond the configured cell limit.
struct SizeLimitExceeded : Error {
    using Error::Error;
};

// A boundary configuration is malformed for the given rectangle.
struct InvalidBoundary : Error {
    using Error::Error;
};

// A tiling code does not decode to a matching.
struct InvalidCode : Error {
    InvalidCode(const std::string& msg, long bit) : Error(msg), bit_index(bit) {}
    long bit_index;
};

// Adaptive quadrature could not certify the requested tolerance.
struct ToleranceNotMet : Error {
    using Error::Error;
};

}  // namespace dimer
